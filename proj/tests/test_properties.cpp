#include <gtest/gtest.h>

#include "property_suites.hpp"

using namespace kfano;

namespace {

constexpr size_t kMinInstances = 200;

void expect_suite(const props::SuiteResult& r, size_t min = kMinInstances) {
    EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
    EXPECT_GE(r.instances, min) << r.name;
}

}  // namespace

TEST(Properties, PolarInvolution) { expect_suite(props::polar_involution(kMinInstances)); }

TEST(Properties, EulerRelations) { expect_suite(props::euler_relations(kMinInstances)); }

TEST(Properties, PickOnFaces) { expect_suite(props::pick_on_faces(kMinInstances)); }

TEST(Properties, VolumeUnderUnimodularMaps) { expect_suite(props::volume_invariance(kMinInstances)); }

TEST(Properties, ReducedGroebnerBasisIsUnique) { expect_suite(props::reduced_gb_uniqueness(kMinInstances)); }

TEST(Properties, ToricIdealVanishesOnParametrization) { expect_suite(props::toric_substitution(kMinInstances)); }

TEST(Properties, DemazureRootsOnReflexivePolygons) {
    size_t classes = 0;
    auto r = props::demazure_oracle(&classes);
    expect_suite(r);
    EXPECT_EQ(classes, 16u);
}

TEST(Properties, ChartT1MatchesBruteForce) {
    auto r = props::chart_t1_box(8);
    EXPECT_EQ(r.failures, 0u) << r.first_failure;
    EXPECT_GT(r.instances, 0u);
}
