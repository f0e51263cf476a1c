#include <gtest/gtest.h>

#include "kfano/datasets.hpp"

using namespace kfano;

namespace {

const ScaffoldingRecord& record() {
    static ScaffoldingRecord r = scaffolding_record("mm2-10");
    return r;
}

const AmbientData& ambient() {
    static AmbientData a = ambient_from_scaffolding(record().scaffolding, record().ray_names, record().pic_basis);
    return a;
}

std::set<QVec> vertex_set(const Polytope& p) { return {p.vertices().begin(), p.vertices().end()}; }

QVec q(std::initializer_list<long> xs) { return to_q(ivec(xs)); }

}  // namespace

TEST(StrutPolytope, Squares) {
    const auto& s = record().scaffolding;
    EXPECT_EQ(vertex_set(strut_polytope(s, s.struts[0])), (std::set<QVec>{q({0, 0, 1}), q({1, 0, 1}), q({0, 1, 1}), q({1, 1, 1})}));
    EXPECT_EQ(vertex_set(strut_polytope(s, s.struts[2])), (std::set<QVec>{q({1, 1, 0}), q({1, -1, 0}), q({-1, 1, 0}), q({-1, -1, 0})}));
    for (const auto& st : s.struts) EXPECT_TRUE(strut_is_ample(s, st)) << st.name;
}

TEST(StrutPolytope, ZeroDivisorIsAPoint) {
    const auto& s = record().scaffolding;
    Strut z{"z", IVec(4, Int(0)), ivec({0})};
    Polytope p = strut_polytope(s, z);
    EXPECT_EQ(p.vertices().size(), 1u);
    EXPECT_FALSE(strut_is_ample(s, z));
    Strut wrong{"w", IVec(3, Int(0)), ivec({0})};
    EXPECT_THROW(strut_polytope(s, wrong), InputError);
}

TEST(VerifyScaffolding, CoversPolytope) {
    EXPECT_TRUE(verify_scaffolding(record().scaffolding, builtin_polytope("mm2-10").polytope()));
}

TEST(VerifyScaffolding, MissingStrutFails) {
    auto s = record().scaffolding;
    s.struts.pop_back();  // drop D_x
    EXPECT_FALSE(verify_scaffolding(s, builtin_polytope("mm2-10").polytope()));
}

TEST(VerifyScaffolding, SingleStrutCoveringItself) {
    Scaffolding s{{ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})}, {{"d", ivec({1, 1, 1}), {}}}, 0};
    Polytope p = strut_polytope(s, s.struts[0]);
    EXPECT_EQ(p.vertices().size(), 3u);
    EXPECT_TRUE(verify_scaffolding(s, p));
}

TEST(Ambient, RaysWeightsAndRank) {
    const auto& a = ambient();
    EXPECT_EQ(a.rays, (std::vector<IVec>{ivec({0, 0, -1, -1, 1}), ivec({-1, -1, 0, 0, -1}), ivec({-1, -1, -1, -1, 0}),
                                         ivec({1, 0, 0, 0, 0}), ivec({0, 1, 0, 0, 0}), ivec({0, 0, 1, 0, 0}), ivec({0, 0, 0, 1, 0})}));
    EXPECT_EQ(a.weights, (std::vector<IVec>{ivec({1, 1, -1, 0, 0, 0, 0}), ivec({0, 0, 1, 1, 1, 1, 1})}));
    EXPECT_TRUE(a.smooth);
    EXPECT_TRUE(a.complete);
    EXPECT_EQ(a.picard_rank, 2);
    for (const auto& w : a.weights) EXPECT_TRUE(is_zero(a.ray_map.apply(w)));
}

TEST(Ambient, RedundantStrutRejected) {
    // 2(m1+m2+m3) <= 1 makes m1+m2+m3 <= 1 redundant, so Q_S has fewer facets than rays
    Scaffolding s{{ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})}, {{"a", ivec({1, 1, 1}), {}}, {"b", ivec({2, 2, 2}), {}}}, 0};
    EXPECT_THROW(ambient_from_scaffolding(s), Error);
}

TEST(Embedding, PerpBasisAndBinomials) {
    auto e = embedding_equations(record().scaffolding, ambient());
    EXPECT_EQ(e.h, (std::vector<IVec>{ivec({1, 0, 1, 0, 0}), ivec({0, 1, 0, 1, 0})}));
    const auto& names = record().ray_names;
    auto expect = parse_polynomials({"x2*x4 - s0*s1*x^2", "x3*x5 - s0*s1*x^2"}, names);
    ASSERT_EQ(e.binomials.size(), 2u);
    for (size_t i = 0; i < 2; ++i) EXPECT_TRUE(e.binomials[i] == expect[i] || e.binomials[i] == -expect[i]);
    EXPECT_TRUE(binomials_vanish_on_torus(ambient(), e));
    EXPECT_TRUE(theta_maps_into_fan(builtin_polytope("mm2-10").polytope(), e.theta, ambient().fan));
}

TEST(Embedding, SurjectiveThetaGivesNoEquations) {
    // shape rays form a basis and N_U = 0, so theta is an isomorphism
    Scaffolding s{{ivec({1, 0}), ivec({0, 1})}, {{"d", ivec({1, 1}), {}}}, 0};
    AmbientData a = ambient_from_scaffolding(s);
    auto e = embedding_equations(s, a);
    EXPECT_TRUE(e.h.empty());
    EXPECT_TRUE(e.binomials.empty());
}

TEST(Adjunction, DegreeSixteen) {
    auto c = adjunction_degree_check(ambient(), record().pic_basis, record().equation_classes);
    EXPECT_EQ(c.anticanonical_class, ivec({1, 5}));
    EXPECT_EQ(c.fano_class, ivec({1, 1}));
    EXPECT_EQ(c.degree, 16);
    EXPECT_EQ(c.degree, anticanonical_degree(builtin_polytope("mm2-10").polytope()));
}

TEST(MixedIntersection, NonNefRejected) {
    const auto& a = ambient();
    IVec bad = divisor_of_class(a, record().pic_basis, ivec({-1, 1}));
    EXPECT_FALSE(is_nef(bad, a.fan));
    std::vector<IVec> divs(5, divisor_of_class(a, record().pic_basis, ivec({0, 1})));
    divs[0] = bad;
    EXPECT_THROW(mixed_intersection(a, divs), InputError);
    EXPECT_THROW(mixed_intersection(a, {bad}), InputError);
}

TEST(MixedIntersection, ProjectiveSpaceSelfIntersection) {
    // L2 pulls back the hyperplane class of P^5 under the blowup, so L2^5 = 1
    const auto& a = ambient();
    std::vector<IVec> divs(5, divisor_of_class(a, record().pic_basis, ivec({0, 1})));
    EXPECT_EQ(mixed_intersection(a, divs), 1);
}
