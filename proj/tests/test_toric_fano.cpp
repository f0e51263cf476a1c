#include <gtest/gtest.h>

#include "kfano/datasets.hpp"

using namespace kfano;

namespace {

Polytope builtin(const std::string& name) { return builtin_polytope(name).polytope(); }

Polytope simplex3() { return hull(std::vector<IVec>{ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1}), ivec({-1, -1, -1})}); }

}  // namespace

TEST(Degree, Embedded) {
    EXPECT_EQ(anticanonical_degree(builtin("deg12-prism")), 12);
    EXPECT_EQ(anticanonical_degree(builtin("fat-point-44-3")), Rat(44, 3));
    EXPECT_EQ(anticanonical_degree(builtin("mm4-3")), 28);
    EXPECT_EQ(anticanonical_degree(builtin("mm2-10")), 16);
    EXPECT_EQ(anticanonical_degree(simplex3()), 64);
}

TEST(KPolystable, Embedded) {
    for (const char* n : {"deg12-prism", "fat-point-44-3", "mm4-3", "mm2-10"}) EXPECT_TRUE(is_k_polystable(builtin(n))) << n;
}

TEST(KPolystable, PerturbedPrismFails) {
    auto v = builtin_polytope("deg12-prism").vertices;
    v[0] = ivec({2, 1, 1});
    EXPECT_FALSE(is_k_polystable(hull(v)));
}

TEST(DemazureRoots, ProjectiveSpaces) {
    Polytope p2 = hull(std::vector<IVec>{ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})});
    EXPECT_EQ(demazure_roots(p2).size(), 6u);
    Polytope p1 = hull(std::vector<IVec>{ivec({1}), ivec({-1})});
    auto a = aut_structure(p1);
    EXPECT_EQ(a.roots.size(), 2u);
    EXPECT_FALSE(a.split);
    EXPECT_EQ(demazure_roots(simplex3()).size(), 12u);
}

TEST(DemazureRoots, PrismHasNone) {
    auto a = aut_structure(builtin("deg12-prism"));
    EXPECT_TRUE(a.roots.empty());
    EXPECT_TRUE(a.split);
    EXPECT_EQ(a.finite.order(), 24u);
}

TEST(DemazureRoots, RootsLieInPolar) {
    for (const char* n : {"deg12-prism", "mm4-3", "mm2-10"}) {
        Polytope p = builtin(n);
        Polytope q = polar(p);
        for (const auto& m : demazure_roots(p)) {
            EXPECT_TRUE(q.contains(to_q(m)));
            int minus = 0;
            for (const auto& v : p.lattice_vertices()) minus += idot(m, v) == -1;
            EXPECT_EQ(minus, 1);
        }
    }
}

TEST(Betti, ProjectiveSpace) {
    auto b = betti_3fold(face_fan(simplex3()));
    EXPECT_EQ(b.b, (std::array<long, 7>{1, 0, 1, 0, 1, 0, 1}));
    EXPECT_EQ(b.chi, 4);
}

TEST(Betti, Deg12) {
    auto b = betti_3fold(face_fan(builtin("deg12-prism")));
    EXPECT_EQ(b.b[2], 1);
    EXPECT_EQ(b.b[3], 4);
    EXPECT_EQ(b.b[4], 9);
    EXPECT_EQ(b.chi, 8);
}

TEST(Betti, AlternatingSumIsEuler) {
    for (const auto& rec : builtin_polytopes()) {
        Polytope p = rec.polytope();
        if (!is_fano_polytope(p)) continue;
        auto b = betti_3fold(face_fan(p));
        long alt = 0;
        for (size_t i = 0; i < 7; ++i) alt += (i % 2 ? -1 : 1) * b.b[i];
        EXPECT_EQ(alt, b.chi) << rec.name;
    }
}

TEST(AnticanonicalPresentation, Segment) {
    Polytope seg = hull(std::vector<IVec>{ivec({-1}), ivec({1})});
    auto ap = anticanonical_presentation(seg);
    EXPECT_EQ(ap.generators.size(), 3u);
    ASSERT_TRUE(ap.generated_in_degree_one);
    ASSERT_EQ(ap.ideal.size(), 1u);
    // generators ordered -1, 0, 1
    auto expect = parse_polynomial("y0^2 - ym*yp", {"ym", "y0", "yp"});
    EXPECT_TRUE(ideal_equality(ap.ideal, {expect}, 3));
}

TEST(AnticanonicalPresentation, SquareVanishesOnParametrization) {
    Polytope sq = hull(std::vector<IVec>{ivec({-1, -1}), ivec({1, -1}), ivec({-1, 1}), ivec({1, 1})});
    auto ap = anticanonical_presentation(sq);
    EXPECT_EQ(ap.generators.size(), 9u);
    ASSERT_TRUE(ap.generated_in_degree_one);
    std::vector<IVec> config;
    for (auto g : ap.generators) {
        g.push_back(1);
        config.push_back(g);
    }
    for (const auto& f : ap.ideal) {
        EXPECT_EQ(f.total_degree(), 2);
        EXPECT_TRUE(vanishes_on_monomial_map(f, config));
    }
}

TEST(ProductDegree, Values) {
    EXPECT_EQ(product_degree(4, Rat(12), 3), 96);
    EXPECT_EQ(product_degree(3, Rat(12), 3), 12);
    EXPECT_EQ(product_degree(Rat(44, 3), 3, Rat(12), 3), 3520);
    for (long n = 1; n <= 6; ++n) EXPECT_EQ(product_degree(n, Rat(7, 2), n), Rat(7, 2));
    // P^1 x P^1 has degree 8
    EXPECT_EQ(product_degree(2, Rat(2), 1), 8);
    EXPECT_THROW(product_degree(2, Rat(1), 3), InputError);
}

TEST(WeightPolytope, GenericPolystability) {
    std::vector<IVec> degs;
    for (long s : {-1, 1}) {
        degs.push_back(ivec({s, 0, 0}));
        degs.push_back(ivec({0, s, 0}));
        degs.push_back(ivec({0, 0, s}));
    }
    EXPECT_TRUE(weight_polytope_generic_polystable(degs));
    EXPECT_FALSE(weight_polytope_generic_polystable({ivec({1, 0}), ivec({2, 1}), ivec({1, -1})}));
}
