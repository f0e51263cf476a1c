#include <gtest/gtest.h>

#include "kfano/datasets.hpp"

using namespace kfano;

namespace {

Polytope builtin(const std::string& name) { return builtin_polytope(name).polytope(); }

Cone facet_cone(const Polytope& p, size_t fi) {
    std::vector<IVec> g;
    for (int j : p.facet_vertices()[fi]) g.push_back(p.lattice_vertices()[j]);
    return Cone::generated_by(g);
}

}  // namespace

TEST(ConeReport, SquareConeIsOdp) {
    auto c = Cone::generated_by({ivec({0, 0, 1}), ivec({1, 0, 1}), ivec({0, 1, 1}), ivec({1, 1, 1})});
    auto r = cone_report(c);
    EXPECT_FALSE(r.simplicial);
    EXPECT_FALSE(r.smooth);
    EXPECT_TRUE(r.q_gorenstein);
    EXPECT_EQ(r.gorenstein_index, 1);
    EXPECT_TRUE(r.terminal);
}

TEST(ConeReport, SmoothAndQuotient) {
    auto smooth = cone_report(Cone::generated_by({ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1})}));
    EXPECT_TRUE(smooth.smooth);
    auto q = cone_report(Cone::generated_by({ivec({1, 0, 1}), ivec({0, 1, 1}), ivec({-1, -1, 1})}));
    EXPECT_TRUE(q.simplicial);
    EXPECT_FALSE(q.smooth);
    EXPECT_EQ(q.multiplicity, 3);
    EXPECT_EQ(q.quotient_type, "1/3(1,1,1)");
}

TEST(DualHilbertBasis, RectangleCone) {
    Polytope p = builtin("deg12-prism");
    for (size_t fi = 0; fi < p.facets().size(); ++fi) {
        Cone c = facet_cone(p, fi);
        if (c.rays.size() != 4) continue;
        auto hb = dual_cone_hilbert_basis(c);
        EXPECT_EQ(hb.size(), 4u);
        for (const auto& m : hb)
            for (const auto& r : c.rays) EXPECT_GE(idot(m, r), 0);
    }
}

TEST(ChartPresentation, TransverseA1Chart) {
    Polytope p = builtin("deg12-prism");
    int seen = 0;
    for (size_t fi = 0; fi < p.facets().size(); ++fi) {
        Cone c = facet_cone(p, fi);
        if (c.rays.size() != 4) continue;
        auto pres = chart_presentation(c);
        ASSERT_EQ(pres.ideal.size(), 1u);
        // xy - z^2 t^2 up to renaming: two terms, exponent multisets {1,1,0,0} and {2,2,0,0}
        const auto& f = pres.ideal[0];
        ASSERT_EQ(f.terms().size(), 2u);
        std::multiset<std::multiset<int>> shapes;
        for (const auto& t : f.terms()) {
            std::multiset<int> e;
            for (size_t i = 0; i < 4; ++i) e.insert(t.m.e[i]);
            shapes.insert(e);
        }
        EXPECT_EQ(shapes, (std::multiset<std::multiset<int>>{{0, 0, 1, 1}, {0, 0, 2, 2}}));
        EXPECT_EQ(f.terms()[0].c + f.terms()[1].c, 0);
        ++seen;
    }
    EXPECT_EQ(seen, 6);
}

TEST(Fan, FaceFanIsComplete) {
    Fan f = face_fan(builtin("deg12-prism"));
    EXPECT_TRUE(is_complete(f));
    EXPECT_EQ(f.face_counts(), (std::vector<size_t>{12, 18, 8}));
}

TEST(Fan, NormalFanOfMomentIsFaceFanOfPrism) {
    EXPECT_EQ(normal_fan(builtin("deg12-moment")).cone_set(), face_fan(builtin("deg12-prism")).cone_set());
}

TEST(Fan, IncompleteFanDetected) {
    Fan f;
    f.rank = 2;
    f.rays = {ivec({1, 0}), ivec({0, 1})};
    f.cones = {{0, 1}};
    EXPECT_FALSE(is_complete(f));
}

TEST(PicardRank, Embedded) {
    EXPECT_EQ(picard_rank(face_fan(builtin("deg12-prism"))), 1);
    EXPECT_EQ(picard_rank(face_fan(builtin("mm4-3"))), 4);
    EXPECT_EQ(picard_rank(face_fan(builtin("mm2-10"))), 2);
}

TEST(Divisors, AnticanonicalIsCartierOnGorenstein) {
    Fan f = face_fan(builtin("deg12-prism"));
    auto k = anticanonical_divisor(f);
    EXPECT_TRUE(is_cartier(k, f));
    EXPECT_TRUE(is_ample(k, f));
    Fan g = face_fan(builtin("fat-point-44-3"));
    auto kg = anticanonical_divisor(g);
    EXPECT_TRUE(is_q_cartier(kg, g));
    EXPECT_FALSE(is_cartier(kg, g));
}

TEST(Divisors, NefOnP1xP1) {
    Fan f = face_fan(hull(std::vector<IVec>{ivec({1, 0}), ivec({-1, 0}), ivec({0, 1}), ivec({0, -1})}));
    // rays sorted lex: (-1,0), (0,-1), (0,1), (1,0)
    IVec fiber(4, Int(0));
    fiber[3] = 1;
    EXPECT_TRUE(is_nef(fiber, f));
    EXPECT_FALSE(is_ample(fiber, f));
    IVec bad(4, Int(0));
    bad[3] = -1;
    bad[2] = 1;
    EXPECT_FALSE(is_nef(bad, f));
}

TEST(SingularLocus, Deg12) {
    auto sl = singular_locus_report(builtin("deg12-prism"));
    EXPECT_EQ(sl.count_key("dP6_cone"), 2u);
    EXPECT_EQ(sl.count(SingularKind::transverse_A1_curve), 1u);
    for (const auto& c : sl.components)
        if (c.kind == SingularKind::transverse_A1_curve) {
            EXPECT_EQ(c.curve_count, 6u);
            EXPECT_TRUE(c.cycle);
        }
}

TEST(SingularLocus, FatPoint) {
    auto sl = singular_locus_report(builtin("fat-point-44-3"));
    EXPECT_EQ(sl.components.size(), 8u);
    EXPECT_EQ(sl.count_key("F1_cone"), 2u);
    EXPECT_EQ(sl.count_key("1/3(1,1,2)"), 4u);
    EXPECT_EQ(sl.count(SingularKind::transverse_A1_curve), 2u);
}

TEST(SingularLocus, SmoothHasNone) {
    Polytope s = hull(std::vector<IVec>{ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1}), ivec({-1, -1, -1})});
    EXPECT_TRUE(singular_locus_report(s).components.empty());
}
