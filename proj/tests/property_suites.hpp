#ifndef KFANO_TESTS_PROPERTY_SUITES_HPP
#define KFANO_TESTS_PROPERTY_SUITES_HPP

// Randomized property suites shared by the gtest runner and the acceptance binary.
// Every suite is seeded, so a failure reproduces exactly.

#include <random>

#include "kfano/pipelines.hpp"

namespace kfano::props {

struct SuiteResult {
    std::string name;
    size_t instances = 0;
    size_t failures = 0;
    std::string first_failure;

    bool ok(size_t min_instances) const { return failures == 0 && instances >= min_instances; }
    void fail(const std::string& why) {
        if (!failures) first_failure = why;
        ++failures;
    }
};

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Product of random elementary moves, a signed permutation and a shear; entries stay small.
inline IntegerMatrix random_unimodular(Rng& rng, size_t n) {
    IntegerMatrix u = IntegerMatrix::identity(n);
    for (int step = 0; step < 6; ++step) {
        size_t i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1);
        if (i == j) continue;
        u.add_row(i, j, Int(uniform(rng, -1, 1)));
    }
    for (size_t i = 0; i < n; ++i) {
        size_t j = uniform(rng, i, n - 1);
        u.swap_rows(i, j);
        if (uniform(rng, 0, 1)) u.negate_row(i);
    }
    return u;
}

inline std::vector<IVec> transform(const IntegerMatrix& u, const std::vector<IVec>& pts) {
    std::vector<IVec> out;
    for (const auto& p : pts) out.push_back(u.apply(p));
    return out;
}

inline std::vector<IVec> random_subset(Rng& rng, const std::vector<IVec>& pool, size_t lo, size_t hi) {
    std::vector<IVec> s = pool;
    std::shuffle(s.begin(), s.end(), rng);
    s.resize(uniform(rng, lo, std::min(hi, pool.size())));
    return s;
}

inline std::vector<IVec> cube_points() {
    std::vector<IVec> pts;
    for (long a = -1; a <= 1; ++a)
        for (long b = -1; b <= 1; ++b)
            for (long c = -1; c <= 1; ++c)
                if (a || b || c) pts.push_back(ivec({a, b, c}));
    return pts;
}

// Full-dimensional Fano 3-polytopes: random vertex subsets of the unit cube shell, moved by a random unimodular map.
inline std::vector<Polytope> random_fano_3polytopes(Rng& rng, size_t count, bool reflexive_only) {
    const auto pool = cube_points();
    std::vector<Polytope> out;
    while (out.size() < count) {
        Polytope p = hull(transform(random_unimodular(rng, 3), random_subset(rng, pool, 6, 12)));
        if (!p.full_dimensional() || !is_fano_polytope(p)) continue;
        if (reflexive_only && !is_reflexive(p)) continue;
        out.push_back(p);
    }
    return out;
}

inline SuiteResult polar_involution(size_t count, uint64_t seed = 11) {
    SuiteResult r{"polar_involution_reflexive_3d"};
    Rng rng(seed);
    for (const auto& p : random_fano_3polytopes(rng, count, true)) {
        ++r.instances;
        Polytope q = polar(p);
        if (!q.is_lattice()) r.fail("polar of a reflexive polytope is not a lattice polytope");
        else if (!(polar(q) == p)) r.fail("polar(polar(P)) != P");
    }
    return r;
}

// v - e + f = 2 on the face lattice and d1 - d2 + d3 = 2 on the face fan.
inline SuiteResult euler_relations(size_t count, uint64_t seed = 12) {
    SuiteResult r{"euler_relations_3d"};
    Rng rng(seed);
    for (const auto& p : random_fano_3polytopes(rng, count, false)) {
        ++r.instances;
        auto f = face_enumeration(p).f_vector();
        if (f.size() < 3) {
            r.fail("face lattice has fewer than three levels");
            continue;
        }
        long v = static_cast<long>(f[0]), e = static_cast<long>(f[1]), fa = static_cast<long>(f[2]);
        if (v - e + fa != 2) r.fail("v - e + f = " + std::to_string(v - e + fa));
        auto d = face_fan(p).face_counts();
        long alt = static_cast<long>(d[0]) - static_cast<long>(d[1]) + static_cast<long>(d[2]);
        if (alt != 2) r.fail("d1 - d2 + d3 = " + std::to_string(alt));
        // the face fan dualizes the face lattice
        if (d[0] != f[0] || d[1] != f[1] || d[2] != f[2]) r.fail("face fan counts differ from the f-vector");
    }
    return r;
}

// Twice the area from the shoelace formula; boundary points from edge gcds.
inline Int shoelace2(const std::vector<IVec>& ccw) {
    Int s = 0;
    for (size_t i = 0; i < ccw.size(); ++i) {
        const auto& a = ccw[i];
        const auto& b = ccw[(i + 1) % ccw.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return abs(s);
}

inline std::vector<IVec> ccw_order(std::vector<IVec> pts) {
    Rat cx = 0, cy = 0;
    for (const auto& p : pts) {
        cx += Rat(p[0]);
        cy += Rat(p[1]);
    }
    cx /= static_cast<long>(pts.size());
    cy /= static_cast<long>(pts.size());
    auto half = [&](const IVec& p) { return (Rat(p[1]) < cy || (Rat(p[1]) == cy && Rat(p[0]) < cx)) ? 1 : 0; };
    std::sort(pts.begin(), pts.end(), [&](const IVec& a, const IVec& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rat cr = (Rat(a[0]) - cx) * (Rat(b[1]) - cy) - (Rat(a[1]) - cy) * (Rat(b[0]) - cx);
        return cr > 0;
    });
    return pts;
}

inline std::string pick_violation(const std::vector<IVec>& verts2d) {
    Polytope poly = hull(verts2d);
    auto vs = ccw_order(poly.lattice_vertices());
    Int area2 = shoelace2(vs);
    Int boundary = 0;
    for (size_t i = 0; i < vs.size(); ++i) {
        IVec d = sub(vs[(i + 1) % vs.size()], vs[i]);
        boundary += gcd(d[0], d[1]);
    }
    Int total = static_cast<long>(lattice_points(poly).size());
    Int interior = total - boundary;
    // A = I + B/2 - 1
    if (area2 != 2 * interior + boundary - 2) return "Pick fails: 2A=" + area2.get_str() + " I=" + interior.get_str() + " B=" + boundary.get_str();
    if (normalized_volume(poly) != Rat(area2)) return "normalized volume differs from twice the shoelace area";
    return {};
}

// Every 2-face of every embedded polytope, in its own lattice coordinates, plus random lattice polygons.
inline SuiteResult pick_on_faces(size_t random_count, uint64_t seed = 13) {
    SuiteResult r{"pick_theorem_2faces"};
    for (const auto& rec : builtin_polytopes()) {
        Polytope p = rec.polytope();
        auto fl = face_enumeration(p);
        if (fl.faces_by_dim.size() < 3) continue;
        for (const auto& f : fl.faces_by_dim[2]) {
            ++r.instances;
            auto coords = lattice_coordinates(face_points(p, f));
            auto err = pick_violation(coords);
            if (!err.empty()) r.fail(rec.name + ": " + err);
            // counting inside the face directly must agree with counting in the 2d chart
            if (face_lattice_points(p, f).size() != lattice_points(hull(coords)).size())
                r.fail(rec.name + ": face lattice point counts differ between frames");
        }
    }
    Rng rng(seed);
    for (size_t k = 0; k < random_count;) {
        std::vector<IVec> pts;
        for (long i = uniform(rng, 3, 7); i > 0; --i) pts.push_back(ivec({uniform(rng, -4, 4), uniform(rng, -4, 4)}));
        if (hull(pts).dim() < 2) continue;
        ++k;
        ++r.instances;
        auto err = pick_violation(pts);
        if (!err.empty()) r.fail("random polygon: " + err);
    }
    return r;
}

inline SuiteResult volume_invariance(size_t count, uint64_t seed = 14) {
    SuiteResult r{"normalized_volume_unimodular_invariance"};
    Rng rng(seed);
    std::vector<IVec> pool;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c) pool.push_back(ivec({a, b, c}));
    while (r.instances < count) {
        auto pts = random_subset(rng, pool, 4, 9);
        Polytope p = hull(pts);
        if (!p.full_dimensional()) continue;
        ++r.instances;
        IntegerMatrix u = random_unimodular(rng, 3);
        IVec shift = ivec({uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)});
        std::vector<IVec> moved;
        for (const auto& x : transform(u, pts)) moved.push_back(add(x, shift));
        Rat v0 = normalized_volume(p), v1 = normalized_volume(hull(moved));
        if (v0 != v1) r.fail("volume " + v0.get_str() + " becomes " + v1.get_str());
        if (v0.get_den() != 1) r.fail("normalized volume of a lattice polytope is not an integer");
    }
    return r;
}

inline Polynomial random_polynomial(Rng& rng, size_t n, long max_deg, long terms) {
    Polynomial f(n);
    for (long t = 0; t < terms; ++t) {
        std::vector<long> e(n, 0);
        long d = uniform(rng, 1, max_deg);
        for (long k = 0; k < d; ++k) ++e[uniform(rng, 0, n - 1)];
        long c = uniform(rng, -3, 3);
        if (c == 0) c = 1;
        f = f + Polynomial::monomial(n, Mono::from_exponents(e), Rat(c));
    }
    return f;
}

inline std::vector<std::string> sorted_texts(const std::vector<Polynomial>& ps, size_t n) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(format_polynomial(p, indexed_names("x", n, 1)));
    std::sort(out.begin(), out.end());
    return out;
}

inline SuiteResult reduced_gb_uniqueness(size_t count, uint64_t seed = 15) {
    SuiteResult r{"reduced_gb_permutation_uniqueness"};
    Rng rng(seed);
    const size_t n = 3;
    while (r.instances < count) {
        std::vector<Polynomial> gens;
        for (long k = uniform(rng, 2, 4); k > 0; --k) gens.push_back(random_polynomial(rng, n, 2, uniform(rng, 1, 3)));
        MonomialOrder order = uniform(rng, 0, 1) ? MonomialOrder::degrevlex(n) : MonomialOrder::lex(n);
        ReducedGB a;
        try {
            a = buchberger(gens, order, 2000000);
        } catch (const BudgetExceeded&) {
            continue;
        }
        ++r.instances;
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        // a scaled copy and a redundant combination leave the ideal unchanged
        shuffled[0] = shuffled[0] * Rat(uniform(rng, 2, 5));
        shuffled.push_back(gens[0] * gens.back() + gens[0]);
        ReducedGB b = buchberger(shuffled, order);
        if (sorted_texts(a.gens, n) != sorted_texts(b.gens, n)) r.fail("reduced Groebner bases differ after permuting generators");
        for (const auto& g : gens)
            if (!ideal_membership(g, b)) r.fail("an input generator does not reduce to zero");
    }
    return r;
}

// Independent substitution x_i -> t^{a_i}: each character class must cancel.
inline bool vanishes_by_substitution(const Polynomial& f, const std::vector<IVec>& config) {
    std::map<IVec, Rat> acc;
    for (const auto& t : f.terms()) {
        IVec ch(config[0].size(), Int(0));
        for (size_t i = 0; i < config.size(); ++i)
            if (t.m.e[i]) ch = add(ch, scale(config[i], t.m.e[i]));
        acc[ch] += t.c;
    }
    for (const auto& [ch, c] : acc)
        if (c != 0) return false;
    return true;
}

inline SuiteResult toric_substitution(size_t count, uint64_t seed = 16) {
    SuiteResult r{"toric_ideal_substitution"};
    Rng rng(seed);
    while (r.instances < count) {
        std::vector<IVec> config;
        for (long k = uniform(rng, 3, 5); k > 0; --k) config.push_back(ivec({uniform(rng, 0, 3), uniform(rng, 0, 3), 1}));
        std::sort(config.begin(), config.end());
        config.erase(std::unique(config.begin(), config.end()), config.end());
        if (config.size() < 3) continue;
        ++r.instances;
        auto ideal = toric_ideal(config);
        for (const auto& g : ideal)
            if (!vanishes_by_substitution(g, config)) r.fail("generator " + format_polynomial(g, indexed_names("x", config.size(), 1)) + " survives substitution");
        // the ideal is prime of height n - rank
        long expect = static_cast<long>(rank(config));
        long got = ideal.empty() ? static_cast<long>(config.size()) : krull_dimension(ideal, config.size());
        if (got != expect) r.fail("toric ideal has dimension " + std::to_string(got) + ", expected " + std::to_string(expect));
    }
    return r;
}

// Reflexive polygons: convex cyclic sequences of primitive points in [-2,2]^2 whose edges all sit at lattice distance 1.
struct PolygonEnumeration {
    std::vector<std::vector<IVec>> instances;  // vertex lists, ccw
    std::set<std::vector<IVec>> classes;       // normal forms
};

inline PolygonEnumeration reflexive_polygons() {
    std::vector<IVec> prim;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            if ((a || b) && gcd(Int(a), Int(b)) == 1) prim.push_back(ivec({a, b}));
    prim = ccw_order(prim);  // angular order around the origin
    const size_t n = prim.size();
    auto det = [](const IVec& u, const IVec& v) -> Int { return u[0] * v[1] - u[1] * v[0]; };
    PolygonEnumeration out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<IVec> vs;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) vs.push_back(prim[i]);
        if (vs.size() < 3) continue;
        bool ok = true;
        for (size_t i = 0; ok && i < vs.size(); ++i) {
            const IVec& u = vs[i];
            const IVec& v = vs[(i + 1) % vs.size()];
            const IVec& w = vs[(i + 2) % vs.size()];
            IVec e = sub(v, u);
            if (det(u, v) != gcd(e[0], e[1])) ok = false;   // edge at lattice distance 1, origin on the left
            if (det(e, sub(w, v)) <= 0) ok = false;          // strict left turn at v
        }
        if (!ok) continue;
        out.instances.push_back(vs);
        out.classes.insert(polygon_normal_form_vertices(vs));
    }
    return out;
}

inline std::set<IVec> brute_force_roots(const std::vector<IVec>& rays, long box) {
    std::set<IVec> roots;
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b) {
            IVec m = ivec({a, b});
            int minus = 0;
            bool ok = true;
            for (const auto& v : rays) {
                Int s = idot(m, v);
                if (s == -1) ++minus;
                else if (s < 0) ok = false;
            }
            if (ok && minus == 1) roots.insert(m);
        }
    return roots;
}

inline SuiteResult demazure_oracle(size_t* class_count = nullptr) {
    SuiteResult r{"demazure_roots_reflexive_polygons"};
    auto e = reflexive_polygons();
    if (class_count) *class_count = e.classes.size();
    if (e.classes.size() != 16) r.fail(std::to_string(e.classes.size()) + " reflexive polygon classes instead of 16");
    for (const auto& vs : e.instances) {
        ++r.instances;
        Polytope p = hull(vs);
        if (!is_reflexive(p)) {
            r.fail("enumerated polygon is not reflexive");
            continue;
        }
        auto lib = demazure_roots(p);
        std::set<IVec> got(lib.begin(), lib.end());
        if (got.size() != lib.size()) r.fail("duplicate roots");
        if (got != brute_force_roots(p.lattice_vertices(), 8)) r.fail("roots differ from the brute-force search");
    }
    return r;
}

// Brute-force graded dims of k[x]/(f, df) for a hypersurface chart against the Stanley-cell description.
inline SuiteResult chart_t1_box(long box = 8) {
    SuiteResult r{"hypersurface_t1_box_deg12_charts"};
    Polytope p = builtin_polytope("deg12-prism").polytope();
    auto sl = singular_locus_report(p);
    const auto verts = p.lattice_vertices();
    std::vector<std::pair<Polynomial, std::vector<IVec>>> charts;
    std::vector<std::vector<IVec>> chart_rays;
    for (const auto& comp : sl.components) {
        if (comp.kind != SingularKind::transverse_A1_curve) continue;
        for (size_t fi : comp.facets) {
            std::vector<IVec> g;
            for (int j : p.facet_vertices()[fi]) g.push_back(verts[j]);
            auto pres = chart_presentation(Cone::generated_by(g));
            if (pres.ideal.size() != 1) {
                r.fail("chart is not a hypersurface");
                continue;
            }
            charts.push_back({pres.ideal[0], pres.degrees});
            chart_rays.push_back(g);
        }
    }
    if (charts.size() != 6) r.fail(std::to_string(charts.size()) + " charts along the singular curves instead of 6");
    for (size_t ci = 0; ci < charts.size(); ++ci) {
        const auto& [f, degrees] = charts[ci];
        const size_t n = degrees.size();
        ChartT1 lib = hypersurface_t1(f, degrees);
        GradedDims dims = lib.dims();
        // T^1 ideal, with its monomial generators read off a reduced basis
        std::vector<Polynomial> gens{f};
        for (size_t i = 0; i < n; ++i) gens.push_back(derivative(f, i));
        ReducedGB gb = buchberger(gens, n);
        std::vector<Mono> lead = gb.leading_monomials();
        IVec degf(3, Int(0));
        for (size_t i = 0; i < n; ++i) degf = add(degf, scale(degrees[i], f.terms()[0].m.e[i]));
        // a positive functional on the dual cone bounds the enumeration
        IVec pos(3, Int(0));
        for (const auto& v : chart_rays[ci]) pos = add(pos, v);
        std::vector<long> w;
        for (const auto& d : degrees) w.push_back(idot(d, pos).get_si());
        if (std::any_of(w.begin(), w.end(), [](long x) { return x <= 0; })) {
            r.fail("chart degree outside the dual cone");
            continue;
        }
        long wmax = idot(degf, pos).get_si();
        for (const auto& x : pos) wmax += box * std::labs(x.get_si());
        std::map<IVec, size_t> brute;
        std::vector<long> e(n, 0);
        std::function<void(size_t, long)> rec = [&](size_t i, long used) {
            if (i == n) {
                Mono m = Mono::from_exponents(e);
                for (const auto& l : lead)
                    if (l.divides(m)) return;
                IVec d = neg(degf);
                for (size_t k = 0; k < n; ++k)
                    if (e[k]) d = add(d, scale(degrees[k], e[k]));
                bool inside = true;
                for (const auto& x : d)
                    if (abs(x) > box) inside = false;
                if (inside) ++brute[d];
                return;
            }
            for (e[i] = 0; used + e[i] * w[i] <= wmax; ++e[i]) rec(i + 1, used + e[i] * w[i]);
            e[i] = 0;
        };
        rec(0, 0);
        for (long a = -box; a <= box; ++a)
            for (long b = -box; b <= box; ++b)
                for (long c = -box; c <= box; ++c) {
                    IVec m = ivec({a, b, c});
                    ++r.instances;
                    size_t expect = brute.count(m) ? brute[m] : 0;
                    if (dims.dim_at(m) != expect)
                        r.fail("chart " + std::to_string(ci) + " at " + to_string(m) + ": " + std::to_string(dims.dim_at(m)) + " vs brute force " + std::to_string(expect));
                }
    }
    return r;
}

}  // namespace kfano::props

#endif
