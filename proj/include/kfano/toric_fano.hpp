#ifndef KFANO_TORIC_FANO_HPP
#define KFANO_TORIC_FANO_HPP

#include "fan.hpp"

namespace kfano {

inline Rat anticanonical_degree(const Polytope& p) {
    if (!is_fano_polytope(p)) throw InputError("anticanonical_degree: polytope is not Fano");
    return normalized_volume(polar(p));
}

// Barycentre criterion; applies to non-reflexive Fano polytopes as well.
inline bool is_k_polystable(const Polytope& p) {
    if (!is_fano_polytope(p)) throw InputError("is_k_polystable: polytope is not Fano");
    return is_zero(barycenter(polar(p)));
}

// A root pairs to -1 with one ray and >= 0 with the others, so it satisfies every polar inequality:
// searching the lattice points of the polar is exhaustive.
inline std::vector<IVec> demazure_roots(const Polytope& p) {
    if (!is_fano_polytope(p)) throw InputError("demazure_roots: polytope is not Fano");
    std::vector<IVec> rays = p.lattice_vertices();
    std::vector<IVec> out;
    for (const auto& m : lattice_points(polar(p))) {
        int minus_one = 0;
        bool ok = true;
        for (const auto& v : rays) {
            Int s = idot(m, v);
            if (s == -1) {
                ++minus_one;
            } else if (s < 0) {
                ok = false;
                break;
            }
        }
        if (ok && minus_one == 1) out.push_back(m);
    }
    return out;
}

struct AutStructure {
    size_t torus_rank = 0;
    std::vector<IVec> roots;
    AutomorphismGroup finite;
    bool split = false;  // Aut(X) = T semidirect Aut(P), valid when there are no roots
};

inline AutStructure aut_structure(const Polytope& p) {
    AutStructure a;
    a.torus_rank = p.lattice_rank();
    a.roots = demazure_roots(p);
    a.finite = lattice_automorphisms(p);
    a.split = a.roots.empty();
    return a;
}

struct BettiProfile {
    std::array<long, 7> b{};
    long chi = 0;
    std::array<size_t, 3> d{};  // cone counts by dimension 1..3
};

inline BettiProfile betti_3fold(const Fan& f) {
    if (f.rank != 3) throw InputError("betti_3fold: fan must have rank 3");
    if (!is_complete(f)) throw InputError("betti_3fold: fan is not complete");
    auto counts = f.face_counts();
    BettiProfile bp;
    bp.d = {counts[0], counts[1], counts[2]};
    long d1 = static_cast<long>(counts[0]), d2 = static_cast<long>(counts[1]), d3 = static_cast<long>(counts[2]);
    if (d1 - d2 + d3 != 2) throw Error("betti_3fold: face counts violate d1 - d2 + d3 = 2");
    long rho = picard_rank(f);
    bp.b = {1, 0, rho, rho - d2 + 2 * d1 - 3, d1 - 3, 0, 1};
    bp.chi = d3;
    long alt = 0;
    for (size_t i = 0; i < 7; ++i) alt += (i % 2 ? -1 : 1) * bp.b[i];
    if (alt != bp.chi) throw Error("betti_3fold: alternating sum differs from d3");
    return bp;
}

struct AnticanonicalPresentation {
    std::vector<IVec> generators;  // lattice points of the moment polytope
    bool generated_in_degree_one = false;
    std::vector<Polynomial> ideal;  // only filled when generated in degree one
};

inline AnticanonicalPresentation anticanonical_presentation(const Polytope& moment) {
    if (!moment.is_lattice() || !is_reflexive(polar(moment)))
        throw InputError("anticanonical_presentation: moment polytope must be reflexive");
    AnticanonicalPresentation ap;
    ap.generators = lattice_points(moment);
    std::set<IVec> sums;
    for (const auto& a : ap.generators)
        for (const auto& b : ap.generators) sums.insert(add(a, b));
    std::vector<QVec> doubled;
    for (const auto& v : moment.vertices()) {
        QVec w = v;
        for (auto& x : w) x *= 2;
        doubled.push_back(w);
    }
    ap.generated_in_degree_one = true;
    for (const auto& p : lattice_points(hull(doubled)))
        if (!sums.count(p)) ap.generated_in_degree_one = false;
    if (!ap.generated_in_degree_one) return ap;
    std::vector<IVec> config;
    for (const auto& g : ap.generators) {
        IVec c = g;
        c.push_back(1);
        config.push_back(c);
    }
    ap.ideal = minimal_generators(toric_ideal(config), config.size());
    return ap;
}

// Degree of X x P^(n - dim X).
inline Rat product_degree(long n, const Rat& deg_x, long dim_x) {
    if (dim_x > n || dim_x < 0) throw InputError("product_degree: need 0 <= dim_x <= n");
    long m = n - dim_x;
    Int pm = 1;
    for (long i = 0; i < m; ++i) pm *= (m + 1);
    return Rat(binomial(n, dim_x)) * deg_x * Rat(pm);
}

// Degree of X x Y for Fano X, Y of dimensions a and b: C(a+b, a) deg X deg Y.
inline Rat product_degree(const Rat& deg_x, long dim_x, const Rat& deg_y, long dim_y) {
    return Rat(binomial(dim_x + dim_y, dim_x)) * deg_x * deg_y;
}

inline bool weight_polytope_generic_polystable(const std::vector<IVec>& degrees) {
    if (degrees.empty()) return true;
    Polytope w = hull(degrees);
    return w.contains_in_relative_interior(QVec(degrees[0].size(), Rat(0)));
}

}  // namespace kfano

#endif
