#ifndef KFANO_INVARIANTS_HPP
#define KFANO_INVARIANTS_HPP

#include "deformation.hpp"

namespace kfano {

struct TorusAction {
    std::vector<IVec> weights;  // one character per variable
    size_t nvars() const { return weights.size(); }
};

struct FiniteAction {
    size_t nvars = 0;
    std::vector<std::vector<size_t>> generators;  // variable permutations: x_i -> x_{g[i]}
};

inline std::vector<std::vector<size_t>> permutation_closure(const FiniteAction& a) {
    std::vector<size_t> id(a.nvars);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<size_t>> seen{id};
    std::vector<std::vector<size_t>> frontier{id};
    for (const auto& g : a.generators)
        if (g.size() != a.nvars) throw InputError("FiniteAction: generator has the wrong length");
    while (!frontier.empty()) {
        std::vector<std::vector<size_t>> next;
        for (const auto& p : frontier)
            for (const auto& g : a.generators) {
                std::vector<size_t> q(a.nvars);
                for (size_t i = 0; i < a.nvars; ++i) q[i] = g.at(p[i]);
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = next;
        if (seen.size() > 100000) throw InputError("FiniteAction: group too large");
    }
    return {seen.begin(), seen.end()};
}

inline Polynomial act(const std::vector<size_t>& perm, const Polynomial& f) { return f.remap(perm, f.nvars()); }

inline Polynomial reynolds(const std::vector<std::vector<size_t>>& group, const Polynomial& f) {
    Polynomial s(f.nvars());
    for (const auto& g : group) s = s + act(g, f);
    return s * Rat(1, static_cast<long>(group.size()));
}

inline bool is_invariant(const FiniteAction& a, const Polynomial& f) {
    for (const auto& g : a.generators)
        if (act(g, f) != f) return false;
    return true;
}

// --- torus invariants -------------------------------------------------------------------

struct InvariantMonomials {
    std::vector<Exponent> generators;
    long bound = 0;
    long certified_bound = 0;  // Caratheodory bound on the degree of Hilbert basis elements
    bool complete = false;
};

namespace detail {

inline IVec weight_of(const Exponent& e, const std::vector<IVec>& w) {
    IVec s(w.at(0).size(), Int(0));
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i]) s = add(s, scale(w[i], e[i]));
    return s;
}

inline void for_each_exponent(size_t n, long d, const std::function<void(const Exponent&)>& f) {
    Exponent e(n, 0);
    std::function<void(size_t, long)> rec = [&](size_t i, long left) {
        if (i + 1 == n) {
            e[i] = left;
            f(e);
            return;
        }
        for (long k = left; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    if (n == 0) {
        if (d == 0) f(e);
        return;
    }
    rec(0, d);
}

// Extreme rays of {x >= 0 : W x = 0}: kernel vectors of minimal support, all entries positive on it.
inline std::vector<Exponent> kernel_cone_extreme_rays(const std::vector<IVec>& w) {
    const size_t n = w.size();
    const size_t r = rank(w);
    std::vector<Exponent> out;
    for (size_t k = 1; k <= std::min(n, r + 1); ++k)
        for_each_subset(n, k, [&](const std::vector<int>& s) {
            QMatrix a(w[0].size(), QVec(k));
            for (size_t i = 0; i < w[0].size(); ++i)
                for (size_t j = 0; j < k; ++j) a[i][j] = w[s[j]][i];
            auto ns = nullspace(a, k);
            if (ns.size() != 1) return true;
            IVec v = clear_denominators(ns[0]);
            if (v[0] < 0) v = neg(v);
            for (const auto& x : v)
                if (x <= 0) return true;
            Exponent e(n, 0);
            for (size_t j = 0; j < k; ++j) e[s[j]] = v[j].get_si();
            out.push_back(e);
            return true;
        });
    return out;
}

}  // namespace detail

// Minimal weight-zero monomials up to the bound, by degree then lex descending.
inline InvariantMonomials invariant_monomial_generators(const TorusAction& a, long bound) {
    if (bound < 1) throw InputError("invariant_monomial_generators: bound must be >= 1");
    const size_t n = a.nvars();
    InvariantMonomials out;
    out.bound = bound;
    if (n == 0) {
        out.complete = true;
        return out;
    }
    for (long d = 1; d <= bound; ++d) {
        std::vector<Exponent> found;
        detail::for_each_exponent(n, d, [&](const Exponent& e) {
            if (!is_zero(detail::weight_of(e, a.weights))) return;
            for (const auto& g : out.generators)
                if (detail::divides(g, e)) return;
            found.push_back(e);
        });
        std::sort(found.begin(), found.end(), std::greater<>());
        out.generators.insert(out.generators.end(), found.begin(), found.end());
    }
    auto rays = detail::kernel_cone_extreme_rays(a.weights);
    std::vector<long> degs;
    for (const auto& r : rays) degs.push_back(std::accumulate(r.begin(), r.end(), 0L));
    std::sort(degs.begin(), degs.end(), std::greater<>());
    const size_t k = n - rank(a.weights);
    long b = 0;
    for (size_t i = 0; i < std::min(k, degs.size()); ++i) b += degs[i];
    out.certified_bound = std::max(1L, b - 1);
    out.complete = bound >= out.certified_bound;
    return out;
}

inline size_t torus_invariant_dimension(const TorusAction& a) {
    if (a.nvars() == 0) return 0;
    return a.nvars() - rank(a.weights);
}

inline Polynomial exponent_monomial(const Exponent& e) {
    std::vector<long> xs(e.begin(), e.end());
    return Polynomial::monomial(e.size(), Mono::from_exponents(xs));
}

// --- finite group invariants --------------------------------------------------------------

namespace detail {

// Incremental echelon basis keyed by leading monomial.
struct SpanTracker {
    std::map<Mono, Polynomial> rows;

    size_t rank_now() const { return rows.size(); }

    // add p when it enlarges the span
    bool add_if_new(Polynomial p) {
        while (!p.is_zero()) {
            auto it = rows.find(p.terms()[0].m);
            if (it == rows.end()) break;
            p = p - it->second * p.terms()[0].c;
        }
        if (p.is_zero()) return false;
        Mono lead = p.terms()[0].m;
        rows.emplace(lead, p * (Rat(1) / p.terms()[0].c));
        return true;
    }
};

inline std::vector<Polynomial> degree_products(const std::vector<Polynomial>& gens, long d, size_t n) {
    std::vector<Polynomial> out;
    std::vector<long> degs;
    for (const auto& g : gens) degs.push_back(g.total_degree());
    std::function<void(size_t, long, Polynomial)> rec = [&](size_t i, long left, Polynomial acc) {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        if (i == gens.size()) return;
        if (degs[i] > 0 && degs[i] <= left) rec(i, left - degs[i], acc * gens[i]);
        rec(i + 1, left, acc);
    };
    rec(0, d, Polynomial::constant(n, 1));
    return out;
}

inline Polynomial reduce_mod(const Polynomial& p, const std::optional<ReducedGB>& g) { return g ? normal_form(p, *g) : p; }

}  // namespace detail

struct FiniteInvariants {
    std::vector<Polynomial> generators;
    long bound = 0;
    bool complete = false;  // Noether bound reached
};

// Orbit sums accepted greedily per degree when they enlarge the span of the subalgebra generated so far.
inline FiniteInvariants finite_invariant_generators(const FiniteAction& a, long bound,
                                                    const std::vector<Polynomial>& relations = {}) {
    const size_t n = a.nvars;
    auto group = permutation_closure(a);
    std::optional<ReducedGB> gb;
    if (!relations.empty()) gb = buchberger(relations, n);
    FiniteInvariants out;
    out.bound = bound;
    for (long d = 1; d <= bound; ++d) {
        detail::SpanTracker span;
        for (const auto& p : detail::degree_products(out.generators, d, n)) span.add_if_new(detail::reduce_mod(p, gb));
        std::set<Exponent> seen;
        std::vector<std::pair<size_t, Exponent>> orbits;
        detail::for_each_exponent(n, d, [&](const Exponent& e) {
            if (seen.count(e)) return;
            std::set<Exponent> orb;
            for (const auto& g : group) {
                Exponent f(n, 0);
                for (size_t i = 0; i < n; ++i) f[g[i]] += e[i];
                orb.insert(f);
            }
            seen.insert(orb.begin(), orb.end());
            orbits.push_back({orb.size(), *orb.rbegin()});
        });
        std::stable_sort(orbits.begin(), orbits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [sz, e] : orbits) {
            Polynomial s = reynolds(group, exponent_monomial(e)) * Rat(static_cast<long>(sz));
            if (span.add_if_new(detail::reduce_mod(s, gb))) out.generators.push_back(s);
        }
    }
    out.complete = bound >= static_cast<long>(group.size());
    return out;
}

struct InvariantVerification {
    bool invariant = false;
    std::vector<size_t> generated_rank, reynolds_rank;  // per degree 1..max_degree
    bool matches = false;
    std::optional<Polynomial> witness;                  // invariant outside the generated subalgebra
};

// Compares, per degree, the span of products of gens with the Reynolds image in k[x]/relations.
inline InvariantVerification verify_invariant_generators(const FiniteAction& a, const std::vector<Polynomial>& gens,
                                                         const std::vector<Polynomial>& relations, long max_degree) {
    const size_t n = a.nvars;
    auto group = permutation_closure(a);
    std::optional<ReducedGB> gb;
    if (!relations.empty()) gb = buchberger(relations, n);
    InvariantVerification v;
    v.invariant = true;
    for (const auto& g : gens) {
        Polynomial r = detail::reduce_mod(g, gb);
        for (const auto& p : a.generators)
            if (detail::reduce_mod(act(p, g), gb) != r) v.invariant = false;
    }
    v.matches = v.invariant;
    for (long d = 1; d <= max_degree; ++d) {
        detail::SpanTracker gen, rey;
        for (const auto& p : detail::degree_products(gens, d, n)) gen.add_if_new(detail::reduce_mod(p, gb));
        std::vector<Polynomial> images;
        std::set<Exponent> seen;
        detail::for_each_exponent(n, d, [&](const Exponent& e) {
            Polynomial r = detail::reduce_mod(reynolds(group, exponent_monomial(e)), gb);
            if (rey.add_if_new(r)) images.push_back(r);
        });
        v.generated_rank.push_back(gen.rank_now());
        v.reynolds_rank.push_back(rey.rank_now());
        if (gen.rank_now() != rey.rank_now()) {
            v.matches = false;
            if (!v.witness)
                for (const auto& r : images)
                    if (gen.add_if_new(r)) {
                        v.witness = r;
                        break;
                    }
        }
    }
    return v;
}

// --- Artinian fixed subrings -------------------------------------------------------------

struct ArtinianFixedSubring {
    std::vector<Polynomial> basis;        // invariant elements of A spanning A^G (orbit sums of normal monomials)
    std::vector<Polynomial> generators;   // the non-constant basis elements
    std::vector<Polynomial> presentation; // kernel of k[u_1..u_r] -> A
    size_t dimension = 0;                 // over the ground field
    bool reduced = false;
};

inline ArtinianFixedSubring artinian_fixed_subring(const std::vector<Polynomial>& ideal, size_t n, const TorusAction& torus,
                                                   const FiniteAction& finite) {
    if (torus.nvars() != n || finite.nvars != n) throw InputError("artinian_fixed_subring: action size differs from ring");
    ReducedGB gb = buchberger(ideal, n);
    std::vector<long> cap(n, -1);
    for (const auto& l : gb.leading_monomials()) {
        size_t nz = 0, v = 0;
        for (size_t i = 0; i < n; ++i)
            if (l.e[i]) {
                ++nz;
                v = i;
            }
        if (nz == 1 && (cap[v] < 0 || l.e[v] < cap[v])) cap[v] = l.e[v];
    }
    for (long c : cap)
        if (c < 0) throw InputError("artinian_fixed_subring: the quotient is not finite-dimensional");
    auto group = permutation_closure(finite);
    for (const auto& g : group)
        for (const auto& f : ideal)
            if (!ideal_membership(act(g, f), gb)) throw InputError("artinian_fixed_subring: the group does not preserve the ideal");
    ArtinianFixedSubring out;
    std::set<Exponent> seen;
    std::function<void(size_t, Exponent&)> rec = [&](size_t i, Exponent& e) {
        if (i == n) {
            Polynomial m = exponent_monomial(e);
            if (!normal_form(m, gb).is_zero() && normal_form(m, gb) == m && is_zero(detail::weight_of(e, torus.weights)) &&
                !seen.count(e)) {
                Polynomial s = normal_form(reynolds(group, m), gb);
                for (const auto& g : group) {
                    Exponent f(n, 0);
                    for (size_t k = 0; k < n; ++k) f[g[k]] += e[k];
                    seen.insert(f);
                }
                if (!s.is_zero()) out.basis.push_back(s);
            }
            return;
        }
        for (long k = 0; k < cap[i]; ++k) {
            e[i] = k;
            rec(i + 1, e);
        }
        e[i] = 0;
    };
    Exponent e(n, 0);
    rec(0, e);
    out.dimension = out.basis.size();
    for (const auto& b : out.basis)
        if (b.total_degree() > 0) out.generators.push_back(b);
    if (!out.generators.empty()) out.presentation = ring_map_kernel(out.generators, ideal, n);
    // a local Artinian ring is reduced exactly when it is the ground field
    out.reduced = out.dimension == 1;
    return out;
}

// --- prime decompositions ---------------------------------------------------------------

struct DecompositionCheck {
    std::vector<bool> contained;
    bool intersection_equal = false;
    std::vector<long> dimensions;
    std::optional<std::string> failure;
    bool ok() const { return !failure.has_value(); }
};

inline DecompositionCheck verify_decomposition(const std::vector<Polynomial>& I, const std::vector<std::vector<Polynomial>>& primes,
                                               size_t n, const std::vector<std::string>& names = {}) {
    DecompositionCheck c;
    auto nm = names.empty() ? indexed_names("x", n, 1) : names;
    for (size_t k = 0; k < primes.size(); ++k) {
        ReducedGB g = buchberger(primes[k], n);
        bool in = true;
        for (const auto& f : I)
            if (!ideal_membership(f, g)) {
                in = false;
                if (!c.failure) c.failure = "generator " + format_polynomial(f, nm) + " is not in component " + std::to_string(k + 1);
            }
        c.contained.push_back(in);
        c.dimensions.push_back(krull_dimension(primes[k], n));
    }
    c.intersection_equal = ideal_equality(ideal_intersection(primes, n), I, n);
    if (!c.intersection_equal && !c.failure) {
        ReducedGB gi = buchberger(I, n);
        for (const auto& f : ideal_intersection(primes, n))
            if (!ideal_membership(f, gi)) {
                c.failure = "intersection element " + format_polynomial(f, nm) + " is not in the ideal";
                break;
            }
        if (!c.failure) c.failure = "intersection differs from the ideal";
    }
    return c;
}

// --- local K-moduli --------------------------------------------------------------------

struct BlockInvariants {
    std::vector<long> component_dims;  // components of Spec of the invariant ring of the obstructed block
    bool reduced = true;
};

struct KModuliLocalReport {
    size_t stack_branches = 0;
    bool stack_reduced = false;
    size_t space_components = 0;
    std::vector<long> space_dims;  // descending
    bool space_reduced = false;
    std::optional<ArtinianFixedSubring> fat_point;
    std::vector<size_t> r_block, s_block;
    size_t s_invariant_dim = 0;
    size_t group_image_order = 0;
};

// Variable permutations induced by lattice automorphisms acting on M by g^{-T}; equal degrees map in order.
inline FiniteAction induced_permutations(const MiniversalBase& base, const AutomorphismGroup& g) {
    const size_t n = base.nvars();
    FiniteAction fa;
    fa.nvars = n;
    std::map<IVec, std::vector<size_t>> by_degree;
    for (size_t i = 0; i < n; ++i) by_degree[base.degrees[i]].push_back(i);
    for (const auto& m : g.elements) {
        auto inv = inverse(to_qmatrix(m));
        if (!inv) throw InputError("induced_permutations: singular matrix");
        std::vector<size_t> perm(n);
        for (const auto& [d, vars] : by_degree) {
            IVec img(d.size(), Int(0));
            for (size_t i = 0; i < d.size(); ++i) {
                Rat s = 0;
                for (size_t j = 0; j < d.size(); ++j) s += (*inv)[j][i] * d[j];
                img[i] = s.get_num();
            }
            auto it = by_degree.find(img);
            if (it == by_degree.end() || it->second.size() != vars.size())
                throw Error("induced_permutations: the group does not preserve the T1 degrees");
            for (size_t k = 0; k < vars.size(); ++k) perm[vars[k]] = it->second[k];
        }
        fa.generators.push_back(perm);
    }
    return fa;
}

inline KModuliLocalReport kmoduli_local_report(const MiniversalBase& base, const AutomorphismGroup& aut,
                                               const std::optional<BlockInvariants>& r_invariants = std::nullopt) {
    const size_t n = base.nvars();
    KModuliLocalReport rep;
    FiniteAction fa = induced_permutations(base, aut);
    if (n) {
        ReducedGB gb = buchberger(base.relations, n);
        for (const auto& p : fa.generators)
            for (const auto& r : base.relations)
                if (!ideal_membership(act(p, r), gb)) throw Error("kmoduli_local_report: the action does not preserve the relations");
    }
    std::set<std::vector<size_t>> image(fa.generators.begin(), fa.generators.end());
    rep.group_image_order = image.size();
    std::vector<bool> in_r(n, false);
    for (const auto& r : base.relations)
        for (size_t i = 0; i < n; ++i)
            if (r.uses_var(i)) in_r[i] = true;
    for (size_t i = 0; i < n; ++i) (in_r[i] ? rep.r_block : rep.s_block).push_back(i);
    rep.stack_branches = base.components.size();
    bool squarefree = true;
    for (const auto& r : base.relations) {
        if (!r.is_monomial()) squarefree = false;
        for (size_t i = 0; r.is_monomial() && i < n; ++i)
            if (r.terms()[0].m.e[i] > 1) squarefree = false;
    }
    rep.stack_reduced = squarefree;

    if (n > 0 && base_dimension(base) == 0) {
        TorusAction t{base.degrees};
        rep.fat_point = artinian_fixed_subring(base.relations, n, t, fa);
        rep.space_components = 1;
        rep.space_dims = {0};
        rep.space_reduced = rep.fat_point->reduced;
        return rep;
    }
    auto weights_of = [&](const std::vector<size_t>& block) {
        std::vector<IVec> w;
        for (size_t i : block) w.push_back(base.degrees[i]);
        return w;
    };
    auto rk = [](const std::vector<IVec>& w) { return w.empty() ? size_t(0) : rank(w); };
    if (rk(weights_of(rep.r_block)) + rk(weights_of(rep.s_block)) != rk(base.degrees))
        throw Error("kmoduli_local_report: the torus does not split along the blocks");
    std::set<std::vector<size_t>> gr, gs;
    for (const auto& p : image) {
        std::vector<size_t> a, b;
        for (size_t i : rep.r_block) a.push_back(p[i]);
        for (size_t i : rep.s_block) b.push_back(p[i]);
        for (size_t x : a)
            if (!in_r[x]) throw Error("kmoduli_local_report: the group mixes the blocks");
        gr.insert(a);
        gs.insert(b);
    }
    if (gr.size() * gs.size() != image.size()) throw Error("kmoduli_local_report: the finite group does not split along the blocks");
    rep.s_invariant_dim = rep.s_block.size() - rk(weights_of(rep.s_block));
    if (rep.r_block.empty()) {
        rep.space_components = 1;
        rep.space_dims = {static_cast<long>(rep.s_invariant_dim)};
        rep.space_reduced = true;
        return rep;
    }
    if (!r_invariants) throw InputError("kmoduli_local_report: invariants of the obstructed block are required");
    for (long d : r_invariants->component_dims) rep.space_dims.push_back(d + static_cast<long>(rep.s_invariant_dim));
    std::sort(rep.space_dims.begin(), rep.space_dims.end(), std::greater<>());
    rep.space_components = rep.space_dims.size();
    rep.space_reduced = r_invariants->reduced;
    return rep;
}

}  // namespace kfano

#endif
