#ifndef KFANO_DEFORMATION_HPP
#define KFANO_DEFORMATION_HPP

#include "toric_fano.hpp"

namespace kfano {

using Exponent = std::vector<long>;

inline Polynomial derivative(const Polynomial& f, size_t v) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.m.e[v] == 0) continue;
        Term d = t;
        d.c *= t.m.e[v];
        d.m.e[v]--;
        d.m.deg--;
        out.push_back(d);
    }
    return Polynomial::from_terms(f.nvars(), out);
}

inline IVec mono_degree(const Mono& m, const std::vector<IVec>& degrees) {
    IVec d(degrees.at(0).size(), Int(0));
    for (size_t i = 0; i < degrees.size(); ++i)
        if (m.e[i]) d = add(d, scale(degrees[i], m.e[i]));
    return d;
}

inline std::optional<IVec> homogeneous_degree(const Polynomial& f, const std::vector<IVec>& degrees) {
    if (f.is_zero()) return std::nullopt;
    IVec d = mono_degree(f.terms()[0].m, degrees);
    for (const auto& t : f.terms())
        if (mono_degree(t.m, degrees) != d) return std::nullopt;
    return d;
}

// --- graded dimensions --------------------------------------------------------------

// base + sum k_j step_j with k_j >= 0, or k_j in Z when two-sided
struct RayPattern {
    IVec base;
    std::vector<IVec> steps;
    std::vector<bool> two_sided;
    size_t dim = 1;

    IVec point(const std::vector<long>& k) const {
        IVec p = base;
        for (size_t j = 0; j < steps.size(); ++j) p = add(p, scale(steps[j], k[j]));
        return p;
    }

    std::optional<std::vector<Int>> params_of(const IVec& m) const {
        if (steps.empty()) {
            if (m == base) return std::vector<Int>{};
            return std::nullopt;
        }
        QMatrix a(base.size(), QVec(steps.size()));
        for (size_t i = 0; i < base.size(); ++i)
            for (size_t j = 0; j < steps.size(); ++j) a[i][j] = steps[j][i];
        auto x = solve(a, to_q(sub(m, base)), steps.size());
        if (!x) return std::nullopt;
        std::vector<Int> k;
        for (size_t j = 0; j < steps.size(); ++j) {
            if ((*x)[j].get_den() != 1) return std::nullopt;
            Int kj = (*x)[j].get_num();
            if (kj < 0 && !two_sided[j]) return std::nullopt;
            k.push_back(kj);
        }
        return k;
    }

    void for_each_in_window(long w, const std::function<void(const std::vector<long>&)>& f) const {
        std::vector<long> k(steps.size());
        std::function<void(size_t)> rec = [&](size_t j) {
            if (j == steps.size()) {
                f(k);
                return;
            }
            for (long v = two_sided[j] ? -w : 0; v <= w; ++v) {
                k[j] = v;
                rec(j + 1);
            }
        };
        rec(0);
    }
};

struct GradedDims {
    std::map<IVec, size_t> explicit_dims;
    std::vector<RayPattern> patterns;

    bool finite() const { return patterns.empty(); }

    size_t dim_at(const IVec& m) const {
        size_t d = 0;
        auto it = explicit_dims.find(m);
        if (it != explicit_dims.end()) d += it->second;
        for (const auto& p : patterns)
            if (p.params_of(m)) d += p.dim;
        return d;
    }

    size_t total() const {
        if (!finite()) throw Error("GradedDims::total: infinite support");
        size_t t = 0;
        for (const auto& [m, d] : explicit_dims) t += d;
        return t;
    }

    std::set<IVec> support_in_window(long w) const {
        std::set<IVec> s;
        for (const auto& [m, d] : explicit_dims)
            if (d) s.insert(m);
        for (const auto& p : patterns) p.for_each_in_window(w, [&](const std::vector<long>& k) { s.insert(p.point(k)); });
        return s;
    }

    bool supports_disjoint() const {
        for (const auto& [m, d] : explicit_dims)
            for (const auto& p : patterns)
                if (p.params_of(m)) return false;
        return true;
    }
};

// --- chart T^1 ------------------------------------------------------------------------

struct StanleyCell {
    Exponent base;
    std::vector<size_t> free;
};

namespace detail {

inline bool divides(const Exponent& g, const Exponent& e) {
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] > e[i]) return false;
    return true;
}

inline std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && divides(gens[j], gens[i]) && (gens[j] != gens[i])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

// Complement of a monomial ideal in k[vars], split on the variable of largest exponent.
inline std::vector<StanleyCell> stanley(const std::vector<Exponent>& J, const std::vector<size_t>& vars, size_t n) {
    for (const auto& g : J)
        if (std::all_of(g.begin(), g.end(), [](long x) { return x == 0; })) return {};
    if (J.empty()) return {StanleyCell{Exponent(n, 0), vars}};
    size_t x = 0;
    long e = 0;
    for (size_t v : vars)
        for (const auto& g : J)
            if (g[v] > e) {
                e = g[v];
                x = v;
            }
    if (e == 0) throw Error("stanley: generator outside the active variables");
    std::vector<size_t> rest;
    for (size_t v : vars)
        if (v != x) rest.push_back(v);
    std::vector<StanleyCell> out;
    auto slice = [&](long a) {
        std::vector<Exponent> ja;
        for (const auto& g : J)
            if (g[x] <= a) {
                Exponent h = g;
                h[x] = 0;
                ja.push_back(h);
            }
        return minimalize(ja);
    };
    for (long a = 0; a < e; ++a)
        for (auto c : stanley(slice(a), rest, n)) {
            c.base[x] += a;
            out.push_back(c);
        }
    for (auto c : stanley(slice(e), rest, n)) {
        c.base[x] += e;
        c.free.push_back(x);
        std::sort(c.free.begin(), c.free.end());
        out.push_back(c);
    }
    return out;
}

}  // namespace detail

// k[vars, inverted^-1] / J, graded by deg(monomial) + shift.
struct ChartT1 {
    std::vector<IVec> degrees;
    std::vector<Exponent> ideal;  // minimal monomial generators; inverted exponents are zero
    IVec shift;
    std::vector<bool> inverted;
    bool zero = false;            // unit ideal
    std::vector<StanleyCell> cells;

    size_t nvars() const { return degrees.size(); }

    static ChartT1 make(std::vector<IVec> degrees, std::vector<Exponent> ideal, IVec shift, std::vector<bool> inverted) {
        ChartT1 c;
        c.degrees = std::move(degrees);
        c.shift = std::move(shift);
        c.inverted = std::move(inverted);
        const size_t n = c.degrees.size();
        for (auto& g : ideal)
            for (size_t i = 0; i < n; ++i)
                if (c.inverted[i]) g[i] = 0;
        c.ideal = detail::minimalize(ideal);
        for (const auto& g : c.ideal)
            if (std::all_of(g.begin(), g.end(), [](long x) { return x == 0; })) c.zero = true;
        if (c.zero) {
            c.ideal = {Exponent(n, 0)};
            return c;
        }
        std::vector<size_t> vars, inv;
        for (size_t i = 0; i < n; ++i) (c.inverted[i] ? inv : vars).push_back(i);
        c.cells = detail::stanley(c.ideal, vars, n);
        for (auto& cell : c.cells) {
            cell.free.insert(cell.free.end(), inv.begin(), inv.end());
            std::sort(cell.free.begin(), cell.free.end());
        }
        return c;
    }

    IVec degree_of(const Exponent& e) const {
        IVec d = shift;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) d = add(d, scale(degrees[i], e[i]));
        return d;
    }

    RayPattern pattern(const StanleyCell& cell) const {
        RayPattern p;
        p.base = degree_of(cell.base);
        for (size_t v : cell.free) {
            p.steps.push_back(degrees[v]);
            p.two_sided.push_back(inverted[v]);
        }
        if (!p.steps.empty() && rank(p.steps) != p.steps.size())
            throw Error("ChartT1: Stanley cell has dependent step degrees");
        return p;
    }

    GradedDims dims() const {
        GradedDims g;
        for (const auto& cell : cells) {
            RayPattern p = pattern(cell);
            if (p.steps.empty())
                g.explicit_dims[p.base] += 1;
            else
                g.patterns.push_back(p);
        }
        return g;
    }

    // standard (Laurent) monomials of degree m
    std::vector<Exponent> basis_at(const IVec& m) const {
        std::vector<Exponent> out;
        for (const auto& cell : cells) {
            auto k = pattern(cell).params_of(m);
            if (!k) continue;
            Exponent e = cell.base;
            for (size_t j = 0; j < cell.free.size(); ++j) e[cell.free[j]] += (*k)[j].get_si();
            out.push_back(e);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_standard(const Exponent& e) const {
        if (zero) return false;
        Exponent r = e;
        for (size_t i = 0; i < r.size(); ++i) {
            if (inverted[i]) r[i] = 0;
            else if (r[i] < 0) return false;
        }
        for (const auto& g : ideal)
            if (detail::divides(g, r)) return false;
        return true;
    }
};

// T^1 of {f = 0}: k[x] / (f, df/dx_i), which must reduce to a monomial ideal.
inline ChartT1 hypersurface_t1(const Polynomial& f, const std::vector<IVec>& degrees) {
    const size_t n = f.nvars();
    if (degrees.size() != n || n == 0) throw InputError("hypersurface_t1: one degree per variable is required");
    if (f.is_zero() || f.total_degree() == 0) throw InputError("hypersurface_t1: f must be a non-constant polynomial");
    auto df = homogeneous_degree(f, degrees);
    if (!df) throw InputError("hypersurface_t1: f is not homogeneous for the grading");
    std::vector<Polynomial> gens{f};
    for (size_t i = 0; i < n; ++i) gens.push_back(derivative(f, i));
    ReducedGB G = buchberger(gens, n);
    std::vector<Exponent> J;
    for (const auto& g : G.gens) {
        if (!g.is_monomial()) throw Error("hypersurface_t1: T1 ideal is not monomial: " + format_polynomial(g, indexed_names("x", n, 1)));
        Exponent e(n);
        for (size_t i = 0; i < n; ++i) e[i] = g.terms()[0].m.e[i];
        J.push_back(e);
    }
    return ChartT1::make(degrees, J, neg(*df), std::vector<bool>(n, false));
}

// Localization at the face cut out by the given rays: invert every variable whose degree vanishes on them.
inline ChartT1 localized_chart_t1(const ChartT1& chart, const std::vector<IVec>& face_rays) {
    std::vector<bool> inv = chart.inverted;
    for (size_t j = 0; j < chart.nvars(); ++j) {
        bool vanish = true;
        for (const auto& r : face_rays)
            if (idot(chart.degrees[j], r) != 0) vanish = false;
        if (vanish) inv[j] = true;
    }
    if (chart.zero) {
        ChartT1 c = chart;
        c.inverted = inv;
        return c;
    }
    return ChartT1::make(chart.degrees, chart.ideal, chart.shift, inv);
}

inline ChartT1 localized_chart_t1(const ChartT1& chart, size_t variable) {
    if (variable >= chart.nvars()) throw InputError("localized_chart_t1: variable out of range");
    std::vector<bool> inv = chart.inverted;
    inv[variable] = true;
    if (chart.zero) {
        ChartT1 c = chart;
        c.inverted = inv;
        return c;
    }
    return ChartT1::make(chart.degrees, chart.ideal, chart.shift, inv);
}

// --- Cech complex over the charts of a singular curve ----------------------------------

struct CurveCover {
    struct Overlap {
        size_t tail = 0, head = 0;
        std::pair<int, int> edge;
        ChartT1 tail_loc, head_loc;
    };
    std::vector<size_t> facets;
    std::vector<ChartT1> charts;
    std::vector<Overlap> overlaps;
};

inline CurveCover curve_cover(const Polytope& p, const SingularComponent& comp) {
    if (comp.edges.empty()) throw InputError("curve_cover: component has no singular curves");
    const auto verts = p.lattice_vertices();
    const auto& fv = p.facet_vertices();
    CurveCover cov;
    cov.facets = comp.facets;
    for (size_t fi : comp.facets) {
        std::vector<IVec> g;
        for (int j : fv[fi]) g.push_back(verts[j]);
        ChartPresentation pres = chart_presentation(Cone::generated_by(g));
        if (pres.ideal.size() != 1) throw Error("curve_cover: chart is not a hypersurface");
        cov.charts.push_back(hypersurface_t1(pres.ideal[0], pres.degrees));
    }
    for (const auto& e : comp.edges) {
        std::vector<size_t> on;
        for (size_t k = 0; k < comp.facets.size(); ++k) {
            const auto& f = fv[comp.facets[k]];
            if (std::binary_search(f.begin(), f.end(), e.first) && std::binary_search(f.begin(), f.end(), e.second))
                on.push_back(k);
        }
        if (on.size() != 2) throw Error("curve_cover: a singular edge must lie on exactly two charts");
        CurveCover::Overlap o;
        o.tail = on[0];
        o.head = on[1];
        o.edge = e;
        std::vector<IVec> rays{verts[e.first], verts[e.second]};
        o.tail_loc = localized_chart_t1(cov.charts[o.tail], rays);
        o.head_loc = localized_chart_t1(cov.charts[o.head], rays);
        cov.overlaps.push_back(o);
    }
    return cov;
}

struct CechDegree {
    size_t dim0 = 0, dim1 = 0, rank = 0;
    QMatrix d;  // rows: overlaps with a nonzero piece; columns: chart basis elements
    size_t h0() const { return dim0 - rank; }
    size_t h1() const { return dim1 - rank; }
};

// (d a)_e = a_head - a_tail, restriction coefficients +1.
inline CechDegree cech_at(const CurveCover& cov, const IVec& m) {
    CechDegree out;
    std::vector<std::vector<Exponent>> bases;
    std::vector<size_t> offset;
    for (const auto& c : cov.charts) {
        offset.push_back(out.dim0);
        bases.push_back(c.basis_at(m));
        out.dim0 += bases.back().size();
    }
    for (const auto& o : cov.overlaps) {
        size_t dt = o.tail_loc.basis_at(m).size(), dh = o.head_loc.basis_at(m).size();
        if (dt != dh) throw Error("cech_at: overlap dimensions disagree between the two charts at " + to_string(m));
        if (dt > 1) throw Error("cech_at: overlap piece of dimension > 1 at " + to_string(m));
        if (dt == 0) continue;
        QVec row(out.dim0, Rat(0));
        for (size_t j = 0; j < bases[o.tail].size(); ++j)
            if (o.tail_loc.is_standard(bases[o.tail][j])) row[offset[o.tail] + j] -= 1;
        for (size_t j = 0; j < bases[o.head].size(); ++j)
            if (o.head_loc.is_standard(bases[o.head][j])) row[offset[o.head] + j] += 1;
        out.d.push_back(row);
        ++out.dim1;
    }
    out.rank = out.d.empty() || out.dim0 == 0 ? 0 : rank(out.d);
    return out;
}

struct CechResult {
    std::map<IVec, size_t> h0, h1;
    long window = 0;
    size_t h0_total() const {
        size_t t = 0;
        for (const auto& [m, d] : h0) t += d;
        return t;
    }
    size_t h1_total() const {
        size_t t = 0;
        for (const auto& [m, d] : h1) t += d;
        return t;
    }
};

inline CechResult cech_h01(const CurveCover& cov, long window = 10) {
    if (window < 3) throw InputError("cech_h01: window must be at least 3");
    std::vector<GradedDims> pieces;
    for (const auto& c : cov.charts) pieces.push_back(c.dims());
    for (const auto& o : cov.overlaps) pieces.push_back(o.tail_loc.dims());
    CechResult r;
    r.window = window;
    std::set<IVec> candidates;
    for (const auto& g : pieces) {
        auto s = g.support_in_window(window);
        candidates.insert(s.begin(), s.end());
    }
    for (const auto& m : candidates) {
        CechDegree c = cech_at(cov, m);
        if (c.h0()) r.h0[m] = c.h0();
        if (c.h1()) r.h1[m] = c.h1();
    }
    // The symbolic tails must be acyclic on the window's boundary shell and beyond it.
    for (const auto& g : pieces)
        for (const auto& p : g.patterns)
            p.for_each_in_window(window, [&](const std::vector<long>& k) {
                long mx = 0;
                for (long x : k) mx = std::max(mx, std::labs(x));
                if (mx < window - 1) return;
                std::vector<long> far = k;
                for (auto& x : far) x *= 2;
                for (const auto& m : {p.point(k), p.point(far)}) {
                    CechDegree c = cech_at(cov, m);
                    if (c.h0() || c.h1()) throw Error("cech_h01: window too small to certify the tail through " + to_string(m));
                }
            });
    return r;
}

// --- catalogs ---------------------------------------------------------------------------

struct MilnorBetti {
    long b2 = 0, b3 = 0;
    long reduced_chi() const { return b2 - b3; }
};

struct CatalogComponent {
    std::string name;
    long dim = 0;
    std::vector<std::string> ideal;  // in the entry's local variables s1, s2, ...
    bool smoothing = false;
    std::optional<MilnorBetti> milnor;
};

struct SingularityCatalogEntry {
    std::string key;
    long t1_dim = 0;
    std::vector<long> var_multipliers;  // T^1 degree of variable k is multiplier_k * m_F
    std::vector<std::string> relations;
    std::vector<CatalogComponent> components;
    bool qg_rigid = false;
    bool reduced_base = true;
    std::optional<long> t2_dim;
    std::vector<long> t2_multipliers;
    std::string source;
    std::vector<std::string> notes;

    std::vector<std::string> local_names() const { return indexed_names("s", var_multipliers.size(), 1); }
};

using SingularityCatalog = std::map<std::string, SingularityCatalogEntry>;

struct FanoCatalogRow {
    std::string family;
    long picard_rank = 0;
    Rat degree;
    std::optional<long> euler;
    bool very_ample = true;
    std::string source;
};

inline void validate_catalog(const SingularityCatalog& cat) {
    for (const auto& [key, e] : cat) {
        if (e.qg_rigid) continue;
        const size_t n = e.var_multipliers.size();
        if (static_cast<long>(n) != e.t1_dim) throw Error("catalog " + key + ": variable count differs from T1 dimension");
        auto names = e.local_names();
        auto rel = parse_polynomials(e.relations, names);
        std::vector<std::vector<Polynomial>> comps;
        long maxdim = -1;
        for (const auto& c : e.components) {
            auto id = parse_polynomials(c.ideal, names);
            if (krull_dimension(id, n) != c.dim) throw Error("catalog " + key + ": component " + c.name + " has the wrong dimension");
            for (const auto& r : rel)
                if (!ideal_membership(r, id, n)) throw Error("catalog " + key + ": component " + c.name + " misses a relation");
            if (c.smoothing != c.milnor.has_value()) throw Error("catalog " + key + ": Milnor data only for smoothing components");
            if (c.milnor && std::labs(c.milnor->reduced_chi()) > 1)
                throw Error("catalog " + key + ": reduced Euler characteristic outside {-1, 0, 1}");
            comps.push_back(id);
            maxdim = std::max(maxdim, c.dim);
        }
        long kd = rel.empty() ? static_cast<long>(n) : krull_dimension(rel, n);
        if (!comps.empty() && kd != maxdim) throw Error("catalog " + key + ": base dimension differs from its largest component");
        if (e.reduced_base && !comps.empty() && !rel.empty() && !ideal_equality(ideal_intersection(comps, n), rel, n))
            throw Error("catalog " + key + ": components do not intersect to the relation ideal");
    }
}

inline MilnorBetti milnor_lookup(const SingularityCatalog& cat, const std::string& key, const std::string& component) {
    auto it = cat.find(key);
    if (it == cat.end()) throw InputError("milnor_lookup: unknown singularity " + key);
    for (const auto& c : it->second.components)
        if (c.name == component) {
            if (!c.milnor) throw InputError("milnor_lookup: component " + component + " is not a smoothing");
            return *c.milnor;
        }
    throw InputError("milnor_lookup: unknown component " + component + " of " + key);
}

// Component by dimension, the way the literature labels the dP6-cone smoothings.
inline MilnorBetti milnor_lookup(const SingularityCatalog& cat, const std::string& key, long component_dim) {
    auto it = cat.find(key);
    if (it == cat.end()) throw InputError("milnor_lookup: unknown singularity " + key);
    std::optional<MilnorBetti> found;
    for (const auto& c : it->second.components)
        if (c.dim == component_dim && c.milnor) {
            if (found) throw InputError("milnor_lookup: component dimension is ambiguous");
            found = c.milnor;
        }
    if (!found) throw InputError("milnor_lookup: no smoothing component of that dimension");
    return *found;
}

// --- miniversal bases ----------------------------------------------------------------------

struct BaseComponent {
    long dim = 0;
    std::vector<Polynomial> ideal;
    std::vector<std::string> choice;         // catalog component per singular factor
    std::vector<MilnorBetti> milnor;         // one per smoothing factor
    bool smoothing = true;
};

struct MiniversalBase {
    std::vector<std::string> names;
    std::vector<IVec> degrees;
    std::vector<Polynomial> relations;
    std::vector<BaseComponent> components;
    std::vector<std::string> factor_keys;

    size_t nvars() const { return names.size(); }
};

namespace detail {

struct Factor {
    const SingularityCatalogEntry* entry;
    IVec polar_vertex;
};

inline std::vector<Factor> catalog_factors(const SingularLocusReport& rep, const SingularityCatalog& cat) {
    std::vector<Factor> out;
    for (const auto& c : rep.components) {
        if (c.kind == SingularKind::transverse_A1_curve || c.kind == SingularKind::curve_other) continue;
        auto it = cat.find(c.key);
        if (it == cat.end()) throw Error("no catalog entry for singularity " + c.key);
        if (it->second.qg_rigid) continue;
        if (!c.polar_vertex) throw Error("singularity " + c.key + " has no polar vertex");
        out.push_back({&it->second, *c.polar_vertex});
    }
    return out;
}

inline std::vector<Polynomial> shift_vars(const std::vector<Polynomial>& ps, size_t offset, size_t n) {
    std::vector<Polynomial> out;
    for (const auto& p : ps) {
        std::vector<size_t> map(p.nvars());
        for (size_t i = 0; i < map.size(); ++i) map[i] = offset + i;
        out.push_back(p.remap(map, n));
    }
    return out;
}

inline MiniversalBase build_base(const std::vector<Factor>& factors, std::vector<IVec> free_degrees, long first_index) {
    MiniversalBase b;
    size_t n = 0;
    for (const auto& f : factors) n += f.entry->var_multipliers.size();
    std::sort(free_degrees.begin(), free_degrees.end());
    n += free_degrees.size();
    b.names = indexed_names("t", n, first_index);
    std::vector<size_t> offsets;
    size_t off = 0;
    for (const auto& f : factors) {
        offsets.push_back(off);
        b.factor_keys.push_back(f.entry->key);
        for (long k : f.entry->var_multipliers) b.degrees.push_back(scale(f.polar_vertex, k));
        auto rel = parse_polynomials(f.entry->relations, f.entry->local_names());
        for (const auto& r : shift_vars(rel, off, n)) b.relations.push_back(r);
        off += f.entry->var_multipliers.size();
    }
    for (const auto& d : free_degrees) b.degrees.push_back(d);
    // distribute components
    std::vector<BaseComponent> acc{BaseComponent{static_cast<long>(free_degrees.size()), {}, {}, {}, true}};
    for (size_t fi = 0; fi < factors.size(); ++fi) {
        const auto& e = *factors[fi].entry;
        std::vector<BaseComponent> next;
        for (const auto& a : acc)
            for (const auto& c : e.components) {
                BaseComponent x = a;
                x.dim += c.dim;
                for (const auto& g : shift_vars(parse_polynomials(c.ideal, e.local_names()), offsets[fi], n)) x.ideal.push_back(g);
                x.choice.push_back(c.name);
                if (c.milnor) x.milnor.push_back(*c.milnor);
                x.smoothing = x.smoothing && c.smoothing;
                next.push_back(x);
            }
        acc = next;
    }
    b.components = acc;
    return b;
}

}  // namespace detail

inline long base_dimension(const MiniversalBase& b) {
    if (b.nvars() == 0) return 0;
    if (b.relations.empty()) return static_cast<long>(b.nvars());
    return krull_dimension(b.relations, b.nvars());
}

// Checks the component list against the relation ideal; the intersection test needs a reduced base.
inline void validate_base(const MiniversalBase& b, bool reduced) {
    const size_t n = b.nvars();
    long maxdim = -1;
    for (const auto& c : b.components) {
        long d = c.ideal.empty() ? static_cast<long>(n) : krull_dimension(c.ideal, n);
        if (d != c.dim) throw Error("miniversal base: component dimension mismatch");
        maxdim = std::max(maxdim, c.dim);
    }
    if (n == 0) return;
    if (base_dimension(b) != maxdim) throw Error("miniversal base: dimension differs from its largest component");
    if (reduced && !b.relations.empty()) {
        std::vector<std::vector<Polynomial>> ids;
        for (const auto& c : b.components) ids.push_back(c.ideal);
        if (!ideal_equality(ideal_intersection(ids, n), b.relations, n))
            throw Error("miniversal base: components do not intersect to the relation ideal");
    }
}

// Isolated singularities come first (by polar vertex, descending), then the unobstructed H^0 block.
inline MiniversalBase assemble_miniversal_base(const SingularLocusReport& rep, const std::vector<CechResult>& curves,
                                               const SingularityCatalog& cat, long first_index = 1) {
    auto factors = detail::catalog_factors(rep, cat);
    std::vector<IVec> h0;
    for (const auto& c : curves) {
        if (c.h1_total() != 0) throw Error("assemble_miniversal_base: curve contributes obstructions; use qg_assemble");
        for (const auto& [m, d] : c.h0)
            for (size_t k = 0; k < d; ++k) h0.push_back(m);
    }
    MiniversalBase b = detail::build_base(factors, h0, first_index);
    bool reduced = true;
    for (const auto& f : factors) reduced = reduced && f.entry->reduced_base;
    validate_base(b, reduced);
    return b;
}

inline MiniversalBase product_base(const MiniversalBase& a, const MiniversalBase& b, long first_index = 1) {
    if (b.nvars() == 0 && b.relations.empty()) return a;
    if (a.nvars() == 0 && a.relations.empty()) return b;
    MiniversalBase p;
    const size_t n = a.nvars() + b.nvars();
    p.names = indexed_names("t", n, first_index);
    p.degrees = a.degrees;
    p.degrees.insert(p.degrees.end(), b.degrees.begin(), b.degrees.end());
    p.relations = detail::shift_vars(a.relations, 0, n);
    for (const auto& r : detail::shift_vars(b.relations, a.nvars(), n)) p.relations.push_back(r);
    p.factor_keys = a.factor_keys;
    p.factor_keys.insert(p.factor_keys.end(), b.factor_keys.begin(), b.factor_keys.end());
    for (const auto& ca : a.components)
        for (const auto& cb : b.components) {
            BaseComponent c;
            c.dim = ca.dim + cb.dim;
            c.ideal = detail::shift_vars(ca.ideal, 0, n);
            for (const auto& g : detail::shift_vars(cb.ideal, a.nvars(), n)) c.ideal.push_back(g);
            c.choice = ca.choice;
            c.choice.insert(c.choice.end(), cb.choice.begin(), cb.choice.end());
            c.milnor = ca.milnor;
            c.milnor.insert(c.milnor.end(), cb.milnor.begin(), cb.milnor.end());
            c.smoothing = ca.smoothing && cb.smoothing;
            p.components.push_back(c);
        }
    return p;
}

struct QGAssembly {
    std::vector<IVec> t1_degrees;
    std::vector<IVec> t2_degrees;
    MiniversalBase base;
    bool consistent = false;
};

inline QGAssembly qg_assemble(const SingularLocusReport& rep, const std::vector<CechResult>& curves,
                              const SingularityCatalog& cat, long first_index = 0) {
    QGAssembly q;
    auto factors = detail::catalog_factors(rep, cat);
    std::vector<IVec> h0;
    for (const auto& f : factors) {
        for (long k : f.entry->var_multipliers) q.t1_degrees.push_back(scale(f.polar_vertex, k));
        for (long k : f.entry->t2_multipliers) q.t2_degrees.push_back(scale(f.polar_vertex, k));
    }
    for (const auto& c : curves) {
        for (const auto& [m, d] : c.h0)
            for (size_t k = 0; k < d; ++k) {
                q.t1_degrees.push_back(m);
                h0.push_back(m);
            }
        for (const auto& [m, d] : c.h1)
            for (size_t k = 0; k < d; ++k) q.t2_degrees.push_back(m);
    }
    std::sort(q.t2_degrees.begin(), q.t2_degrees.end());
    q.base = detail::build_base(factors, h0, first_index);
    bool reduced = true;
    for (const auto& f : factors) reduced = reduced && f.entry->reduced_base;
    validate_base(q.base, reduced);
    q.consistent = true;
    for (const auto& r : q.base.relations) {
        auto d = homogeneous_degree(r, q.base.degrees);
        if (!d || !std::binary_search(q.t2_degrees.begin(), q.t2_degrees.end(), *d)) q.consistent = false;
    }
    if (!q.consistent) throw Error("qg_assemble: a relation degree lies outside the T2 degrees");
    return q;
}

// --- smoothing identification ----------------------------------------------------------

struct SmoothingAssignment {
    size_t component = 0;
    long dim = 0;
    std::string family;
    long euler = 0;
};

struct SmoothingIdentification {
    bool already_smooth = false;
    std::optional<long> chi_curves;  // Euler characteristic of vanishing cycles along the curves
    std::vector<long> candidate_chi_curves;
    std::vector<SmoothingAssignment> assignments;
};

inline SmoothingIdentification identify_smoothings(const BettiProfile& betti, const MiniversalBase& base,
                                                   const SingularLocusReport& rep, const std::vector<FanoCatalogRow>& rows,
                                                   const Rat& degree) {
    SmoothingIdentification out;
    if (rep.components.empty()) {
        out.already_smooth = true;
        return out;
    }
    std::vector<const FanoCatalogRow*> cand;
    for (const auto& r : rows)
        if (r.degree == degree && r.very_ample) cand.push_back(&r);
    size_t curve_count = 0;
    for (const auto& c : rep.components) curve_count += c.curve_count;
    std::vector<size_t> comps;
    for (size_t i = 0; i < base.components.size(); ++i)
        if (base.components[i].smoothing) comps.push_back(i);
    if (comps.empty()) throw Error("identify_smoothings: the base has no smoothing component");
    std::vector<long> known;
    bool milnor_b2_zero = true;
    for (size_t i : comps) {
        long k = betti.chi;
        for (const auto& m : base.components[i].milnor) {
            k += m.reduced_chi();
            if (m.b2 != 0) milnor_b2_zero = false;
        }
        known.push_back(k);
    }
    auto rows_with_chi = [&](long chi, bool rank_filter) {
        std::vector<const FanoCatalogRow*> hit;
        for (auto* r : cand) {
            if (!r->euler || *r->euler != chi) continue;
            if (rank_filter && r->picard_rank != betti.b[2]) continue;
            hit.push_back(r);
        }
        return hit;
    };
    std::vector<long> us;
    if (curve_count == 0) {
        us.push_back(0);
    } else {
        std::set<long> tried;
        for (auto* r : cand) {
            if (!r->euler) continue;
            for (long k : known) tried.insert(*r->euler - k);
        }
        for (long u : tried) {
            if (u % static_cast<long>(curve_count) != 0) continue;
            bool ok = true;
            for (long k : known)
                if (rows_with_chi(k + u, false).empty()) ok = false;
            if (ok) us.push_back(u);
        }
    }
    out.candidate_chi_curves = us;
    if (us.size() != 1) throw Error("identify_smoothings: " + std::to_string(us.size()) + " consistent Euler characteristics for the curves");
    if (curve_count) out.chi_curves = us[0];
    bool rank_filter = curve_count == 0 && milnor_b2_zero;
    for (size_t j = 0; j < comps.size(); ++j) {
        long chi = known[j] + us[0];
        auto hit = rows_with_chi(chi, rank_filter);
        if (hit.size() != 1)
            throw Error("identify_smoothings: " + std::to_string(hit.size()) + " catalog rows with Euler characteristic " + std::to_string(chi));
        out.assignments.push_back({comps[j], base.components[comps[j]].dim, hit[0]->family, chi});
    }
    return out;
}

}  // namespace kfano

#endif
