#ifndef KFANO_FAN_HPP
#define KFANO_FAN_HPP

#include <numeric>

#include "grobner.hpp"
#include "polytope.hpp"

namespace kfano {

struct Cone {
    std::vector<IVec> rays;  // primitive, lex sorted
    size_t rank = 0;

    static Cone generated_by(std::vector<IVec> gens) {
        if (gens.empty()) throw InputError("cone needs at least one generator");
        Cone c;
        c.rank = gens[0].size();
        for (auto& g : gens) {
            if (is_zero(g)) throw InputError("cone generator is zero");
            g = primitive(g);
        }
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        c.rays = gens;
        return c;
    }
    size_t dim() const { return kfano::rank(rays); }
    bool full_dimensional() const { return dim() == rank; }
};

// Coordinates of the rays in a basis of the saturated lattice they span.
struct LocalCone {
    std::vector<IVec> basis;  // basis of the saturated sublattice, in ambient coordinates
    std::vector<IVec> rays;   // local coordinates, same order as the cone
};

inline LocalCone local_cone(const Cone& c) {
    LocalCone lc;
    lc.basis = saturate_lattice(c.rays, c.rank);
    IntegerMatrix bt = IntegerMatrix::from_cols(lc.basis, c.rank);
    for (const auto& r : c.rays) {
        auto y = integer_solve(bt, r);
        if (!y) throw Error("local_cone: ray outside its saturated span");
        lc.rays.push_back(*y);
    }
    return lc;
}

namespace detail {

// conv(0, rays) in a full-rank lattice.
inline Polytope cone_slab(const std::vector<IVec>& rays) {
    std::vector<IVec> pts = rays;
    pts.push_back(IVec(rays[0].size(), Int(0)));
    return hull(pts);
}

// Inner primitive normals of a full-dimensional strongly convex cone.
inline std::vector<IVec> full_cone_dual_rays(const std::vector<IVec>& rays) {
    Polytope s = cone_slab(rays);
    std::vector<IVec> out;
    for (const auto& h : s.facets())
        if (h.rhs == 0) out.push_back(h.normal);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool strongly_convex_local(const std::vector<IVec>& rays) {
    Polytope s = cone_slab(rays);
    QVec zero(rays[0].size(), Rat(0));
    for (const auto& v : s.vertices())
        if (v == zero) return true;
    return false;
}

}  // namespace detail

struct ConeReport {
    size_t dim = 0;
    bool simplicial = false;
    bool smooth = false;
    bool q_gorenstein = false;
    Int gorenstein_index = 0;        // 0 when not Q-Gorenstein
    std::optional<QVec> gorenstein_functional;  // ambient u with <u, v> = 1 on rays (full-dimensional cones)
    Int multiplicity = 0;            // |det| of the local ray matrix (simplicial cones)
    bool cyclic = false;
    std::vector<long> quotient_weights;
    std::string quotient_type;       // e.g. "1/3(1,1,2)"; empty when smooth or non-simplicial
    bool canonical = false;
    bool terminal = false;
};

namespace detail {

using QPoint = std::vector<Rat>;

inline QPoint frac_mod1(QPoint x) {
    for (auto& c : x) c -= Rat(floor_of(c));
    return x;
}

// The group N_sigma / (sublattice spanned by the rays) as points of [0,1)^k in ray coordinates.
inline std::vector<QPoint> quotient_group(const std::vector<IVec>& local_rays) {
    const size_t k = local_rays.size();
    QMatrix b(k, QVec(k));
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < k; ++i) b[i][j] = local_rays[j][i];
    QMatrix binv = *inverse(b);
    std::vector<QPoint> gens;
    for (size_t j = 0; j < k; ++j) {
        QPoint g(k);
        for (size_t i = 0; i < k; ++i) g[i] = binv[i][j];
        gens.push_back(frac_mod1(g));
    }
    std::set<QPoint> seen{QPoint(k, Rat(0))};
    std::vector<QPoint> frontier{QPoint(k, Rat(0))};
    while (!frontier.empty()) {
        std::vector<QPoint> next;
        for (const auto& a : frontier)
            for (const auto& g : gens) {
                QPoint s(k);
                for (size_t i = 0; i < k; ++i) s[i] = a[i] + g[i];
                s = frac_mod1(s);
                if (seen.insert(s).second) next.push_back(s);
            }
        frontier = next;
    }
    return std::vector<QPoint>(seen.begin(), seen.end());
}

inline Int element_order(const QPoint& x) {
    Int l = 1;
    for (const auto& c : x) l = lcm(l, Int(c.get_den()));
    return l;
}

}  // namespace detail

inline std::string quotient_type_string(const Int& r, const std::vector<long>& w) {
    std::string s = "1/" + r.get_str() + "(";
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

inline ConeReport cone_report(const Cone& c) {
    ConeReport r;
    LocalCone lc = local_cone(c);
    const size_t k = lc.basis.size();
    r.dim = k;
    if (!detail::strongly_convex_local(lc.rays)) throw InputError("cone_report: cone is not strongly convex");
    r.simplicial = c.rays.size() == k;
    if (r.simplicial) {
        IntegerMatrix b = IntegerMatrix::from_cols(lc.rays, k);
        r.multiplicity = abs(determinant(b));
        r.smooth = r.multiplicity == 1;
    }
    // Gorenstein functional in local coordinates
    QMatrix a;
    for (const auto& v : lc.rays) a.push_back(to_q(v));
    auto u = solve(a, QVec(lc.rays.size(), Rat(1)), k);
    if (u) {
        r.q_gorenstein = true;
        Int idx = 1;
        for (const auto& x : *u) idx = lcm(idx, Int(x.get_den()));
        r.gorenstein_index = idx;
        if (k == c.rank) {
            QMatrix aa;
            for (const auto& v : c.rays) aa.push_back(to_q(v));
            r.gorenstein_functional = solve(aa, QVec(c.rays.size(), Rat(1)), c.rank);
        }
        r.canonical = true;
        r.terminal = true;
        std::set<IVec> rayset(lc.rays.begin(), lc.rays.end());
        for (const auto& p : lattice_points(detail::cone_slab(lc.rays))) {
            if (is_zero(p)) continue;
            Rat h = dot(*u, p);
            if (h < 1) r.canonical = false;
            if (h <= 1 && !rayset.count(p)) r.terminal = false;
        }
    }
    if (r.simplicial && !r.smooth) {
        auto group = detail::quotient_group(lc.rays);
        const Int order = r.multiplicity;
        std::vector<long> best;
        for (const auto& g : group) {
            if (detail::element_order(g) != order) continue;
            r.cyclic = true;
            std::vector<long> w;
            for (const auto& x : g) w.push_back(Rat(x * Rat(order)).get_num().get_si());
            std::sort(w.begin(), w.end());
            if (best.empty() || w < best) best = w;
        }
        if (r.cyclic) {
            r.quotient_weights = best;
            r.quotient_type = quotient_type_string(order, best);
        } else {
            r.quotient_type = "noncyclic(" + order.get_str() + ")";
        }
    }
    return r;
}

// Minimal generators of the dual cone's lattice points, sorted by height over the sum of the rays.
inline std::vector<IVec> dual_cone_hilbert_basis(const Cone& c) {
    LocalCone lc = local_cone(c);
    const size_t k = lc.basis.size();
    std::vector<IVec> local_hb;
    {
        std::vector<IVec> w = detail::full_cone_dual_rays(lc.rays);
        IVec csum(k, Int(0));
        for (const auto& v : lc.rays) csum = add(csum, v);
        Int bound = 0;
        for (const auto& wj : w) bound += idot(wj, csum);
        std::vector<Halfspace> ineqs;
        for (const auto& v : lc.rays) ineqs.push_back({v, Rat(0)});
        ineqs.push_back({neg(csum), Rat(-bound)});
        std::vector<IVec> pts = lattice_points(Polytope::from_inequalities(ineqs, k));
        std::sort(pts.begin(), pts.end(), [&](const IVec& a, const IVec& b) {
            Int ha = idot(a, csum), hb = idot(b, csum);
            if (ha != hb) return ha < hb;
            return a < b;
        });
        std::set<IVec> all(pts.begin(), pts.end());
        for (const auto& m : pts) {
            if (is_zero(m)) continue;
            bool reducible = false;
            for (const auto& a : local_hb)
                if (idot(a, csum) < idot(m, csum) && all.count(sub(m, a))) {
                    reducible = true;
                    break;
                }
            // any decomposition m = a + b has a irreducible after refining, so testing hb elements suffices
            if (!reducible) local_hb.push_back(m);
        }
    }
    if (k == c.rank) return local_hb;
    // lift from the dual of the sublattice, then add plus/minus a basis of the orthogonal complement
    IntegerMatrix bt = IntegerMatrix::from_rows(lc.basis, c.rank);
    std::vector<IVec> out;
    for (const auto& m : local_hb) {
        auto lift = integer_solve(bt, m);
        if (!lift) throw Error("dual_cone_hilbert_basis: lift failed");
        out.push_back(*lift);
    }
    for (const auto& w : integer_kernel(bt)) {
        out.push_back(w);
        out.push_back(neg(w));
    }
    return out;
}

struct ChartPresentation {
    std::vector<IVec> degrees;  // Hilbert basis of the dual cone; variable i has degree degrees[i]
    std::vector<Polynomial> ideal;
};

inline ChartPresentation chart_presentation(const Cone& c) {
    ChartPresentation p;
    p.degrees = dual_cone_hilbert_basis(c);
    p.ideal = toric_ideal(p.degrees);
    return p;
}

// ---- fans ----

struct Fan {
    size_t rank = 0;
    std::vector<IVec> rays;
    std::vector<std::vector<int>> cones;  // maximal cones as sorted ray indices

    Cone cone(size_t i) const {
        std::vector<IVec> g;
        for (int j : cones.at(i)) g.push_back(rays[j]);
        return Cone::generated_by(g);
    }
    // Cones as sets of ray vectors, for comparison independent of indexing.
    std::set<std::vector<IVec>> cone_set() const {
        std::set<std::vector<IVec>> s;
        for (size_t i = 0; i < cones.size(); ++i) s.insert(cone(i).rays);
        return s;
    }
    // Face counts (rays, 2-cones, ..., maximal cones) for fans whose cones are faces of a common complex.
    std::vector<size_t> face_counts() const;
};

inline Fan face_fan(const Polytope& p) {
    if (!is_fano_polytope(p)) throw InputError("face_fan: polytope is not Fano");
    Fan f;
    f.rank = p.lattice_rank();
    f.rays = p.lattice_vertices();
    f.cones = p.facet_vertices();
    return f;
}

inline Fan normal_fan(const Polytope& q) {
    if (!q.full_dimensional()) throw InputError("normal_fan: polytope is not full-dimensional");
    Fan f;
    f.rank = q.lattice_rank();
    for (const auto& h : q.facets()) f.rays.push_back(primitive(h.normal));
    const auto& verts = q.vertices();
    for (const auto& v : verts) {
        std::vector<int> c;
        for (size_t i = 0; i < q.facets().size(); ++i)
            if (dot(q.facets()[i].normal, v) == q.facets()[i].rhs) c.push_back(static_cast<int>(i));
        f.cones.push_back(c);
    }
    return f;
}

namespace detail {

// Ray subsets spanning the facets of a full-dimensional cone.
inline std::vector<std::vector<int>> cone_facets(const Fan& f, size_t ci) {
    std::vector<IVec> g;
    for (int j : f.cones[ci]) g.push_back(f.rays[j]);
    std::vector<std::vector<int>> out;
    for (const auto& w : full_cone_dual_rays(g)) {
        std::vector<int> on;
        for (int j : f.cones[ci])
            if (idot(w, f.rays[j]) == 0) on.push_back(j);
        out.push_back(on);
    }
    return out;
}

// All faces of the fan (as ray index sets), grouped by dimension.
inline std::vector<std::set<std::vector<int>>> fan_faces(const Fan& f) {
    std::vector<std::set<std::vector<int>>> by_dim(f.rank + 1);
    std::vector<std::vector<int>> frontier;
    std::set<std::vector<int>> seen;
    for (size_t i = 0; i < f.cones.size(); ++i) {
        frontier.push_back(f.cones[i]);
        seen.insert(f.cones[i]);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& c : frontier) {
            std::vector<IVec> g;
            for (int j : c) g.push_back(f.rays[j]);
            size_t d = rank(g);
            by_dim[d].insert(c);
            if (d <= 1) continue;
            LocalCone lc = local_cone(Cone::generated_by(g));
            // facets of the cone in its own span
            std::vector<IVec> lr;
            for (int j : c) {
                IntegerMatrix bt = IntegerMatrix::from_cols(lc.basis, f.rank);
                lr.push_back(*integer_solve(bt, f.rays[j]));
            }
            for (const auto& w : full_cone_dual_rays(lr)) {
                std::vector<int> on;
                for (size_t t = 0; t < c.size(); ++t)
                    if (idot(w, lr[t]) == 0) on.push_back(c[t]);
                if (seen.insert(on).second) next.push_back(on);
            }
        }
        frontier = next;
    }
    return by_dim;
}

}  // namespace detail

inline std::vector<size_t> Fan::face_counts() const {
    auto faces = detail::fan_faces(*this);
    std::vector<size_t> out;
    for (size_t d = 1; d < faces.size(); ++d) out.push_back(faces[d].size());
    return out;
}

inline bool is_complete(const Fan& f) {
    std::map<std::vector<int>, int> count;
    for (size_t i = 0; i < f.cones.size(); ++i) {
        if (f.cone(i).dim() != f.rank) return false;
        for (const auto& fc : detail::cone_facets(f, i)) ++count[fc];
    }
    for (const auto& [k, v] : count)
        if (v != 2) return false;
    return !f.cones.empty();
}

// Dimension of rational piecewise-linear functions minus the globally linear ones.
inline long picard_rank(const Fan& f) {
    if (!is_complete(f)) throw InputError("picard_rank: fan is not complete");
    const size_t n = f.rays.size();
    QMatrix constraints;
    for (const auto& c : f.cones) {
        // relations among the rays of the cone: lambda with sum lambda_j v_j = 0
        QMatrix vt(f.rank, QVec(c.size()));
        for (size_t t = 0; t < c.size(); ++t)
            for (size_t i = 0; i < f.rank; ++i) vt[i][t] = f.rays[c[t]][i];
        for (const auto& lam : nullspace(vt, c.size())) {
            QVec row(n, Rat(0));
            for (size_t t = 0; t < c.size(); ++t) row[c[t]] = lam[t];
            constraints.push_back(row);
        }
    }
    size_t r = constraints.empty() ? 0 : rank(constraints);
    return static_cast<long>(n - r) - static_cast<long>(f.rank);
}

using ToricDivisor = IVec;  // coefficient per ray of the fan

// m_sigma with <m_sigma, v_rho> = -a_rho on the rays of each maximal cone.
inline std::optional<std::vector<QVec>> cartier_data(const ToricDivisor& d, const Fan& f) {
    std::vector<QVec> out;
    for (const auto& c : f.cones) {
        QMatrix a;
        QVec b;
        for (int j : c) {
            a.push_back(to_q(f.rays[j]));
            b.push_back(Rat(-d.at(j)));
        }
        auto m = solve(a, b, f.rank);
        if (!m) return std::nullopt;
        out.push_back(*m);
    }
    return out;
}

inline bool is_q_cartier(const ToricDivisor& d, const Fan& f) { return cartier_data(d, f).has_value(); }

inline bool is_cartier(const ToricDivisor& d, const Fan& f) {
    for (const auto& c : f.cones) {
        std::vector<IVec> rows;
        IVec b;
        for (int j : c) {
            rows.push_back(f.rays[j]);
            b.push_back(-d.at(j));
        }
        if (!integer_solve(IntegerMatrix::from_rows(rows, f.rank), b)) return false;
    }
    return true;
}

inline bool is_nef(const ToricDivisor& d, const Fan& f) {
    auto data = cartier_data(d, f);
    if (!data) return false;
    for (const auto& m : *data)
        for (size_t j = 0; j < f.rays.size(); ++j)
            if (dot(m, f.rays[j]) < Rat(-d[j])) return false;
    return true;
}

inline bool is_ample(const ToricDivisor& d, const Fan& f) {
    auto data = cartier_data(d, f);
    if (!data) return false;
    for (size_t ci = 0; ci < f.cones.size(); ++ci) {
        const auto& c = f.cones[ci];
        for (size_t j = 0; j < f.rays.size(); ++j) {
            if (std::binary_search(c.begin(), c.end(), static_cast<int>(j))) continue;
            if (dot((*data)[ci], f.rays[j]) <= Rat(-d[j])) return false;
        }
    }
    return true;
}

inline ToricDivisor anticanonical_divisor(const Fan& f) { return IVec(f.rays.size(), Int(1)); }

// ---- singular locus of the toric variety of a Fano polytope ----

enum class SingularKind { isolated_gorenstein_cone, isolated_quotient, isolated_other, transverse_A1_curve, curve_other };

inline std::string to_string(SingularKind k) {
    switch (k) {
        case SingularKind::isolated_gorenstein_cone: return "isolated_gorenstein_cone";
        case SingularKind::isolated_quotient: return "isolated_quotient";
        case SingularKind::isolated_other: return "isolated_other";
        case SingularKind::transverse_A1_curve: return "transverse_A1_curve";
        default: return "curve_other";
    }
}

struct SingularComponent {
    SingularKind kind;
    std::string key;                          // catalog key, e.g. "dP6_cone", "1/3(1,1,2)"
    std::vector<size_t> facets;               // facet indices of the polytope
    std::vector<std::pair<int, int>> edges;   // singular edges (vertex index pairs)
    size_t curve_count = 0;
    bool cycle = false;
    std::optional<IVec> polar_vertex;         // m_F with <m_F, F> = -1, for isolated points on a lattice facet
};

struct SingularLocusReport {
    std::vector<SingularComponent> components;
    size_t count(SingularKind k) const {
        size_t c = 0;
        for (const auto& x : components) c += x.kind == k;
        return c;
    }
    size_t count_key(const std::string& key) const {
        size_t c = 0;
        for (const auto& x : components) c += x.key == key;
        return c;
    }
};

inline std::string gorenstein_cone_key(PolygonTag t) {
    switch (t) {
        case PolygonTag::dP6_hexagon: return "dP6_cone";
        case PolygonTag::F1_quadrilateral: return "F1_cone";
        case PolygonTag::standard_square: return "ODP";
        default: return "gorenstein_" + to_string(t);
    }
}

inline std::optional<IVec> facet_polar_vertex(const Polytope& p, size_t fi) {
    const Halfspace& h = p.facets()[fi];
    // facet reads <n, x> >= rhs with rhs < 0; the polar vertex is n / (-rhs)
    QVec m;
    for (const auto& x : h.normal) m.push_back(Rat(x) / -h.rhs);
    if (!is_integral(m)) return std::nullopt;
    return to_int(m);
}

inline SingularLocusReport singular_locus_report(const Polytope& p) {
    if (!is_fano_polytope(p) || p.lattice_rank() != 3) throw InputError("singular_locus_report: need a Fano 3-polytope");
    const auto verts = p.lattice_vertices();
    const auto& fv = p.facet_vertices();
    const size_t nf = fv.size();
    std::vector<ConeReport> fr;
    for (size_t i = 0; i < nf; ++i) {
        std::vector<IVec> g;
        for (int j : fv[i]) g.push_back(verts[j]);
        fr.push_back(cone_report(Cone::generated_by(g)));
    }
    // singular edges
    FaceLattice fl = face_enumeration(p);
    std::vector<std::pair<int, int>> sing_edges;
    for (const auto& e : fl.faces_by_dim[1]) {
        ConeReport er = cone_report(Cone::generated_by({verts[e[0]], verts[e[1]]}));
        if (!er.smooth) sing_edges.push_back({e[0], e[1]});
    }
    // union-find over facets (0..nf-1) and edges (nf..)
    std::vector<size_t> parent(nf + sing_edges.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<std::vector<size_t>> edge_facets(sing_edges.size());
    for (size_t e = 0; e < sing_edges.size(); ++e)
        for (size_t i = 0; i < nf; ++i) {
            const auto& f = fv[i];
            if (std::binary_search(f.begin(), f.end(), sing_edges[e].first) &&
                std::binary_search(f.begin(), f.end(), sing_edges[e].second)) {
                edge_facets[e].push_back(i);
                parent[find(nf + e)] = find(i);
            }
        }
    std::map<size_t, SingularComponent> comps;
    for (size_t i = 0; i < nf; ++i) {
        bool on_curve = false;
        for (size_t e = 0; e < sing_edges.size(); ++e)
            if (std::count(edge_facets[e].begin(), edge_facets[e].end(), i)) on_curve = true;
        if (fr[i].smooth && !on_curve) continue;
        auto& c = comps[find(i)];
        c.facets.push_back(i);
    }
    for (size_t e = 0; e < sing_edges.size(); ++e) comps[find(nf + e)].edges.push_back(sing_edges[e]);
    SingularLocusReport rep;
    std::vector<SingularComponent> isolated, curves;
    for (auto& [root, c] : comps) {
        if (c.edges.empty()) {
            size_t i = c.facets.at(0);
            const ConeReport& r = fr[i];
            c.polar_vertex = facet_polar_vertex(p, i);
            if (r.q_gorenstein && r.gorenstein_index == 1) {
                c.kind = SingularKind::isolated_gorenstein_cone;
                c.key = gorenstein_cone_key(polygon_normal_form(face_points(p, fv[i])).tag);
            } else if (r.simplicial) {
                c.kind = SingularKind::isolated_quotient;
                c.key = r.quotient_type;
            } else {
                c.kind = SingularKind::isolated_other;
                c.key = "non_gorenstein";
            }
            isolated.push_back(c);
            continue;
        }
        c.curve_count = c.edges.size();
        bool all_a1 = true;
        for (const auto& e : c.edges) {
            ConeReport er = cone_report(Cone::generated_by({verts[e.first], verts[e.second]}));
            if (er.multiplicity != 2) all_a1 = false;
        }
        c.kind = all_a1 ? SingularKind::transverse_A1_curve : SingularKind::curve_other;
        c.key = all_a1 ? "A1_curve" : "curve";
        // a cycle: every facet meets exactly two curves and every curve two facets
        bool cyc = c.edges.size() >= 2 && c.facets.size() == c.edges.size();
        for (size_t fi : c.facets) {
            size_t k = 0;
            for (const auto& e : c.edges) {
                const auto& f = fv[fi];
                if (std::binary_search(f.begin(), f.end(), e.first) && std::binary_search(f.begin(), f.end(), e.second)) ++k;
            }
            if (k != 2) cyc = false;
        }
        c.cycle = cyc;
        curves.push_back(c);
    }
    std::sort(isolated.begin(), isolated.end(), [](const SingularComponent& a, const SingularComponent& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.polar_vertex && b.polar_vertex && *a.polar_vertex != *b.polar_vertex) return *a.polar_vertex > *b.polar_vertex;
        return a.facets < b.facets;
    });
    std::sort(curves.begin(), curves.end(), [](const SingularComponent& a, const SingularComponent& b) { return a.edges < b.edges; });
    rep.components = isolated;
    rep.components.insert(rep.components.end(), curves.begin(), curves.end());
    return rep;
}

}  // namespace kfano

#endif
