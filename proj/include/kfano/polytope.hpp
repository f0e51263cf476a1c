#ifndef KFANO_POLYTOPE_HPP
#define KFANO_POLYTOPE_HPP

#include <functional>
#include <map>
#include <set>

#include "linalg.hpp"

namespace kfano {

// <normal, x> >= rhs
struct Halfspace {
    IVec normal;
    Rat rhs;
    bool operator==(const Halfspace& o) const { return normal == o.normal && rhs == o.rhs; }
    bool operator<(const Halfspace& o) const {
        if (normal != o.normal) return normal < o.normal;
        return rhs < o.rhs;
    }
};

// <normal, x> == rhs
struct Equation {
    IVec normal;
    Rat rhs;
};

namespace detail {

inline std::vector<QVec> dedupe_sorted(std::vector<QVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

inline QVec qsub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline size_t affine_rank(const std::vector<QVec>& pts, const std::vector<int>& idx) {
    if (idx.size() <= 1) return 0;
    QMatrix d;
    for (size_t i = 1; i < idx.size(); ++i) d.push_back(qsub(pts[idx[i]], pts[idx[0]]));
    return rank(d);
}

// Calls f on every k-subset of {0..n-1} (lex order); stops early if f returns false.
inline void for_each_subset(size_t n, size_t k, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> c(k);
    for (size_t i = 0; i < k; ++i) c[i] = static_cast<int>(i);
    if (k > n) return;
    while (true) {
        if (!f(c)) return;
        if (k == 0) return;
        size_t i = k;
        while (i > 0 && c[i - 1] == static_cast<int>(n - k + i - 1)) --i;
        if (i == 0) return;
        ++c[i - 1];
        for (size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

struct FullDimHull {
    std::vector<Halfspace> facets;
    std::vector<std::vector<int>> facet_points;  // indices into the input
    std::vector<int> vertices;                   // indices into the input
};

// Facets of a full-dimensional point set in Q^k by exhaustive k-subsets.
inline FullDimHull full_dim_hull(const std::vector<QVec>& pts, size_t k) {
    FullDimHull h;
    if (k == 0) {
        h.vertices = {0};
        return h;
    }
    std::map<Halfspace, std::vector<int>> found;
    for_each_subset(pts.size(), k, [&](const std::vector<int>& s) {
        QMatrix d;
        for (size_t i = 1; i < s.size(); ++i) d.push_back(qsub(pts[s[i]], pts[s[0]]));
        std::vector<QVec> ns = d.empty() ? std::vector<QVec>{QVec(k, Rat(0))} : nullspace(d, k);
        if (d.empty()) ns[0][0] = 1;
        if (ns.size() != 1) return true;
        IVec a = clear_denominators(ns[0]);
        Rat b = dot(a, pts[s[0]]);
        bool ge = true, le = true;
        for (const auto& p : pts) {
            Rat v = dot(a, p);
            if (v < b) ge = false;
            if (v > b) le = false;
            if (!ge && !le) break;
        }
        if (!ge && !le) return true;
        if (!ge) {
            a = neg(a);
            b = -b;
        }
        Halfspace hs{a, b};
        if (found.count(hs)) return true;
        std::vector<int> on;
        for (size_t i = 0; i < pts.size(); ++i)
            if (dot(a, pts[i]) == b) on.push_back(static_cast<int>(i));
        found[hs] = on;
        return true;
    });
    for (auto& [hs, on] : found) {
        h.facets.push_back(hs);
        h.facet_points.push_back(on);
    }
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<IVec> normals;
        for (size_t f = 0; f < h.facets.size(); ++f)
            if (std::binary_search(h.facet_points[f].begin(), h.facet_points[f].end(), static_cast<int>(i)))
                normals.push_back(h.facets[f].normal);
        if (rank(normals) == k) h.vertices.push_back(static_cast<int>(i));
    }
    return h;
}

}  // namespace detail

// Affine hull data: x = origin + sum y_j basis_j.
struct AffineFrame {
    QVec origin;
    std::vector<QVec> basis;
    std::vector<Equation> equations;

    QVec coords(const QVec& x) const {
        QMatrix bt(origin.size(), QVec(basis.size()));
        for (size_t i = 0; i < origin.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) bt[i][j] = basis[j][i];
        auto y = solve(bt, detail::qsub(x, origin), basis.size());
        if (!y) throw Error("point outside affine frame");
        return *y;
    }
};

inline AffineFrame affine_frame(const std::vector<QVec>& pts) {
    AffineFrame f;
    f.origin = pts.at(0);
    const size_t n = f.origin.size();
    QMatrix d;
    for (size_t i = 1; i < pts.size(); ++i) d.push_back(detail::qsub(pts[i], f.origin));
    QMatrix r = d;
    std::vector<size_t> piv = r.empty() ? std::vector<size_t>{} : rref(r, n);
    for (size_t i = 0; i < piv.size(); ++i) f.basis.push_back(r[i]);
    QMatrix b = f.basis;
    std::vector<QVec> orth = b.empty() ? std::vector<QVec>{} : nullspace(b, n);
    if (b.empty())
        for (size_t i = 0; i < n; ++i) {
            QVec e(n, Rat(0));
            e[i] = 1;
            orth.push_back(e);
        }
    for (const auto& o : orth) {
        IVec a = clear_denominators(o);
        f.equations.push_back({a, dot(a, f.origin)});
    }
    return f;
}

class Polytope {
  public:
    Polytope() = default;

    static Polytope from_points(const std::vector<QVec>& input) {
        if (input.empty()) throw InputError("polytope needs at least one point");
        Polytope p;
        p.rank_ = input[0].size();
        for (const auto& x : input)
            if (x.size() != p.rank_) throw InputError("points of different ranks");
        std::vector<QVec> pts = detail::dedupe_sorted(input);
        AffineFrame fr = affine_frame(pts);
        p.dim_ = fr.basis.size();
        p.equations_ = fr.equations;
        std::vector<QVec> local;
        if (p.dim_ == p.rank_) {
            local = pts;
        } else {
            for (const auto& x : pts) local.push_back(fr.coords(x));
        }
        detail::FullDimHull h = detail::full_dim_hull(local, p.dim_);
        std::vector<int> remap(pts.size(), -1);
        for (int vi : h.vertices) {
            remap[vi] = static_cast<int>(p.vertices_.size());
            p.vertices_.push_back(pts[vi]);
        }
        for (size_t f = 0; f < h.facets.size(); ++f) {
            Halfspace hs = h.facets[f];
            if (p.dim_ != p.rank_) hs = p.lift_halfspace(fr, hs);
            std::vector<int> vs;
            for (int i : h.facet_points[f])
                if (remap[i] >= 0) vs.push_back(remap[i]);
            p.facets_.push_back(hs);
            p.facet_vertices_.push_back(vs);
        }
        p.sort_facets();
        return p;
    }

    static Polytope from_points(const std::vector<IVec>& input) {
        std::vector<QVec> q;
        for (const auto& v : input) q.push_back(to_q(v));
        return from_points(q);
    }

    // Bounded, full-dimensional H-description.
    static Polytope from_inequalities(const std::vector<Halfspace>& ineqs, size_t rank) {
        Polytope p;
        p.rank_ = rank;
        std::vector<QVec> verts;
        detail::for_each_subset(ineqs.size(), rank, [&](const std::vector<int>& s) {
            QMatrix a;
            QVec b;
            for (int i : s) {
                a.push_back(to_q(ineqs[i].normal));
                b.push_back(ineqs[i].rhs);
            }
            if (kfano::rank(a) != rank) return true;
            auto x = solve(a, b, rank);
            for (const auto& h : ineqs)
                if (dot(h.normal, *x) < h.rhs) return true;
            verts.push_back(*x);
            return true;
        });
        verts = detail::dedupe_sorted(verts);
        if (verts.empty()) throw InputError("empty polyhedron");
        AffineFrame fr = affine_frame(verts);
        if (fr.basis.size() != rank) return from_points(verts);
        p.dim_ = rank;
        p.vertices_ = verts;
        std::set<std::vector<int>> seen;
        for (const auto& h : ineqs) {
            std::vector<int> on;
            for (size_t i = 0; i < verts.size(); ++i)
                if (dot(h.normal, verts[i]) == h.rhs) on.push_back(static_cast<int>(i));
            if (detail::affine_rank(verts, on) + 1 != rank || on.size() < rank) continue;
            if (!seen.insert(on).second) continue;
            Int g = content(h.normal);
            p.facets_.push_back({primitive(h.normal), h.rhs / Rat(g)});
            p.facet_vertices_.push_back(on);
        }
        p.sort_facets();
        return p;
    }

    size_t lattice_rank() const { return rank_; }
    size_t dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == rank_; }
    const std::vector<QVec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    const std::vector<std::vector<int>>& facet_vertices() const { return facet_vertices_; }
    const std::vector<Equation>& equations() const { return equations_; }

    bool is_lattice() const {
        for (const auto& v : vertices_)
            if (!is_integral(v)) return false;
        return true;
    }
    std::vector<IVec> lattice_vertices() const {
        std::vector<IVec> out;
        for (const auto& v : vertices_) out.push_back(to_int(v));
        return out;
    }

    bool contains(const QVec& x) const {
        for (const auto& e : equations_)
            if (dot(e.normal, x) != e.rhs) return false;
        for (const auto& h : facets_)
            if (dot(h.normal, x) < h.rhs) return false;
        return true;
    }
    bool contains_in_relative_interior(const QVec& x) const {
        for (const auto& e : equations_)
            if (dot(e.normal, x) != e.rhs) return false;
        for (const auto& h : facets_)
            if (dot(h.normal, x) <= h.rhs) return false;
        return true;
    }
    bool origin_interior() const {
        return full_dimensional() && contains_in_relative_interior(QVec(rank_, Rat(0)));
    }

    bool operator==(const Polytope& o) const { return vertices_ == o.vertices_; }

  private:
    Halfspace lift_halfspace(const AffineFrame& fr, const Halfspace& local) const {
        // find c with <c, basis_j> = a_j; then <c, x> >= b + <c, origin> on the affine hull
        QMatrix bt;
        for (const auto& bj : fr.basis) bt.push_back(bj);
        auto c = solve(bt, to_q(local.normal), rank_);
        IVec ci = clear_denominators(*c);
        Rat s = 0;
        for (size_t i = 0; i < ci.size(); ++i)
            if ((*c)[i] != 0) {
                s = Rat(ci[i]) / (*c)[i];
                break;
            }
        return {ci, local.rhs * s + dot(ci, fr.origin)};
    }

    void sort_facets() {
        std::vector<size_t> ord(facets_.size());
        for (size_t i = 0; i < ord.size(); ++i) ord[i] = i;
        std::sort(ord.begin(), ord.end(), [&](size_t a, size_t b) { return facets_[a] < facets_[b]; });
        std::vector<Halfspace> f;
        std::vector<std::vector<int>> fv;
        for (size_t i : ord) {
            f.push_back(facets_[i]);
            fv.push_back(facet_vertices_[i]);
        }
        facets_ = f;
        facet_vertices_ = fv;
    }

    size_t rank_ = 0, dim_ = 0;
    std::vector<QVec> vertices_;
    std::vector<Halfspace> facets_;
    std::vector<std::vector<int>> facet_vertices_;
    std::vector<Equation> equations_;
};

using LatticePolytope = Polytope;
using RationalPolytope = Polytope;

inline Polytope hull(const std::vector<IVec>& pts) { return Polytope::from_points(pts); }
inline Polytope hull(const std::vector<QVec>& pts) { return Polytope::from_points(pts); }

inline const std::vector<Halfspace>& facets(const Polytope& p) {
    if (!p.full_dimensional()) throw InputError("facets: polytope is not full-dimensional");
    return p.facets();
}

inline Polytope polar(const Polytope& p) {
    if (!p.origin_interior()) throw InputError("polar: origin is not an interior point");
    std::vector<QVec> pv;
    for (const auto& h : p.facets()) {
        QVec v(h.normal.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = Rat(h.normal[i]) / (-h.rhs);
        pv.push_back(v);
    }
    return Polytope::from_points(pv);
}

inline bool is_fano_polytope(const Polytope& p) {
    if (!p.is_lattice() || !p.origin_interior()) return false;
    for (const auto& v : p.lattice_vertices())
        if (content(v) != 1) return false;
    return true;
}

inline bool is_reflexive(const Polytope& p) {
    if (!p.is_lattice() || !p.origin_interior()) return false;
    return polar(p).is_lattice();
}

inline bool is_centrally_symmetric(const Polytope& p) {
    std::vector<QVec> negs;
    for (const auto& v : p.vertices()) {
        QVec n(v.size());
        for (size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
        negs.push_back(n);
    }
    std::sort(negs.begin(), negs.end());
    return negs == p.vertices();
}

inline std::vector<IVec> lattice_points(const Polytope& p) {
    const size_t n = p.lattice_rank();
    IVec lo(n), hi(n);
    for (size_t i = 0; i < n; ++i) {
        Rat mn = p.vertices()[0][i], mx = mn;
        for (const auto& v : p.vertices()) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        lo[i] = ceil_of(mn);
        hi[i] = floor_of(mx);
        if (lo[i] > hi[i]) return {};
    }
    std::vector<IVec> out;
    IVec cur = lo;
    while (true) {
        if (p.contains(to_q(cur))) out.push_back(cur);
        size_t i = n;
        while (i > 0 && cur[i - 1] == hi[i - 1]) {
            cur[i - 1] = lo[i - 1];
            --i;
        }
        if (i == 0) return out;
        ++cur[i - 1];
    }
}

// ---- faces, triangulation, volume ----

using FaceSet = std::vector<int>;

struct FaceLattice {
    std::vector<std::vector<FaceSet>> faces_by_dim;  // index = dimension
    std::vector<size_t> f_vector() const {
        std::vector<size_t> f;
        for (const auto& l : faces_by_dim) f.push_back(l.size());
        return f;
    }
};

inline FaceLattice face_enumeration(const Polytope& p) {
    const size_t d = p.dim();
    FaceLattice fl;
    fl.faces_by_dim.assign(d + 1, {});
    std::set<FaceSet> all;
    std::vector<FaceSet> frontier(p.facet_vertices().begin(), p.facet_vertices().end());
    for (const auto& f : frontier) all.insert(f);
    while (!frontier.empty()) {
        std::vector<FaceSet> next;
        for (const auto& f : frontier)
            for (const auto& g : p.facet_vertices()) {
                FaceSet i;
                std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(i));
                if (i.empty() || i == f) continue;
                if (all.insert(i).second) next.push_back(i);
            }
        frontier = next;
    }
    FaceSet whole(p.vertices().size());
    for (size_t i = 0; i < whole.size(); ++i) whole[i] = static_cast<int>(i);
    all.insert(whole);
    for (const auto& f : all) {
        size_t k = detail::affine_rank(p.vertices(), f);
        fl.faces_by_dim[k].push_back(f);
    }
    return fl;
}

namespace detail {

// Pulling triangulation from the smallest vertex index, recursing through facets.
inline void triangulate_face(const Polytope& p, const FaceSet& face, size_t k,
                             std::vector<FaceSet>& out, FaceSet prefix) {
    if (k == 0) {
        prefix.push_back(face[0]);
        out.push_back(prefix);
        return;
    }
    int v0 = face[0];
    std::set<FaceSet> subfacets;
    for (const auto& g : p.facet_vertices()) {
        FaceSet i;
        std::set_intersection(face.begin(), face.end(), g.begin(), g.end(), std::back_inserter(i));
        if (i.size() < k || i == face) continue;
        if (affine_rank(p.vertices(), i) == k - 1) subfacets.insert(i);
    }
    prefix.push_back(v0);
    for (const auto& s : subfacets) {
        if (std::binary_search(s.begin(), s.end(), v0)) continue;
        triangulate_face(p, s, k - 1, out, prefix);
    }
}

}  // namespace detail

inline std::vector<FaceSet> triangulation(const Polytope& p) {
    FaceSet whole(p.vertices().size());
    for (size_t i = 0; i < whole.size(); ++i) whole[i] = static_cast<int>(i);
    std::vector<FaceSet> out;
    detail::triangulate_face(p, whole, p.dim(), out, {});
    return out;
}

inline Rat simplex_normalized_volume(const std::vector<QVec>& s) {
    const size_t d = s.size() - 1;
    QMatrix m;
    for (size_t i = 1; i <= d; ++i) m.push_back(detail::qsub(s[i], s[0]));
    // rational determinant via elimination
    Rat det = 1;
    for (size_t c = 0; c < d; ++c) {
        size_t p = c;
        while (p < d && m[p][c] == 0) ++p;
        if (p == d) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < d; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (size_t j = c; j < d; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return abs(det);
}

inline Rat normalized_volume(const Polytope& p) {
    if (!p.full_dimensional()) throw InputError("normalized_volume: degenerate polytope");
    Rat v = 0;
    for (const auto& s : triangulation(p)) {
        std::vector<QVec> pts;
        for (int i : s) pts.push_back(p.vertices()[i]);
        v += simplex_normalized_volume(pts);
    }
    return v;
}

inline QVec barycenter(const Polytope& p) {
    if (!p.full_dimensional()) throw InputError("barycenter: degenerate polytope");
    const size_t n = p.lattice_rank();
    QVec acc(n, Rat(0));
    Rat total = 0;
    for (const auto& s : triangulation(p)) {
        std::vector<QVec> pts;
        for (int i : s) pts.push_back(p.vertices()[i]);
        Rat vol = simplex_normalized_volume(pts);
        total += vol;
        for (const auto& x : pts)
            for (size_t j = 0; j < n; ++j) acc[j] += vol * x[j] / Rat(static_cast<long>(pts.size()));
    }
    for (auto& x : acc) x /= total;
    return acc;
}

// ---- lattice coordinates of faces and polygon classes ----

struct LatticeFrame {
    IVec origin;
    std::vector<IVec> basis;
};

// Coordinates of lattice points of a face in the induced affine lattice.
inline std::vector<IVec> lattice_coordinates(const std::vector<IVec>& pts, LatticeFrame* frame_out = nullptr) {
    LatticeFrame fr;
    fr.origin = pts.at(0);
    std::vector<IVec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], fr.origin));
    fr.basis = saturate_lattice(diffs, fr.origin.size());
    std::vector<IVec> out;
    IntegerMatrix bt = IntegerMatrix::from_cols(fr.basis, fr.origin.size());
    for (const auto& x : pts) {
        auto y = integer_solve(bt, sub(x, fr.origin));
        if (!y) throw Error("lattice_coordinates: point outside lattice");
        out.push_back(*y);
    }
    if (frame_out) *frame_out = fr;
    return out;
}

enum class PolygonTag { unimodular_triangle, standard_square, rect_1x2, dP6_hexagon, F1_quadrilateral, other };

inline std::string to_string(PolygonTag t) {
    switch (t) {
        case PolygonTag::unimodular_triangle: return "unimodular_triangle";
        case PolygonTag::standard_square: return "standard_square";
        case PolygonTag::rect_1x2: return "rect_1x2";
        case PolygonTag::dP6_hexagon: return "dP6_hexagon";
        case PolygonTag::F1_quadrilateral: return "F1_quadrilateral";
        default: return "other";
    }
}

struct PolygonClass {
    PolygonTag tag = PolygonTag::other;
    std::vector<IVec> normal_form;
};

// Lex-minimal vertex list over all frames (vertex, adjacent edge, side, shear fixed by the next vertex).
inline std::vector<IVec> polygon_normal_form_vertices(const std::vector<IVec>& pts2d) {
    Polytope poly = hull(pts2d);
    if (poly.dim() != 2 || poly.lattice_rank() != 2) throw InputError("polygon_normal_form: not a polygon in rank 2");
    std::vector<IVec> v = poly.lattice_vertices();
    const size_t n = v.size();
    std::vector<std::vector<int>> nbr(n);
    for (const auto& e : poly.facet_vertices()) {
        nbr[e[0]].push_back(e[1]);
        nbr[e[1]].push_back(e[0]);
    }
    std::vector<IVec> best;
    for (size_t i = 0; i < n; ++i)
        for (int side = 0; side < 2; ++side) {
            const IVec& a = v[nbr[i][side]];
            const IVec& q = v[nbr[i][1 - side]];
            IVec u = primitive(sub(a, v[i]));
            Int g, s, t;
            xgcd(u[0], u[1], g, s, t);
            IVec w = {-t, s};
            auto coords = [&](const IVec& p) {
                IVec d = sub(p, v[i]);
                return IVec{d[0] * w[1] - d[1] * w[0], u[0] * d[1] - u[1] * d[0]};
            };
            std::vector<IVec> img;
            for (const auto& p : v) img.push_back(coords(p));
            IVec cq = coords(q);
            if (cq[1] < 0) {
                for (auto& p : img) p[1] = -p[1];
                cq[1] = -cq[1];
            }
            Int k;
            mpz_cdiv_q(k.get_mpz_t(), Int(-cq[0]).get_mpz_t(), cq[1].get_mpz_t());
            for (auto& p : img) p[0] += k * p[1];
            std::sort(img.begin(), img.end());
            if (best.empty() || img < best) best = img;
        }
    return best;
}

inline const std::vector<std::pair<PolygonTag, std::vector<IVec>>>& polygon_catalog() {
    static const std::vector<std::pair<PolygonTag, std::vector<IVec>>> cat = [] {
        std::vector<std::pair<PolygonTag, std::vector<IVec>>> c;
        auto add = [&](PolygonTag t, std::vector<IVec> pts) { c.push_back({t, polygon_normal_form_vertices(pts)}); };
        add(PolygonTag::unimodular_triangle, {ivec({0, 0}), ivec({1, 0}), ivec({0, 1})});
        add(PolygonTag::standard_square, {ivec({0, 0}), ivec({1, 0}), ivec({0, 1}), ivec({1, 1})});
        add(PolygonTag::rect_1x2, {ivec({0, 0}), ivec({1, 0}), ivec({0, 2}), ivec({1, 2})});
        add(PolygonTag::dP6_hexagon,
            {ivec({1, 0}), ivec({1, 1}), ivec({0, 1}), ivec({-1, 0}), ivec({-1, -1}), ivec({0, -1})});
        add(PolygonTag::F1_quadrilateral, {ivec({1, 0}), ivec({0, 1}), ivec({-1, 1}), ivec({0, -1})});
        return c;
    }();
    return cat;
}

// F is a lattice polygon given by lattice points in any ambient rank.
inline PolygonClass polygon_normal_form(const std::vector<IVec>& face_points) {
    std::vector<IVec> local = lattice_coordinates(face_points);
    if (local[0].size() != 2) throw InputError("polygon_normal_form: face is not 2-dimensional");
    PolygonClass pc;
    pc.normal_form = polygon_normal_form_vertices(local);
    for (const auto& [tag, nf] : polygon_catalog())
        if (nf == pc.normal_form) pc.tag = tag;
    return pc;
}

inline std::vector<IVec> face_points(const Polytope& p, const FaceSet& f) {
    std::vector<IVec> out;
    for (int i : f) out.push_back(to_int(p.vertices()[i]));
    return out;
}

// Normalized lattice volume of a lattice face in its own lattice.
inline Rat face_normalized_volume(const Polytope& p, const FaceSet& f) {
    std::vector<IVec> local = lattice_coordinates(face_points(p, f));
    if (local[0].empty()) return 1;
    return normalized_volume(hull(local));
}

inline std::vector<IVec> face_lattice_points(const Polytope& p, const FaceSet& f) {
    return lattice_points(hull(face_points(p, f)));
}

// Relative-interior lattice points of each facet.
inline std::vector<size_t> facet_interior_lattice_points(const Polytope& p) {
    std::vector<size_t> out;
    for (const auto& fv : p.facet_vertices()) {
        std::vector<QVec> pts;
        for (int i : fv) pts.push_back(p.vertices()[i]);
        Polytope f = hull(pts);
        size_t c = 0;
        for (const auto& x : lattice_points(f))
            if (f.contains_in_relative_interior(to_q(x))) ++c;
        out.push_back(c);
    }
    return out;
}

// ---- lattice automorphisms ----

struct AutomorphismGroup {
    std::vector<IntegerMatrix> generators;
    std::vector<IntegerMatrix> elements;  // sorted
    size_t order() const { return elements.size(); }
    bool contains(const IntegerMatrix& m) const { return std::binary_search(elements.begin(), elements.end(), m); }
};

inline std::vector<IntegerMatrix> group_closure(const std::vector<IntegerMatrix>& gens, size_t n) {
    std::set<IntegerMatrix> seen{IntegerMatrix::identity(n)};
    std::vector<IntegerMatrix> frontier{IntegerMatrix::identity(n)};
    while (!frontier.empty()) {
        std::vector<IntegerMatrix> next;
        for (const auto& a : frontier)
            for (const auto& g : gens) {
                IntegerMatrix b = g * a;
                if (seen.insert(b).second) next.push_back(b);
            }
        frontier = next;
    }
    return std::vector<IntegerMatrix>(seen.begin(), seen.end());
}

inline AutomorphismGroup lattice_automorphisms(const Polytope& p) {
    if (!p.full_dimensional() || !p.is_lattice()) throw InputError("lattice_automorphisms: need a full-dimensional lattice polytope");
    const size_t d = p.lattice_rank();
    std::vector<IVec> verts = p.lattice_vertices();
    std::set<IVec> vset(verts.begin(), verts.end());
    if (!p.origin_interior()) throw InputError("lattice_automorphisms: origin must be interior");
    std::vector<int> basis;
    std::vector<IVec> chosen;
    for (size_t i = 0; i < verts.size() && basis.size() < d; ++i) {
        chosen.push_back(verts[i]);
        if (rank(chosen) == chosen.size()) {
            basis.push_back(static_cast<int>(i));
        } else {
            chosen.pop_back();
        }
    }
    QMatrix bm(d, QVec(d));
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < d; ++i) bm[i][j] = verts[basis[j]][i];
    QMatrix binv = *inverse(bm);
    AutomorphismGroup g;
    std::vector<int> img(d);
    std::vector<bool> used(verts.size(), false);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == d) {
            // A = V' B^{-1}
            IntegerMatrix a(d, d);
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) {
                    Rat s = 0;
                    for (size_t t = 0; t < d; ++t) s += Rat(verts[img[t]][i]) * binv[t][j];
                    if (s.get_den() != 1) return;
                    a(i, j) = s.get_num();
                }
            if (abs(determinant(a)) != 1) return;
            for (const auto& v : verts)
                if (!vset.count(a.apply(v))) return;
            g.elements.push_back(a);
            return;
        }
        for (size_t i = 0; i < verts.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            img[k] = static_cast<int>(i);
            rec(k + 1);
            used[i] = false;
        }
    };
    rec(0);
    std::sort(g.elements.begin(), g.elements.end());
    size_t covered = 1;
    for (const auto& e : g.elements) {
        if (covered == g.elements.size()) break;
        std::vector<IntegerMatrix> cl = group_closure(g.generators, d);
        if (std::binary_search(cl.begin(), cl.end(), e)) continue;
        g.generators.push_back(e);
        covered = group_closure(g.generators, d).size();
    }
    return g;
}

}  // namespace kfano

#endif
