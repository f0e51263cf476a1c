#ifndef KFANO_SCAFFOLDING_HPP
#define KFANO_SCAFFOLDING_HPP

#include "toric_fano.hpp"

namespace kfano {

struct Strut {
    std::string name;
    IVec divisor;  // coefficient per ray of the shape fan
    IVec chi;      // in N_U
};

// Shape fan rays live in the dual of N-bar; N = N-bar + N_U.
struct Scaffolding {
    std::vector<IVec> shape_rays;
    std::vector<Strut> struts;
    size_t u_rank = 0;

    size_t bar_rank() const { return shape_rays.at(0).size(); }
    size_t n_rank() const { return bar_rank() + u_rank; }
};

inline Fan shape_fan(const Scaffolding& s) {
    Polytope p = hull(s.shape_rays);
    return face_fan(p);
}

inline Polytope divisor_polytope(const std::vector<IVec>& rays, const IVec& coeffs, size_t rank) {
    std::vector<Halfspace> hs;
    for (size_t j = 0; j < rays.size(); ++j) hs.push_back({rays[j], Rat(-coeffs[j])});
    return Polytope::from_inequalities(hs, rank);
}

inline Polytope strut_polytope(const Scaffolding& s, const Strut& st) {
    if (st.divisor.size() != s.shape_rays.size() || st.chi.size() != s.u_rank)
        throw InputError("strut_polytope: strut " + st.name + " has the wrong shape");
    Polytope pd = divisor_polytope(s.shape_rays, st.divisor, s.bar_rank());
    std::vector<QVec> pts;
    for (const auto& v : pd.vertices()) {
        QVec w = v;
        for (const auto& c : st.chi) w.push_back(Rat(c));
        pts.push_back(w);
    }
    return hull(pts);
}

inline bool strut_is_ample(const Scaffolding& s, const Strut& st) { return is_ample(st.divisor, shape_fan(s)); }

inline bool verify_scaffolding(const Scaffolding& s, const Polytope& p) {
    if (s.struts.empty() || p.lattice_rank() != s.n_rank()) return false;
    std::vector<QVec> pts;
    for (const auto& st : s.struts) {
        Polytope q = strut_polytope(s, st);
        for (const auto& v : q.vertices()) pts.push_back(v);
    }
    return hull(pts).vertices() == p.vertices();
}

struct AmbientData {
    std::vector<std::string> names;
    std::vector<Halfspace> inequalities;  // on the dual of N-tilde = Div(Z) + N_U
    std::vector<IVec> rays;
    IntegerMatrix ray_map;                // columns are the rays
    std::vector<IVec> weights;            // rows: a basis of the integer kernel of the ray map
    Fan fan;
    bool smooth = false;
    bool complete = false;
    long picard_rank = 0;
};

// Ray order: one ray -D + chi per strut, then the divisors E_i.
inline AmbientData ambient_from_scaffolding(const Scaffolding& s, const std::vector<std::string>& strut_names = {},
                                            const std::vector<size_t>& pic_basis = {}) {
    const size_t d = s.shape_rays.size();
    const size_t r = d + s.u_rank;
    AmbientData a;
    for (const auto& st : s.struts) {
        IVec v;
        for (const auto& c : st.divisor) v.push_back(-c);
        for (const auto& c : st.chi) v.push_back(c);
        a.rays.push_back(v);
        a.inequalities.push_back({v, Rat(-1)});
    }
    for (size_t i = 0; i < d; ++i) {
        IVec e(r, Int(0));
        e[i] = 1;
        a.rays.push_back(e);
        a.inequalities.push_back({e, Rat(0)});
    }
    a.names = strut_names;
    if (a.names.empty())
        for (const auto& st : s.struts) a.names.push_back(st.name);
    for (size_t i = 0; i < d; ++i)
        if (a.names.size() < a.rays.size()) a.names.push_back("E" + std::to_string(i + 1));
    Polytope q = Polytope::from_inequalities(a.inequalities, r);
    if (!q.full_dimensional()) throw Error("ambient_from_scaffolding: Q_S is not full-dimensional");
    // every inequality must define a facet, so the normal fan has exactly these rays
    auto scaled_rhs = [](const Halfspace& h) -> Rat {
        IVec p = primitive(h.normal);
        size_t k = 0;
        while (p[k] == 0) ++k;
        return h.rhs * Rat(p[k]) / Rat(h.normal[k]);
    };
    for (const auto& h : a.inequalities) {
        bool facet = false;
        for (const auto& f : q.facets())
            if (primitive(f.normal) == primitive(h.normal) && scaled_rhs(f) == scaled_rhs(h)) facet = true;
        if (!facet) throw Error("ambient_from_scaffolding: an inequality of Q_S is redundant");
    }
    a.fan.rank = r;
    a.fan.rays = a.rays;
    for (const auto& v : q.vertices()) {
        std::vector<int> c;
        for (size_t i = 0; i < a.inequalities.size(); ++i)
            if (dot(a.inequalities[i].normal, v) == a.inequalities[i].rhs) c.push_back(static_cast<int>(i));
        a.fan.cones.push_back(c);
    }
    a.ray_map = IntegerMatrix::from_cols(a.rays, r);
    a.smooth = true;
    for (size_t i = 0; i < a.fan.cones.size(); ++i)
        if (!cone_report(a.fan.cone(i)).smooth) a.smooth = false;
    a.complete = is_complete(a.fan);
    a.picard_rank = picard_rank(a.fan);
    a.weights = integer_kernel(a.ray_map);
    if (!pic_basis.empty()) {
        // rebase so that the chosen rays' classes are the standard basis
        if (pic_basis.size() != a.weights.size()) throw InputError("ambient_from_scaffolding: Pic basis has the wrong size");
        QMatrix c(a.weights.size(), QVec(a.weights.size()));
        for (size_t i = 0; i < a.weights.size(); ++i)
            for (size_t j = 0; j < pic_basis.size(); ++j) c[i][j] = a.weights[i][pic_basis[j]];
        auto ci = inverse(c);
        if (!ci) throw Error("ambient_from_scaffolding: chosen rays do not give a basis of Pic");
        std::vector<IVec> w;
        for (size_t i = 0; i < a.weights.size(); ++i) {
            QVec row(a.rays.size(), Rat(0));
            for (size_t k = 0; k < a.weights.size(); ++k)
                for (size_t j = 0; j < a.rays.size(); ++j) row[j] += (*ci)[i][k] * a.weights[k][j];
            if (!is_integral(row)) throw Error("ambient_from_scaffolding: chosen rays do not give a Z-basis of Pic");
            w.push_back(to_int(row));
        }
        a.weights = w;
    }
    return a;
}

// theta = rho* + id : N-bar + N_U -> Div(Z) + N_U
inline IntegerMatrix scaffolding_theta(const Scaffolding& s) {
    const size_t d = s.shape_rays.size(), nb = s.bar_rank(), u = s.u_rank;
    std::vector<IVec> rows;
    for (size_t i = 0; i < d; ++i) {
        IVec row = s.shape_rays[i];
        row.resize(nb + u, Int(0));
        rows.push_back(row);
    }
    for (size_t k = 0; k < u; ++k) {
        IVec row(nb + u, Int(0));
        row[nb + k] = 1;
        rows.push_back(row);
    }
    return IntegerMatrix::from_rows(rows, nb + u);
}

struct EmbeddingEquations {
    IntegerMatrix theta;
    std::vector<IVec> h;  // basis of theta(N)^perp, Hermite-reduced
    std::vector<Polynomial> binomials;
};

inline EmbeddingEquations embedding_equations(const Scaffolding& s, const AmbientData& a) {
    EmbeddingEquations e;
    e.theta = scaffolding_theta(s);
    auto ker = integer_kernel(e.theta.transpose());
    if (!ker.empty()) {
        HermiteResult hr = hermite_normal_form(IntegerMatrix::from_rows(ker, e.theta.rows()));
        for (size_t i = 0; i < hr.H.rows(); ++i)
            if (!is_zero(hr.H.row(i))) e.h.push_back(hr.H.row(i));
    }
    const size_t n = a.rays.size();
    for (const auto& h : e.h) {
        IVec u;
        for (const auto& r : a.rays) u.push_back(idot(h, r));
        e.binomials.push_back(binomial_from_vector(u, n));
    }
    return e;
}

// weights are rows indexed by variable
inline bool homogeneous_for(const Polynomial& f, const std::vector<IVec>& weights) {
    auto deg = [&](const Mono& m) {
        IVec d(weights.size(), Int(0));
        for (size_t i = 0; i < weights.size(); ++i)
            for (size_t j = 0; j < weights[i].size(); ++j) d[i] += weights[i][j] * m.e[j];
        return d;
    };
    if (f.is_zero()) return true;
    IVec d0 = deg(f.terms()[0].m);
    for (const auto& t : f.terms())
        if (deg(t.m) != d0) return false;
    return true;
}

// Each binomial is homogeneous for the weights and vanishes along a Cox lift of the torus of X.
inline bool binomials_vanish_on_torus(const AmbientData& a, const EmbeddingEquations& e) {
    const size_t n = a.rays.size();
    for (const auto& f : e.binomials)
        if (!homogeneous_for(f, a.weights)) return false;
    // a lift S with ray_map * S = theta exists because the ray map is onto
    std::vector<IVec> cols;
    for (size_t j = 0; j < e.theta.cols(); ++j) {
        auto sol = integer_solve(a.ray_map, e.theta.col(j));
        if (!sol) return false;
        cols.push_back(*sol);
    }
    std::vector<IVec> config(n, IVec(cols.size(), Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < cols.size(); ++j) config[i][j] = cols[j][i];
    for (const auto& f : e.binomials)
        if (!vanishes_on_monomial_map(f, config)) return false;
    return true;
}

inline bool theta_maps_into_fan(const Polytope& p, const IntegerMatrix& theta, const Fan& fan) {
    for (const auto& v : p.lattice_vertices()) {
        IVec w = theta.apply(v);
        bool inside = false;
        for (size_t i = 0; i < fan.cones.size() && !inside; ++i) {
            const auto g = fan.cone(i).rays;
            QMatrix m(w.size(), QVec(g.size()));
            for (size_t r = 0; r < w.size(); ++r)
                for (size_t c = 0; c < g.size(); ++c) m[r][c] = g[c][r];
            auto x = solve(m, to_q(w), g.size());
            if (x && std::all_of(x->begin(), x->end(), [](const Rat& t) { return t >= 0; })) inside = true;
        }
        if (!inside) return false;
    }
    return true;
}

// Intersection number D_1 ... D_n of nef divisors via inclusion-exclusion over Minkowski sums.
inline Rat mixed_intersection(const AmbientData& a, const std::vector<IVec>& divisors) {
    const size_t n = a.fan.rank;
    if (divisors.size() != n) throw InputError("mixed_intersection: need one divisor per dimension");
    for (const auto& d : divisors)
        if (!is_nef(d, a.fan)) throw InputError("mixed_intersection: divisor is not nef");
    Rat total = 0;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        IVec sum(a.rays.size(), Int(0));
        int k = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                sum = add(sum, divisors[i]);
                ++k;
            }
        Polytope pd = divisor_polytope(a.rays, sum, n);
        Rat v = pd.full_dimensional() ? normalized_volume(pd) : Rat(0);
        total += ((n - k) % 2 ? -v : v);
    }
    return total / Rat(factorial(static_cast<long>(n)));
}

// Divisor with the given class in the rebased Pic basis, supported on the basis rays.
inline IVec divisor_of_class(const AmbientData& a, const std::vector<size_t>& pic_basis, const IVec& cls) {
    IVec d(a.rays.size(), Int(0));
    for (size_t k = 0; k < pic_basis.size(); ++k) d[pic_basis[k]] = cls[k];
    return d;
}

struct AdjunctionCheck {
    IVec anticanonical_class;  // of the ambient
    IVec fano_class;           // -K_X restricted class
    Rat degree;
};

inline AdjunctionCheck adjunction_degree_check(const AmbientData& a, const std::vector<size_t>& pic_basis,
                                               const std::vector<IVec>& equation_classes) {
    AdjunctionCheck c;
    c.anticanonical_class = IVec(a.weights.size(), Int(0));
    for (size_t j = 0; j < a.rays.size(); ++j)
        for (size_t i = 0; i < a.weights.size(); ++i) c.anticanonical_class[i] += a.weights[i][j];
    c.fano_class = c.anticanonical_class;
    for (const auto& e : equation_classes) c.fano_class = sub(c.fano_class, e);
    const size_t dimx = a.fan.rank - equation_classes.size();
    std::vector<IVec> divs;
    for (size_t i = 0; i < dimx; ++i) divs.push_back(divisor_of_class(a, pic_basis, c.fano_class));
    for (const auto& e : equation_classes) divs.push_back(divisor_of_class(a, pic_basis, e));
    c.degree = mixed_intersection(a, divs);
    return c;
}

}  // namespace kfano

#endif
