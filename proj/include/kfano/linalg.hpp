#ifndef KFANO_LINALG_HPP
#define KFANO_LINALG_HPP

#include <algorithm>
#include <optional>
#include <utility>

#include "arith.hpp"

namespace kfano {

class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c, Int(0)) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        for (const auto& row : rows) {
            if (row.size() != c_) throw InputError("ragged matrix literal");
            for (long x : row) a_.emplace_back(x);
        }
    }

    static IntegerMatrix from_rows(const std::vector<IVec>& rows, size_t cols) {
        IntegerMatrix m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw InputError("row length mismatch");
            for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static IntegerMatrix from_rows(const std::vector<IVec>& rows) {
        return from_rows(rows, rows.empty() ? 0 : rows[0].size());
    }
    static IntegerMatrix from_cols(const std::vector<IVec>& cols, size_t rows) {
        return from_rows(cols, rows).transpose();
    }
    static IntegerMatrix identity(size_t n) {
        IntegerMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Int& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Int& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    IVec row(size_t i) const { return IVec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    IVec col(size_t j) const {
        IVec v(r_);
        for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<IVec> row_list() const {
        std::vector<IVec> out;
        for (size_t i = 0; i < r_; ++i) out.push_back(row(i));
        return out;
    }

    IntegerMatrix transpose() const {
        IntegerMatrix t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntegerMatrix operator*(const IntegerMatrix& b) const {
        if (c_ != b.r_) throw Error("matrix product dimension mismatch");
        IntegerMatrix p(r_, b.c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t k = 0; k < c_; ++k) {
                if ((*this)(i, k) == 0) continue;
                for (size_t j = 0; j < b.c_; ++j) p(i, j) += (*this)(i, k) * b(k, j);
            }
        return p;
    }

    IVec apply(const IVec& v) const {
        if (v.size() != c_) throw Error("matrix-vector dimension mismatch");
        IVec out(r_, Int(0));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool operator==(const IntegerMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const IntegerMatrix& o) const { return !(*this == o); }
    bool operator<(const IntegerMatrix& o) const {
        if (r_ != o.r_) return r_ < o.r_;
        if (c_ != o.c_) return c_ < o.c_;
        return a_ < o.a_;
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row_i += f * row_j
    void add_row(size_t i, size_t j, const Int& f) {
        if (f == 0) return;
        for (size_t k = 0; k < c_; ++k) (*this)(i, k) += f * (*this)(j, k);
    }
    void add_col(size_t i, size_t j, const Int& f) {
        if (f == 0) return;
        for (size_t k = 0; k < r_; ++k) (*this)(k, i) += f * (*this)(k, j);
    }
    void negate_row(size_t i) {
        for (size_t k = 0; k < c_; ++k) (*this)(i, k) = -(*this)(i, k);
    }
    void negate_col(size_t j) {
        for (size_t k = 0; k < r_; ++k) (*this)(k, j) = -(*this)(k, j);
    }
    // (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j)
    void mix_rows(size_t i, size_t j, const Int& a, const Int& b, const Int& c, const Int& d) {
        for (size_t k = 0; k < c_; ++k) {
            Int x = (*this)(i, k), y = (*this)(j, k);
            (*this)(i, k) = a * x + b * y;
            (*this)(j, k) = c * x + d * y;
        }
    }
    void mix_cols(size_t i, size_t j, const Int& a, const Int& b, const Int& c, const Int& d) {
        for (size_t k = 0; k < r_; ++k) {
            Int x = (*this)(k, i), y = (*this)(k, j);
            (*this)(k, i) = a * x + b * y;
            (*this)(k, j) = c * x + d * y;
        }
    }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < r_; ++i) {
            if (i) s += ",";
            s += "[";
            for (size_t j = 0; j < c_; ++j) {
                if (j) s += ",";
                s += (*this)(i, j).get_str();
            }
            s += "]";
        }
        return s + "]";
    }

  private:
    size_t r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

using RationalVector = QVec;

// Bareiss fraction-free elimination.
inline Int determinant(IntegerMatrix a) {
    const size_t n = a.rows();
    if (n != a.cols()) throw Error("determinant of non-square matrix");
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

struct HermiteResult {
    IntegerMatrix H, U;
    size_t rank = 0;
};

// Row-style HNF: U*A = H, pivots positive, entries above a pivot in [0, pivot).
inline HermiteResult hermite_normal_form(const IntegerMatrix& A) {
    HermiteResult res{A, IntegerMatrix::identity(A.rows()), 0};
    IntegerMatrix& H = res.H;
    IntegerMatrix& U = res.U;
    const size_t m = H.rows(), n = H.cols();
    size_t r = 0;
    for (size_t j = 0; j < n && r < m; ++j) {
        size_t p = r;
        while (p < m && H(p, j) == 0) ++p;
        if (p == m) continue;
        H.swap_rows(r, p);
        U.swap_rows(r, p);
        for (size_t i = r + 1; i < m; ++i) {
            if (H(i, j) == 0) continue;
            Int g, s, t;
            xgcd(H(r, j), H(i, j), g, s, t);
            Int a = H(r, j) / g, b = H(i, j) / g;
            H.mix_rows(r, i, s, t, -b, a);
            U.mix_rows(r, i, s, t, -b, a);
        }
        if (H(r, j) < 0) {
            H.negate_row(r);
            U.negate_row(r);
        }
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(H(i, j), H(r, j));
            H.add_row(i, r, -q);
            U.add_row(i, r, -q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

struct SmithResult {
    IntegerMatrix S, U, V;
    std::vector<Int> divisors;  // nonzero diagonal entries
};

inline SmithResult smith_normal_form(const IntegerMatrix& A) {
    const size_t m = A.rows(), n = A.cols();
    SmithResult res{A, IntegerMatrix::identity(m), IntegerMatrix::identity(n), {}};
    IntegerMatrix& S = res.S;
    size_t t = 0;
    while (t < m && t < n) {
        // smallest nonzero entry of the trailing block becomes the pivot
        bool found = false;
        size_t pi = 0, pj = 0;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (S(i, j) != 0 && (!found || abs(S(i, j)) < abs(S(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        S.swap_rows(t, pi);
        res.U.swap_rows(t, pi);
        S.swap_cols(t, pj);
        res.V.swap_cols(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                if (S(i, t) % S(t, t) == 0) {
                    Int q = S(i, t) / S(t, t);
                    S.add_row(i, t, -q);
                    res.U.add_row(i, t, -q);
                    continue;
                }
                Int g, s, u;
                xgcd(S(t, t), S(i, t), g, s, u);
                Int a = S(t, t) / g, b = S(i, t) / g;
                S.mix_rows(t, i, s, u, -b, a);
                res.U.mix_rows(t, i, s, u, -b, a);
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                if (S(t, j) % S(t, t) == 0) {
                    Int q = S(t, j) / S(t, t);
                    S.add_col(j, t, -q);
                    res.V.add_col(j, t, -q);
                    continue;
                }
                Int g, s, u;
                xgcd(S(t, t), S(t, j), g, s, u);
                Int a = S(t, t) / g, b = S(t, j) / g;
                S.mix_cols(t, j, s, u, -b, a);
                res.V.mix_cols(t, j, s, u, -b, a);
                clean = false;
            }
            if (!clean) continue;
            for (size_t i = t + 1; i < m && clean; ++i)
                if (S(i, t) != 0) clean = false;
            if (!clean) continue;
            // divisibility: fold an offending row into the pivot row
            for (size_t i = t + 1; i < m && clean; ++i)
                for (size_t j = t + 1; j < n; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        S.add_row(t, i, 1);
                        res.U.add_row(t, i, 1);
                        clean = false;
                        break;
                    }
        }
        if (S(t, t) < 0) {
            S.negate_row(t);
            res.U.negate_row(t);
        }
        res.divisors.push_back(S(t, t));
        ++t;
    }
    return res;
}

// Z-basis of {v : A v = 0}, returned in Hermite normal form for determinism.
inline std::vector<IVec> integer_kernel(const IntegerMatrix& A) {
    const size_t n = A.cols();
    if (A.rows() == 0) {
        std::vector<IVec> basis;
        for (size_t i = 0; i < n; ++i) basis.push_back(IntegerMatrix::identity(n).row(i));
        return basis;
    }
    HermiteResult h = hermite_normal_form(A.transpose());
    std::vector<IVec> ker;
    for (size_t i = h.rank; i < n; ++i) ker.push_back(h.U.row(i));
    if (ker.empty()) return ker;
    HermiteResult hk = hermite_normal_form(IntegerMatrix::from_rows(ker, n));
    std::vector<IVec> out;
    for (size_t i = 0; i < hk.rank; ++i) out.push_back(hk.H.row(i));
    return out;
}

// Canonical basis of the row lattice.
inline std::vector<IVec> row_lattice_basis(const std::vector<IVec>& rows, size_t cols) {
    if (rows.empty()) return {};
    HermiteResult h = hermite_normal_form(IntegerMatrix::from_rows(rows, cols));
    std::vector<IVec> out;
    for (size_t i = 0; i < h.rank; ++i) out.push_back(h.H.row(i));
    return out;
}

// Saturation of the lattice spanned by the given vectors: span_Q(rows) ∩ Z^n.
inline std::vector<IVec> saturate_lattice(const std::vector<IVec>& rows, size_t n) {
    if (rows.empty()) return {};
    std::vector<IVec> orth = integer_kernel(IntegerMatrix::from_rows(rows, n));
    if (orth.empty()) {
        std::vector<IVec> basis;
        for (size_t i = 0; i < n; ++i) basis.push_back(IntegerMatrix::identity(n).row(i));
        return basis;
    }
    return integer_kernel(IntegerMatrix::from_rows(orth, n));
}

// Integer solution of A x = b, if one exists.
inline std::optional<IVec> integer_solve(const IntegerMatrix& A, const IVec& b) {
    SmithResult s = smith_normal_form(A);
    IVec ub = s.U.apply(b);
    const size_t r = s.divisors.size();
    IVec y(A.cols(), Int(0));
    for (size_t i = 0; i < ub.size(); ++i) {
        if (i < r) {
            if (ub[i] % s.divisors[i] != 0) return std::nullopt;
            y[i] = ub[i] / s.divisors[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V.apply(y);
}

// ---- rational linear algebra ----

using QMatrix = std::vector<QVec>;

inline QMatrix to_qmatrix(const IntegerMatrix& A) {
    QMatrix q(A.rows(), QVec(A.cols()));
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) q[i][j] = A(i, j);
    return q;
}

inline QMatrix to_qmatrix(const std::vector<IVec>& rows) {
    QMatrix q;
    for (const auto& r : rows) q.push_back(to_q(r));
    return q;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<size_t> rref(QMatrix& a, size_t ncols) {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t j = 0; j < ncols && r < a.size(); ++j) {
        size_t p = r;
        while (p < a.size() && a[p][j] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        Rat inv = 1 / a[r][j];
        for (size_t k = j; k < a[r].size(); ++k) a[r][k] *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][j] == 0) continue;
            Rat f = a[i][j];
            for (size_t k = j; k < a[i].size(); ++k) a[i][k] -= f * a[r][k];
        }
        piv.push_back(j);
        ++r;
    }
    return piv;
}

inline size_t rank(QMatrix a) {
    if (a.empty()) return 0;
    return rref(a, a[0].size()).size();
}

inline size_t rank(const std::vector<IVec>& rows) { return rank(to_qmatrix(rows)); }
inline size_t rank(const IntegerMatrix& A) { return rank(to_qmatrix(A)); }

inline std::vector<QVec> nullspace(QMatrix a, size_t ncols) {
    std::vector<size_t> piv = rref(a, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (size_t p : piv) is_piv[p] = true;
    std::vector<QVec> basis;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        QVec v(ncols, Rat(0));
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
        basis.push_back(v);
    }
    return basis;
}

// One rational solution of A x = b.
inline std::optional<QVec> solve(const QMatrix& A, const QVec& b, size_t ncols) {
    QMatrix aug;
    for (size_t i = 0; i < A.size(); ++i) {
        QVec row = A[i];
        row.push_back(b[i]);
        aug.push_back(row);
    }
    std::vector<size_t> piv = rref(aug, ncols + 1);
    if (!piv.empty() && piv.back() == ncols) return std::nullopt;
    QVec x(ncols, Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][ncols];
    return x;
}

inline std::optional<QVec> solve(const IntegerMatrix& A, const IVec& b) {
    return solve(to_qmatrix(A), to_q(b), A.cols());
}

inline std::optional<QMatrix> inverse(const QMatrix& A) {
    const size_t n = A.size();
    QMatrix aug(n, QVec(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<size_t> piv = rref(aug, n);
    if (piv.size() != n) return std::nullopt;
    QMatrix inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

inline bool is_unimodular(const IntegerMatrix& U) {
    return U.rows() == U.cols() && abs(determinant(U)) == 1;
}

}  // namespace kfano

#endif
