#ifndef KFANO_ARITH_HPP
#define KFANO_ARITH_HPP

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace kfano {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Error categories map onto the CLI exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_of(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Int ceil_of(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// Extended gcd: g = a*s + b*t, g >= 0.
inline void xgcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline IVec ivec(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline QVec to_q(const IVec& v) { return QVec(v.begin(), v.end()); }

inline Int content(const IVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

inline IVec primitive(const IVec& v) {
    Int g = content(v);
    if (g == 0) return v;
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

// Smallest integer multiple of a rational vector, made primitive.
inline IVec clear_denominators(const QVec& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i] * l).get_num();
    return primitive(r);
}

inline bool is_integral(const QVec& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

inline IVec to_int(const QVec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw Error("to_int: non-integral coordinate");
        r[i] = v[i].get_num();
    }
    return r;
}

template <class A, class B>
inline Rat dot(const std::vector<A>& a, const std::vector<B>& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * Rat(b[i]);
    return s;
}

inline Int idot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec scale(const IVec& a, const Int& k) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

inline IVec neg(const IVec& a) { return scale(a, -1); }

inline bool is_zero(const IVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline std::string to_string(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

inline std::string to_string(const QVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

inline long env_long(const char* name, long fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || v <= 0) return fallback;
    return v;
}

}  // namespace kfano

#endif
