#ifndef KFANO_GROBNER_HPP
#define KFANO_GROBNER_HPP

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "linalg.hpp"

namespace kfano {

constexpr size_t kMaxVars = 48;

struct Mono {
    std::array<uint16_t, kMaxVars> e{};
    uint32_t deg = 0;

    static Mono var(size_t i, unsigned k = 1) {
        Mono m;
        m.e[i] = static_cast<uint16_t>(k);
        m.deg = k;
        return m;
    }
    static Mono from_exponents(const std::vector<long>& xs) {
        if (xs.size() > kMaxVars) throw InputError("too many variables");
        Mono m;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] < 0 || xs[i] > 60000) throw InputError("exponent out of range");
            m.e[i] = static_cast<uint16_t>(xs[i]);
            m.deg += static_cast<uint32_t>(xs[i]);
        }
        return m;
    }
    bool divides(const Mono& o) const {
        if (deg > o.deg) return false;
        for (size_t i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Mono operator*(const Mono& o) const {
        Mono r;
        for (size_t i = 0; i < kMaxVars; ++i) {
            unsigned s = e[i] + o.e[i];
            if (s > 60000) throw BudgetExceeded("exponent overflow");
            r.e[i] = static_cast<uint16_t>(s);
        }
        r.deg = deg + o.deg;
        return r;
    }
    Mono operator/(const Mono& o) const {
        Mono r;
        for (size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
        r.deg = deg - o.deg;
        return r;
    }
    Mono lcm(const Mono& o) const {
        Mono r;
        for (size_t i = 0; i < kMaxVars; ++i) {
            r.e[i] = std::max(e[i], o.e[i]);
            r.deg += r.e[i];
        }
        return r;
    }
    bool coprime(const Mono& o) const {
        for (size_t i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
    bool operator!=(const Mono& o) const { return e != o.e; }
    bool operator<(const Mono& o) const { return e < o.e; }
};

enum class OrderKind { lex, degrevlex, block };

// block(k): the first k variables are eliminated (degrevlex inside each block).
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;
    size_t block = 0;
    size_t nvars = 0;

    static MonomialOrder lex(size_t n) { return {OrderKind::lex, 0, n}; }
    static MonomialOrder degrevlex(size_t n) { return {OrderKind::degrevlex, 0, n}; }
    static MonomialOrder elimination(size_t k, size_t n) { return {OrderKind::block, k, n}; }

    static int drl(const Mono& a, const Mono& b, size_t lo, size_t hi) {
        unsigned da = 0, db = 0;
        for (size_t i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (size_t i = hi; i-- > lo;)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }

    int cmp(const Mono& a, const Mono& b) const {
        switch (kind) {
            case OrderKind::lex:
                for (size_t i = 0; i < nvars; ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
                return 0;
            case OrderKind::degrevlex:
                return drl(a, b, 0, nvars);
            case OrderKind::block: {
                int c = drl(a, b, 0, block);
                if (c) return c;
                return drl(a, b, block, nvars);
            }
        }
        return 0;
    }
    bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }
};

struct Term {
    Mono m;
    Rat c;
};

// Terms are kept sorted descending in degrevlex; GB routines re-sort internally.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(size_t n) : n_(n) {
        if (n > kMaxVars) throw InputError("too many variables");
    }
    static Polynomial constant(size_t n, const Rat& c) {
        Polynomial p(n);
        if (c != 0) p.t_.push_back({Mono{}, c});
        return p;
    }
    static Polynomial variable(size_t n, size_t i) {
        Polynomial p(n);
        p.t_.push_back({Mono::var(i), Rat(1)});
        return p;
    }
    static Polynomial monomial(size_t n, const Mono& m, const Rat& c = 1) {
        Polynomial p(n);
        if (c != 0) p.t_.push_back({m, c});
        return p;
    }
    static Polynomial from_terms(size_t n, std::vector<Term> terms) {
        Polynomial p(n);
        p.t_ = std::move(terms);
        p.normalize();
        return p;
    }

    size_t nvars() const { return n_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }
    bool operator==(const Polynomial& o) const {
        if (n_ != o.n_ || t_.size() != o.t_.size()) return false;
        for (size_t i = 0; i < t_.size(); ++i)
            if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const { return text_key() < o.text_key(); }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r(n_);
        r.t_ = t_;
        r.t_.insert(r.t_.end(), o.t_.begin(), o.t_.end());
        r.normalize();
        return r;
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.t_) x.c = -x.c;
        return r;
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator*(const Rat& c) const {
        if (c == 0) return Polynomial(n_);
        Polynomial r = *this;
        for (auto& x : r.t_) x.c *= c;
        return r;
    }
    Polynomial operator*(const Polynomial& o) const {
        Polynomial r(std::max(n_, o.n_));
        for (const auto& a : t_)
            for (const auto& b : o.t_) r.t_.push_back({a.m * b.m, a.c * b.c});
        r.normalize();
        return r;
    }
    Polynomial pow(unsigned k) const {
        Polynomial r = constant(n_, 1);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    long total_degree() const {
        long d = -1;
        for (const auto& x : t_) d = std::max<long>(d, x.m.deg);
        return d;
    }
    bool uses_var(size_t i) const {
        for (const auto& x : t_)
            if (x.m.e[i]) return true;
        return false;
    }

    // Ring map x_i -> images[i].
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        size_t m = images.empty() ? 0 : images[0].nvars();
        Polynomial r(m);
        for (const auto& x : t_) {
            Polynomial term = constant(m, x.c);
            for (size_t i = 0; i < n_; ++i)
                if (x.m.e[i]) term = term * images.at(i).pow(x.m.e[i]);
            r = r + term;
        }
        return r;
    }

    // Variable i goes to position map[i] in a ring of size new_n.
    Polynomial remap(const std::vector<size_t>& map, size_t new_n) const {
        Polynomial r(new_n);
        for (const auto& x : t_) {
            Mono m;
            for (size_t i = 0; i < n_; ++i)
                if (x.m.e[i]) {
                    if (map[i] >= new_n) throw Error("remap drops a used variable");
                    m.e[map[i]] = x.m.e[i];
                }
            m.deg = x.m.deg;
            r.t_.push_back({m, x.c});
        }
        r.normalize();
        return r;
    }

    Polynomial monic() const {
        if (t_.empty()) return *this;
        return *this * (1 / t_[0].c);
    }

    std::string text_key() const {
        std::string s;
        for (const auto& x : t_) {
            for (size_t i = 0; i < n_; ++i) s += std::to_string(x.m.e[i]) + ",";
            s += x.c.get_str() + ";";
        }
        return s;
    }

  private:
    void normalize() {
        MonomialOrder o = MonomialOrder::degrevlex(n_);
        std::sort(t_.begin(), t_.end(), [&](const Term& a, const Term& b) { return o.greater(a.m, b.m); });
        std::vector<Term> out;
        for (auto& x : t_) {
            if (!out.empty() && out.back().m == x.m) {
                out.back().c += x.c;
            } else {
                out.push_back(x);
            }
            if (out.back().c == 0) out.pop_back();
        }
        t_ = std::move(out);
    }

    size_t n_ = 0;
    std::vector<Term> t_;
};

// ---- text syntax ----

inline std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (size_t i = 0; i < p.nvars(); ++i) {
            if (!t.m.e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
        }
        if (mono.empty()) {
            s += c.get_str();
        } else if (c == 1) {
            s += mono;
        } else {
            s += c.get_str() + "*" + mono;
        }
    }
    return s;
}

// Grammar: poly := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*; factor := number | name ['^' int].
inline Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
    const size_t n = names.size();
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) {
        throw InputError("polynomial parse error at " + std::to_string(pos) + ": " + why + " in '" + text + "'");
    };
    auto parse_factor = [&](Polynomial& acc) {
        skip();
        if (pos >= text.size()) fail("unexpected end");
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            size_t st = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
            Rat c(text.substr(st, pos - st));
            c.canonicalize();
            acc = acc * c;
            return;
        }
        size_t st = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        std::string name = text.substr(st, pos - st);
        if (name.empty()) fail("expected variable or number");
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) fail("unknown variable " + name);
        unsigned k = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip();
            size_t s2 = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (s2 == pos) fail("expected exponent");
            k = static_cast<unsigned>(std::stoul(text.substr(s2, pos - s2)));
        }
        acc = acc * Polynomial::variable(n, static_cast<size_t>(it - names.begin())).pow(k);
    };
    Polynomial result(n);
    skip();
    int sign = 1;
    if (pos < text.size() && text[pos] == '-') {
        sign = -1;
        ++pos;
    } else if (pos < text.size() && text[pos] == '+') {
        ++pos;
    }
    while (true) {
        Polynomial term = Polynomial::constant(n, sign);
        parse_factor(term);
        skip();
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            parse_factor(term);
            skip();
        }
        result = result + term;
        skip();
        if (pos >= text.size()) break;
        if (text[pos] == '+') {
            sign = 1;
        } else if (text[pos] == '-') {
            sign = -1;
        } else {
            fail("unexpected character");
        }
        ++pos;
    }
    return result;
}

inline std::vector<Polynomial> parse_polynomials(const std::vector<std::string>& texts, const std::vector<std::string>& names) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, names));
    return out;
}

inline std::vector<std::string> indexed_names(const std::string& stem, size_t count, size_t first = 1) {
    std::vector<std::string> out;
    for (size_t i = 0; i < count; ++i) out.push_back(stem + std::to_string(first + i));
    return out;
}

// ---- Buchberger ----

namespace gb {

using Poly = std::vector<Term>;  // sorted descending by the active order

struct Budget {
    long limit;
    long used = 0;
    explicit Budget(long l) : limit(l) {}
    void tick(long k = 1) {
        used += k;
        if (used > limit)
            throw BudgetExceeded("Groebner step budget exhausted (" + std::to_string(limit) +
                                 " reduction steps; raise KFANO_BUDGET)");
    }
};

inline long default_budget() { return env_long("KFANO_BUDGET", 20000000L); }

inline Poly to_poly(const Polynomial& f, const MonomialOrder& o) {
    Poly p = f.terms();
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return o.greater(a.m, b.m); });
    return p;
}

// p[from..] - c * shift * g[1..]
inline Poly sub_mul(const Poly& p, size_t from, const Rat& c, const Mono& shift, const Poly& g, const MonomialOrder& o) {
    Poly out;
    out.reserve(p.size() - from + g.size());
    size_t i = from, j = 1;
    while (i < p.size() || j < g.size()) {
        if (j >= g.size()) {
            out.push_back(p[i++]);
            continue;
        }
        Mono gm = g[j].m * shift;
        if (i >= p.size()) {
            out.push_back({gm, -c * g[j].c});
            ++j;
            continue;
        }
        int k = o.cmp(p[i].m, gm);
        if (k > 0) {
            out.push_back(p[i++]);
        } else if (k < 0) {
            out.push_back({gm, -c * g[j].c});
            ++j;
        } else {
            Rat v = p[i].c - c * g[j].c;
            if (v != 0) out.push_back({p[i].m, v});
            ++i;
            ++j;
        }
    }
    return out;
}

inline Poly make_monic(Poly p) {
    if (p.empty()) return p;
    Rat inv = 1 / p[0].c;
    for (auto& t : p) t.c *= inv;
    return p;
}

// Full reduction of f by the list G (which need not be a Groebner basis).
inline Poly reduce(Poly f, const std::vector<Poly>& G, const MonomialOrder& o, Budget& budget) {
    Poly rem;
    while (!f.empty()) {
        const Term& lt = f[0];
        const Poly* div = nullptr;
        for (const auto& g : G)
            if (!g.empty() && g[0].m.divides(lt.m)) {
                div = &g;
                break;
            }
        if (div) {
            budget.tick();
            Rat c = lt.c / (*div)[0].c;
            f = sub_mul(f, 1, c, lt.m / (*div)[0].m, *div, o);
        } else {
            rem.push_back(lt);
            f.erase(f.begin());
        }
    }
    return rem;
}

inline Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& o) {
    Mono l = f[0].m.lcm(g[0].m);
    Poly a;
    Mono sf = l / f[0].m;
    for (const auto& t : f) a.push_back({t.m * sf, t.c / f[0].c});
    return sub_mul(a, 1, 1 / g[0].c, l / g[0].m, g, o);
}

inline std::vector<Poly> groebner(std::vector<Poly> input, const MonomialOrder& o, Budget& budget) {
    std::vector<Poly> G;
    for (auto& f : input)
        if (!f.empty()) G.push_back(make_monic(f));
    // inter-reduce the input once so that trivially redundant generators drop out
    struct Pair {
        size_t i, j;
        Mono lcm;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
        int c = o.cmp(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::vector<Pair> pairs;
    std::set<std::pair<size_t, size_t>> pending;
    auto add_pairs = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            if (G[i].empty()) continue;
            pairs.push_back({i, k, G[i][0].m.lcm(G[k][0].m)});
            pending.insert({i, k});
        }
    };
    for (size_t k = 0; k < G.size(); ++k) add_pairs(k);
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair p = *it;
        pairs.erase(it);
        pending.erase({p.i, p.j});
        const Poly& f = G[p.i];
        const Poly& g = G[p.j];
        if (f.empty() || g.empty()) continue;
        if (f[0].m.coprime(g[0].m)) continue;  // criterion 1
        bool chain = false;                      // criterion 2
        for (size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == p.i || k == p.j || G[k].empty()) continue;
            if (!G[k][0].m.divides(p.lcm)) continue;
            auto key = [](size_t a, size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
            if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
        }
        if (chain) continue;
        budget.tick();
        Poly h = reduce(spoly(f, g, o), G, o, budget);
        if (h.empty()) continue;
        G.push_back(make_monic(h));
        add_pairs(G.size() - 1);
    }
    // minimal basis
    std::vector<Poly> M;
    for (size_t i = 0; i < G.size(); ++i) {
        if (G[i].empty()) continue;
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j || G[j].empty()) continue;
            if (G[j][0].m.divides(G[i][0].m) && (G[j][0].m != G[i][0].m || j < i)) redundant = true;
        }
        if (!redundant) M.push_back(G[i]);
    }
    // reduced basis
    std::vector<Poly> R;
    for (size_t i = 0; i < M.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(M[j]);
        Poly tail(M[i].begin() + 1, M[i].end());
        Poly r{M[i][0]};
        Poly red = reduce(tail, others, o, budget);
        r.insert(r.end(), red.begin(), red.end());
        R.push_back(make_monic(r));
    }
    std::sort(R.begin(), R.end(), [&](const Poly& a, const Poly& b) { return o.greater(a[0].m, b[0].m); });
    return R;
}

}  // namespace gb

struct ReducedGB {
    MonomialOrder order;
    size_t nvars = 0;
    std::vector<Polynomial> gens;
    std::vector<gb::Poly> sorted;  // same generators in the order's term ordering

    std::vector<Mono> leading_monomials() const {
        std::vector<Mono> out;
        for (const auto& g : sorted) out.push_back(g[0].m);
        return out;
    }
    bool is_unit_ideal() const { return sorted.size() == 1 && sorted[0][0].m.deg == 0; }
};

inline ReducedGB buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order, long budget = 0) {
    gb::Budget b(budget > 0 ? budget : gb::default_budget());
    ReducedGB r;
    r.order = order;
    r.nvars = order.nvars;
    std::vector<gb::Poly> in;
    for (const auto& f : gens) in.push_back(gb::to_poly(f, order));
    r.sorted = gb::groebner(in, order, b);
    for (const auto& p : r.sorted) r.gens.push_back(Polynomial::from_terms(order.nvars, p));
    return r;
}

inline ReducedGB buchberger(const std::vector<Polynomial>& gens, size_t n) {
    return buchberger(gens, MonomialOrder::degrevlex(n));
}

inline Polynomial normal_form(const Polynomial& f, const ReducedGB& G) {
    gb::Budget b(gb::default_budget());
    gb::Poly r = gb::reduce(gb::to_poly(f, G.order), G.sorted, G.order, b);
    return Polynomial::from_terms(f.nvars(), r);
}

inline bool ideal_membership(const Polynomial& f, const ReducedGB& G) { return normal_form(f, G).is_zero(); }

inline bool ideal_membership(const Polynomial& f, const std::vector<Polynomial>& I, size_t n) {
    return ideal_membership(f, buchberger(I, n));
}

inline bool ideal_equality(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J, size_t n) {
    ReducedGB a = buchberger(I, n), b = buchberger(J, n);
    return a.gens == b.gens;
}

// Minimal generating set of a homogeneous ideal: scan by degree and keep what the earlier ones miss.
inline std::vector<Polynomial> minimal_generators(std::vector<Polynomial> gens, size_t n) {
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.total_degree() < b.total_degree();
    });
    std::vector<Polynomial> kept;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!kept.empty() && ideal_membership(g, kept, n)) continue;
        kept.push_back(g);
    }
    return kept;
}

// Generators of I ∩ k[remaining vars], expressed in the remaining variables (original relative order).
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& I, size_t n, const std::vector<size_t>& drop) {
    std::vector<bool> is_drop(n, false);
    for (size_t d : drop) is_drop.at(d) = true;
    std::vector<size_t> to_new(n), keep;
    size_t k = 0;
    for (size_t i = 0; i < n; ++i)
        if (is_drop[i]) to_new[i] = k++;
    for (size_t i = 0; i < n; ++i)
        if (!is_drop[i]) {
            to_new[i] = k++;
            keep.push_back(i);
        }
    std::vector<Polynomial> moved;
    for (const auto& f : I) moved.push_back(f.remap(to_new, n));
    ReducedGB G = buchberger(moved, MonomialOrder::elimination(drop.size(), n));
    std::vector<size_t> back(n, kMaxVars);
    for (size_t j = 0; j < keep.size(); ++j) back[drop.size() + j] = j;
    std::vector<Polynomial> out;
    for (const auto& g : G.gens) {
        bool free = true;
        for (size_t i = 0; i < drop.size(); ++i)
            if (g.uses_var(i)) free = false;
        if (free) out.push_back(g.remap(back, keep.size()));
    }
    return out;
}

// Kernel of k[y_1..y_s] -> k[t_1..t_n]/Q, y_j -> targets[j].
inline std::vector<Polynomial> ring_map_kernel(const std::vector<Polynomial>& targets,
                                               const std::vector<Polynomial>& quotient, size_t n) {
    const size_t s = targets.size();
    const size_t total = n + s;
    if (total > kMaxVars) throw InputError("ring_map_kernel: too many variables");
    std::vector<size_t> lift(n);
    for (size_t i = 0; i < n; ++i) lift[i] = i;
    std::vector<Polynomial> graph;
    for (size_t j = 0; j < s; ++j)
        graph.push_back(Polynomial::variable(total, n + j) - targets[j].remap(lift, total));
    for (const auto& q : quotient) graph.push_back(q.remap(lift, total));
    std::vector<size_t> drop(n);
    for (size_t i = 0; i < n; ++i) drop[i] = i;
    std::vector<Polynomial> ker = eliminate(graph, total, drop);
    return buchberger(ker, s).gens;
}

inline std::vector<Polynomial> ideal_intersection(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J, size_t n) {
    const size_t total = n + 1;
    std::vector<size_t> shift(n);
    for (size_t i = 0; i < n; ++i) shift[i] = i + 1;
    Polynomial t = Polynomial::variable(total, 0);
    Polynomial one_minus_t = Polynomial::constant(total, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I) gens.push_back(t * f.remap(shift, total));
    for (const auto& g : J) gens.push_back(one_minus_t * g.remap(shift, total));
    std::vector<Polynomial> out = eliminate(gens, total, {0});
    return buchberger(out, n).gens;
}

inline std::vector<Polynomial> ideal_intersection(const std::vector<std::vector<Polynomial>>& ideals, size_t n) {
    std::vector<Polynomial> acc = ideals.at(0);
    for (size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersection(acc, ideals[i], n);
    return buchberger(acc, n).gens;
}

// I : x_v^infinity via elimination of t from I + (t x_v - 1).
inline std::vector<Polynomial> saturate_by_variable(const std::vector<Polynomial>& I, size_t n, size_t v) {
    const size_t total = n + 1;
    std::vector<size_t> shift(n);
    for (size_t i = 0; i < n; ++i) shift[i] = i + 1;
    std::vector<Polynomial> gens;
    for (const auto& f : I) gens.push_back(f.remap(shift, total));
    gens.push_back(Polynomial::variable(total, 0) * Polynomial::variable(total, v + 1) - Polynomial::constant(total, 1));
    return buchberger(eliminate(gens, total, {0}), n).gens;
}

inline void for_each_monomial_of_degree(size_t n, unsigned d, const std::function<void(const Mono&)>& f) {
    Mono m;
    std::function<void(size_t, unsigned)> rec = [&](size_t i, unsigned left) {
        if (i + 1 == n || n == 0) {
            if (n == 0) {
                if (left == 0) f(m);
                return;
            }
            m.e[i] = static_cast<uint16_t>(left);
            m.deg = d;
            f(m);
            m.e[i] = 0;
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            m.e[i] = static_cast<uint16_t>(k);
            rec(i + 1, left - k);
        }
        m.e[i] = 0;
    };
    rec(0, d);
}

inline std::vector<size_t> hilbert_function_truncated(const std::vector<Polynomial>& I, size_t n, unsigned dmax) {
    ReducedGB G = buchberger(I, n);
    std::vector<Mono> lms = G.leading_monomials();
    std::vector<size_t> out;
    for (unsigned d = 0; d <= dmax; ++d) {
        size_t c = 0;
        for_each_monomial_of_degree(n, d, [&](const Mono& m) {
            for (const auto& l : lms)
                if (l.divides(m)) return;
            ++c;
        });
        out.push_back(c);
    }
    return out;
}

// Largest set of variables containing no leading monomial's support; -1 for the unit ideal.
inline long krull_dimension(const std::vector<Polynomial>& I, size_t n) {
    ReducedGB G = buchberger(I, n);
    if (G.is_unit_ideal()) return -1;
    std::vector<uint64_t> supports;
    for (const auto& l : G.leading_monomials()) {
        uint64_t s = 0;
        for (size_t i = 0; i < n; ++i)
            if (l.e[i]) s |= (uint64_t(1) << i);
        supports.push_back(s);
    }
    long best = 0;
    std::function<void(size_t, uint64_t, long)> rec = [&](size_t i, uint64_t chosen, long size) {
        if (size + static_cast<long>(n - i) <= best) return;
        if (i == n) {
            best = std::max(best, size);
            return;
        }
        uint64_t with = chosen | (uint64_t(1) << i);
        bool ok = true;
        for (uint64_t s : supports)
            if ((s & with) == s) {
                ok = false;
                break;
            }
        if (ok) rec(i + 1, with, size + 1);
        rec(i + 1, chosen, size);
    };
    rec(0, 0, 0);
    return best;
}

inline Polynomial binomial_from_vector(const IVec& u, size_t n) {
    Mono pos, negm;
    for (size_t i = 0; i < u.size(); ++i) {
        long x = u[i].get_si();
        if (x > 0) {
            pos.e[i] = static_cast<uint16_t>(x);
            pos.deg += static_cast<uint32_t>(x);
        } else if (x < 0) {
            negm.e[i] = static_cast<uint16_t>(-x);
            negm.deg += static_cast<uint32_t>(-x);
        }
    }
    return Polynomial::monomial(n, pos) - Polynomial::monomial(n, negm);
}

// Toric ideal of the columns a_1..a_n: kernel-lattice binomials saturated by every variable.
inline std::vector<Polynomial> toric_ideal(const std::vector<IVec>& config) {
    const size_t n = config.size();
    if (n == 0) return {};
    const size_t k = config[0].size();
    IntegerMatrix A = IntegerMatrix::from_cols(config, k);
    std::vector<IVec> ker = integer_kernel(A);
    std::vector<Polynomial> I;
    for (const auto& u : ker) I.push_back(binomial_from_vector(u, n));
    if (I.empty()) return {};
    for (size_t v = 0; v < n; ++v) I = saturate_by_variable(I, n, v);
    return buchberger(I, n).gens;
}

// Exponent-vector check that a binomial x^a - c x^b vanishes under x_i -> t^{config_i}.
inline bool vanishes_on_monomial_map(const Polynomial& f, const std::vector<IVec>& config) {
    std::map<IVec, Rat> acc;
    const size_t k = config.empty() ? 0 : config[0].size();
    for (const auto& t : f.terms()) {
        IVec w(k, Int(0));
        for (size_t i = 0; i < config.size(); ++i)
            for (size_t j = 0; j < k; ++j) w[j] += Int(t.m.e[i]) * config[i][j];
        acc[w] += t.c;
    }
    for (const auto& [w, c] : acc)
        if (c != 0) return false;
    return true;
}

}  // namespace kfano

#endif
