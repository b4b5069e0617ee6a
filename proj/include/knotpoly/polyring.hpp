// Exact arithmetic in Z[x^{1/2},x^{-1/2},d,d^{-1}] and in its quotient by
// the ideal ((d+1)(dx-1)).  The quotient ring is free of rank 2 over
// Z[x^{1/2},x^{-1/2}] with basis {1,d}; every element has a unique canonical
// representative a(x) + b(x)*d, which is what QuotientPoly stores.
//
// Half-integer exponents of x are kept exact by storing doubled exponents
// ("x2"), so x^{3/2} lives at x2 = 3 and x^{-1} at x2 = -2.  Coefficients are
// arbitrary-precision integers; no zero coefficient is ever stored.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotpoly {

using Int = boost::multiprecision::cpp_int;

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// LaurentPoly: one variable on the half-exponent grid, key = 2 * exponent.

class LaurentPoly {
public:
    using Terms = std::map<std::int64_t, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(Int constant) {
        if (constant != 0) terms_[0] = std::move(constant);
    }

    static LaurentPoly monomial(std::int64_t x2, Int coeff = Int(1)) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[x2] = std::move(coeff);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(std::int64_t x2) const {
        auto it = terms_.find(x2);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(std::int64_t x2, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(x2);
        if (it == terms_.end()) {
            terms_.emplace(x2, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
        LaurentPoly r = p;
        for (const auto& [e, c] : q.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
        LaurentPoly r = p;
        for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& p) {
        LaurentPoly r;
        for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
        LaurentPoly r;
        for (const auto& [ep, cp] : p.terms_)
            for (const auto& [eq, cq] : q.terms_) r.add_term(ep + eq, cp * cq);
        return r;
    }

    // Product with the monomial coeff * x^{x2/2}.
    LaurentPoly shifted(std::int64_t x2, const Int& coeff = Int(1)) const {
        LaurentPoly r;
        if (coeff == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + x2, c * coeff);
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Value at x = 1 (sum of coefficients).
    Int eval_one() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // x -> x^{-1}.
    LaurentPoly mirrored() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    std::int64_t min_x2() const { return terms_.begin()->first; }
    std::int64_t max_x2() const { return terms_.rbegin()->first; }

private:
    Terms terms_;
};

// Exact division in Z[x^{1/2},x^{-1/2}]; throws NotDivisible when no exact
// quotient exists (either an exponent gap or an integer coefficient that the
// divisor's leading coefficient does not divide).
inline LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw NotDivisible("division by zero polynomial");
    if (p.is_zero()) return LaurentPoly();

    const std::int64_t shift = p.min_x2() - q.min_x2();
    // Normalise both to ordinary polynomials with lowest term at x2 = 0 and
    // divide from the top down; the quotient is shifted back at the end.
    LaurentPoly r = p.shifted(-p.min_x2());
    const LaurentPoly qn = q.shifted(-q.min_x2());
    const std::int64_t qdeg = qn.max_x2();
    const Int qlead = qn.terms().rbegin()->second;

    LaurentPoly quot;
    while (!r.is_zero() && r.max_x2() >= qdeg) {
        const Int rlead = r.terms().rbegin()->second;
        if (rlead % qlead != 0) throw NotDivisible("leading coefficient does not divide");
        const std::int64_t e = r.max_x2() - qdeg;
        const Int c = rlead / qlead;
        quot.add_term(e, c);
        r = r - qn.shifted(e, c);
    }
    if (!r.is_zero()) throw NotDivisible("nonzero remainder");
    return quot.shifted(shift);
}

// ---------------------------------------------------------------------------
// BivarPoly: the full ring Z[x^{1/2},x^{-1/2},d,d^{-1}], key = (x2, de).

class BivarPoly {
public:
    // Lexicographic (x2 ascending, de ascending): the canonical term order.
    using Key = std::pair<std::int64_t, std::int64_t>;
    using Terms = std::map<Key, Int>;

    BivarPoly() = default;
    explicit BivarPoly(Int constant) {
        if (constant != 0) terms_[{0, 0}] = std::move(constant);
    }

    static BivarPoly monomial(std::int64_t x2, std::int64_t de, Int coeff = Int(1)) {
        BivarPoly p;
        if (coeff != 0) p.terms_[{x2, de}] = std::move(coeff);
        return p;
    }
    static BivarPoly from_laurent(const LaurentPoly& p, std::int64_t de = 0) {
        BivarPoly r;
        for (const auto& [e, c] : p.terms()) r.terms_.emplace(Key{e, de}, c);
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::int64_t x2, std::int64_t de, const Int& c) {
        if (c == 0) return;
        Key k{x2, de};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend BivarPoly operator+(const BivarPoly& p, const BivarPoly& q) {
        BivarPoly r = p;
        for (const auto& [k, c] : q.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend BivarPoly operator-(const BivarPoly& p, const BivarPoly& q) {
        BivarPoly r = p;
        for (const auto& [k, c] : q.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend BivarPoly operator-(const BivarPoly& p) {
        BivarPoly r;
        for (const auto& [k, c] : p.terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend BivarPoly operator*(const BivarPoly& p, const BivarPoly& q) {
        BivarPoly r;
        for (const auto& [kp, cp] : p.terms_)
            for (const auto& [kq, cq] : q.terms_)
                r.add_term(kp.first + kq.first, kp.second + kq.second, cp * cq);
        return r;
    }

    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

private:
    Terms terms_;
};

// The ideal generator (d+1)(dx-1) = d^2 x + dx - d - 1.
inline BivarPoly quotient_ideal_generator() {
    BivarPoly g;
    g.add_term(2, 2, 1);
    g.add_term(2, 1, 1);
    g.add_term(0, 1, -1);
    g.add_term(0, 0, -1);
    return g;
}

// ---------------------------------------------------------------------------
// QuotientPoly: canonical representative a(x) + b(x)*d in the quotient ring.

struct QuotientPoly {
    LaurentPoly a;  // coefficient of 1
    LaurentPoly b;  // coefficient of d

    QuotientPoly() = default;
    QuotientPoly(LaurentPoly a_, LaurentPoly b_) : a(std::move(a_)), b(std::move(b_)) {}

    static QuotientPoly one() { return {LaurentPoly(Int(1)), LaurentPoly()}; }
    static QuotientPoly d() { return {LaurentPoly(), LaurentPoly(Int(1))}; }
    static QuotientPoly constant(Int c) { return {LaurentPoly(std::move(c)), LaurentPoly()}; }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool operator==(const QuotientPoly& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QuotientPoly& o) const { return !(*this == o); }
};

inline QuotientPoly q_add(const QuotientPoly& p, const QuotientPoly& q) {
    return {p.a + q.a, p.b + q.b};
}
inline QuotientPoly q_sub(const QuotientPoly& p, const QuotientPoly& q) {
    return {p.a - q.a, p.b - q.b};
}
inline QuotientPoly q_neg(const QuotientPoly& p) { return {-p.a, -p.b}; }

// Multiplication uses d^2 = x^{-1} d - d + x^{-1} once, on the cross term.
inline QuotientPoly q_mul(const QuotientPoly& p, const QuotientPoly& q) {
    const LaurentPoly bb = p.b * q.b;
    LaurentPoly a = p.a * q.a + bb.shifted(-2);
    LaurentPoly b = p.a * q.b + p.b * q.a + bb.shifted(-2) - bb;
    return {std::move(a), std::move(b)};
}

inline QuotientPoly q_scale(const QuotientPoly& p, const LaurentPoly& s) {
    return {p.a * s, p.b * s};
}

// Canonical form of d^k in the quotient, any integer k.  Positive powers fold
// through d^2 = x^{-1} d - d + x^{-1}; negative ones through the inverse
// d^{-1} = (x - 1) + x d, which follows from d(dx + x - 1) = 1.
inline QuotientPoly d_power_reduced(std::int64_t k) {
    QuotientPoly r = QuotientPoly::one();
    if (k > 0) {
        LaurentPoly a, b(Int(1));  // d^1
        for (std::int64_t j = 1; j < k; ++j) {
            LaurentPoly na = b.shifted(-2);
            LaurentPoly nb = a + b.shifted(-2) - b;
            a = std::move(na);
            b = std::move(nb);
        }
        r = {std::move(a), std::move(b)};
    } else if (k < 0) {
        LaurentPoly a, b;
        a.add_term(2, Int(1));
        a.add_term(0, Int(-1));
        b.add_term(2, Int(1));  // d^{-1} = (x - 1) + x d
        LaurentPoly ra = a, rb = b;
        for (std::int64_t j = -1; j > k; --j) {
            // (ra + rb d) d^{-1} = (ra (x-1) + rb) + ra x d
            LaurentPoly na = ra * a + rb;
            LaurentPoly nb = ra.shifted(2);
            ra = std::move(na);
            rb = std::move(nb);
        }
        r = {std::move(ra), std::move(rb)};
    }
    return r;
}

// Quotient map: unique (a, b) with p == a + b d mod (d+1)(dx-1).
inline QuotientPoly q_reduce(const BivarPoly& p) {
    // Group by d-exponent so each d^k is reduced once.
    std::map<std::int64_t, LaurentPoly> by_de;
    for (const auto& [k, c] : p.terms()) by_de[k.second].add_term(k.first, c);
    QuotientPoly r;
    for (const auto& [de, coeff] : by_de) {
        const QuotientPoly dk = d_power_reduced(de);
        r.a = r.a + dk.a * coeff;
        r.b = r.b + dk.b * coeff;
    }
    return r;
}

// Specialisation d -> x^{-1}: the Jones-side coefficient map.
inline LaurentPoly spec_jones(const QuotientPoly& p) { return p.a + p.b.shifted(-2); }

// Specialisation d -> -1: the Alexander-side coefficient map.
inline LaurentPoly spec_alex(const QuotientPoly& p) { return p.a - p.b; }

// ---------------------------------------------------------------------------
// Rendering.  Canonical term order throughout; half powers print as x^{p/2}.

inline std::string render_x_power(std::int64_t x2) {
    if (x2 == 0) return "";
    if (x2 % 2 == 0) return "x^" + std::to_string(x2 / 2);
    return "x^{" + std::to_string(x2) + "/2}";
}

namespace detail {

inline void append_term(std::string& out, const Int& coeff, const std::string& vars) {
    const bool neg = coeff < 0;
    Int mag = neg ? Int(-coeff) : coeff;
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    const std::string m = mag.str();
    if (vars.empty()) {
        out += m;
    } else if (m == "1") {
        out += vars;
    } else {
        out += m + "*" + vars;
    }
}

}  // namespace detail

inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) detail::append_term(out, c, render_x_power(e));
    return out;
}

inline std::string to_string(const BivarPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : p.terms()) {
        std::string vars = render_x_power(k.first);
        if (k.second != 0) {
            if (!vars.empty()) vars += "*";
            vars += (k.second == 1) ? "d" : "d^" + std::to_string(k.second);
        }
        detail::append_term(out, c, vars);
    }
    return out;
}

inline std::string to_string(const QuotientPoly& p) {
    BivarPoly q = BivarPoly::from_laurent(p.a, 0) + BivarPoly::from_laurent(p.b, 1);
    return to_string(q);
}

// JSON encodings: LaurentPoly as [[x2, coeff]...], BivarPoly as
// [[x2, de, coeff]...], QuotientPoly as {"a": ..., "b": ...}.  Terms appear
// in canonical order, so output is byte-stable.
inline std::string to_json(const LaurentPoly& p) {
    std::string out = "[";
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(e) + "," + c.str() + "]";
    }
    return out + "]";
}

inline std::string to_json(const BivarPoly& p) {
    std::string out = "[";
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(k.first) + "," + std::to_string(k.second) + "," + c.str() + "]";
    }
    return out + "]";
}

inline std::string to_json(const QuotientPoly& p) {
    return "{\"a\":" + to_json(p.a) + ",\"b\":" + to_json(p.b) + "}";
}

}  // namespace knotpoly
