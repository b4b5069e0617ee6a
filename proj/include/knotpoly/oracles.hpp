// Independent classical computations of the Jones and Alexander polynomials
// of a braid closure, in the same variable conventions as the quotient-ring
// engine, for cross-validation.  Nothing here touches lawrence.hpp or
// invariants.hpp.
//
// Jones: Kauffman bracket via crossing-by-crossing resolution.  States are
// grouped by their planar matching of the 2n boundary points, so the state
// count stays bounded by the Catalan numbers instead of 2^len.  Loop value
// -A^2 - A^{-2}, bracket of the unknot = 1.  Writhe normalisation
// (-A)^{-3w}, then A^e -> (-1)^{e/2} x^{e/4}; the variable direction and
// sign are pinned by the anchors J~(sigma^3) = -x^{-4}+x^{-3}+x^{-1} and
// J~(2-unlink) = x^{1/2}+x^{-1/2}.
//
// Alexander: reduced Burau matrix over Z[t,t^{-1}], then
//
//   T = (-1)^{n(n-1)/2} t^{(n-1-w)/2} det(rho(b) - I) (1-t)/(1-t^n),
//
// renamed t -> x.  The unit makes T symmetric under t -> t^{-1} with T(1)=1
// for knots and reproduces the anchor value x^{-1/2}-x^{1/2} on the positive
// Hopf braid; both properties are asserted after the fact.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/polyring.hpp"

namespace knotpoly {

struct DegenerateDeterminant : std::runtime_error {
    explicit DegenerateDeterminant(const std::string& what) : std::runtime_error(what) {}
};

// Laurent polynomial in the bracket variable; keys are plain A-exponents.
using BracketPoly = LaurentPoly;

namespace tl {

// Planar pairing of 2n boundary points: 0..n-1 bottom, n..2n-1 top.
using Diagram = std::vector<int>;

inline Diagram identity_diagram(int n) {
    Diagram d(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        d[static_cast<std::size_t>(i)] = n + i;
        d[static_cast<std::size_t>(n + i)] = i;
    }
    return d;
}

// Cup-cap diagram joining strands k, k+1 (1-based k).
inline Diagram e_diagram(int n, int k) {
    Diagram d = identity_diagram(n);
    const int b0 = k - 1, b1 = k, t0 = n + k - 1, t1 = n + k;
    d[static_cast<std::size_t>(b0)] = b1;
    d[static_cast<std::size_t>(b1)] = b0;
    d[static_cast<std::size_t>(t0)] = t1;
    d[static_cast<std::size_t>(t1)] = t0;
    return d;
}

// Stack `upper` on top of `lower`, following strands through the glued
// interface; `loops` receives the number of circles closed in the middle.
inline Diagram compose(const Diagram& lower, const Diagram& upper, int& loops) {
    const int n = static_cast<int>(lower.size()) / 2;
    Diagram out(2 * static_cast<std::size_t>(n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);  // interface slots walked

    // Endpoint encoding for the walk: 0..n-1 final bottom, n..2n-1 final top.
    auto walk = [&](int start) -> int {
        int pos = start;  // position expressed in "lower bottom / upper top" terms
        bool in_lower = start < n;
        while (true) {
            const int mate = in_lower ? lower[static_cast<std::size_t>(pos)]
                                      : upper[static_cast<std::size_t>(pos)];
            if (in_lower) {
                if (mate < n) return mate;       // landed on the final bottom
                seen[static_cast<std::size_t>(mate - n)] = true;
                in_lower = false;
                pos = mate - n;                  // continue from upper bottom slot
            } else {
                if (mate >= n) return mate;      // landed on the final top
                seen[static_cast<std::size_t>(mate)] = true;
                in_lower = true;
                pos = mate + n;                  // continue from lower top slot
            }
        }
    };

    for (int s = 0; s < 2 * n; ++s) {
        if (out[static_cast<std::size_t>(s)] != -1) continue;
        const int other = walk(s);
        out[static_cast<std::size_t>(s)] = other;
        out[static_cast<std::size_t>(other)] = s;
    }

    loops = 0;
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)] || visited[static_cast<std::size_t>(i)]) continue;
        // untouched interface slots lie on closed circles; trace one, hopping
        // upper-pairing then lower-pairing until the start slot returns
        int pos = i;
        do {
            visited[static_cast<std::size_t>(pos)] = true;
            const int q = upper[static_cast<std::size_t>(pos)];  // < n on a circle
            visited[static_cast<std::size_t>(q)] = true;
            pos = lower[static_cast<std::size_t>(q + n)] - n;
        } while (pos != i);
        ++loops;
    }
    return out;
}

// Number of circles in the braid closure of the diagram (top i joined to
// bottom i).
inline int closure_loops(const Diagram& d) {
    const int n = static_cast<int>(d.size()) / 2;
    std::vector<bool> visited(d.size(), false);
    int loops = 0;
    for (int s = 0; s < 2 * n; ++s) {
        if (visited[static_cast<std::size_t>(s)]) continue;
        ++loops;
        int pos = s;
        while (!visited[static_cast<std::size_t>(pos)]) {
            visited[static_cast<std::size_t>(pos)] = true;
            const int mate = d[static_cast<std::size_t>(pos)];
            visited[static_cast<std::size_t>(mate)] = true;
            pos = (mate < n) ? mate + n : mate - n;  // closure arc
        }
    }
    return loops;
}

}  // namespace tl

inline BracketPoly bracket_loop_value() {
    BracketPoly d;
    d.add_term(2, Int(-1));
    d.add_term(-2, Int(-1));
    return d;
}

// Kauffman bracket of the braid closure; positive letters resolve as
// A * (identity) + A^{-1} * (cup-cap), negative letters the other way round.
inline BracketPoly kauffman_bracket(const BraidWord& b) {
    const int n = b.strands();
    const BracketPoly delta = bracket_loop_value();

    std::map<tl::Diagram, BracketPoly> states;
    states[tl::identity_diagram(n)] = BracketPoly(Int(1));

    for (int g : b.word()) {
        const int k = std::abs(g);
        const tl::Diagram ek = tl::e_diagram(n, k);
        std::map<tl::Diagram, BracketPoly> next;
        for (const auto& [diag, coeff] : states) {
            // identity smoothing
            {
                auto& slot = next[diag];
                slot = slot + coeff.shifted(g > 0 ? 1 : -1);
            }
            // cup-cap smoothing
            int loops = 0;
            const tl::Diagram merged = tl::compose(diag, ek, loops);
            BracketPoly c = coeff.shifted(g > 0 ? -1 : 1);
            for (int l = 0; l < loops; ++l) c = c * delta;
            auto& slot = next[merged];
            slot = slot + c;
        }
        // drop cancelled states
        states.clear();
        for (auto& [diag, coeff] : next)
            if (!coeff.is_zero()) states.emplace(std::move(diag), std::move(coeff));
    }

    BracketPoly total;
    for (const auto& [diag, coeff] : states) {
        BracketPoly c = coeff;
        for (int l = tl::closure_loops(diag); l > 1; --l) c = c * delta;
        total = total + c;
    }
    return total;
}

// Normalised Jones polynomial of the closure, in the engine's variable.
inline LaurentPoly jones_oracle(const BraidWord& b) {
    const int w = writhe(b);
    BracketPoly f = kauffman_bracket(b).shifted(-3 * w);
    if (w % 2 != 0) f = -f;  // (-1)^{-3w}

    LaurentPoly out;
    for (const auto& [e, c] : f.terms()) {
        if (e % 2 != 0)
            throw DegenerateDeterminant("odd bracket exponent after writhe normalisation");
        const std::int64_t x2 = e / 2;
        out.add_term(x2, (x2 % 2 != 0) ? Int(-c) : c);
    }
    return out;
}

namespace burau {

using Matrix = std::vector<std::vector<LaurentPoly>>;

inline Matrix identity(int size) {
    Matrix m(static_cast<std::size_t>(size),
             std::vector<LaurentPoly>(static_cast<std::size_t>(size)));
    for (int i = 0; i < size; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        LaurentPoly(Int(1));
    return m;
}

// Reduced Burau image of one letter on basis e_1..e_{n-1}; t lives at
// x2 = 2.  Column j holds the image of e_j.
inline Matrix generator(int n, int g) {
    const int size = n - 1;
    const int i = std::abs(g);
    Matrix m = identity(size);
    auto at = [&](int r, int c) -> LaurentPoly& {
        return m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
    };
    if (g > 0) {
        if (i >= 2) at(i - 1, i) = LaurentPoly::monomial(2);        // + t e_{i-1}
        at(i, i) = LaurentPoly::monomial(2, Int(-1));               // - t e_i
        if (i <= size - 1) at(i + 1, i) = LaurentPoly(Int(1));      // + e_{i+1}
    } else {
        if (i >= 2) at(i - 1, i) = LaurentPoly(Int(1));             // + e_{i-1}
        at(i, i) = LaurentPoly::monomial(-2, Int(-1));              // - t^{-1} e_i
        if (i <= size - 1) at(i + 1, i) = LaurentPoly::monomial(-2);  // + t^{-1} e_{i+1}
    }
    return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t size = a.size();
    Matrix out(size, std::vector<LaurentPoly>(size));
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) {
            LaurentPoly acc;
            for (std::size_t k = 0; k < size; ++k) acc = acc + a[r][k] * b[k][c];
            out[r][c] = acc;
        }
    return out;
}

// Exact determinant by expansion over row subsets (columns consumed left to
// right); fine at the handful-of-strands scale this oracle serves.
inline LaurentPoly determinant(const Matrix& m) {
    const int size = static_cast<int>(m.size());
    if (size == 0) return LaurentPoly(Int(1));
    const std::size_t full = (std::size_t{1} << size) - 1;
    std::vector<LaurentPoly> dp(full + 1);
    dp[0] = LaurentPoly(Int(1));
    for (std::size_t mask = 1; mask <= full; ++mask) {
        const int col = __builtin_popcountll(mask) - 1;
        LaurentPoly acc;
        int parity = 0;
        for (int r = 0; r < size; ++r) {
            if (!(mask & (std::size_t{1} << r))) continue;
            const LaurentPoly& entry = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (!entry.is_zero()) {
                LaurentPoly term = entry * dp[mask ^ (std::size_t{1} << r)];
                acc = (parity % 2 == 0) ? acc + term : acc - term;
            }
            ++parity;
        }
        dp[mask] = acc;
    }
    return dp[full];
}

}  // namespace burau

// Alexander polynomial of the closure in the engine's convention.  Returns 0
// for split links (vanishing determinant).
inline LaurentPoly alexander_oracle(const BraidWord& b) {
    const int n = b.strands();
    const int w = writhe(b);

    burau::Matrix rho = burau::identity(n - 1);
    for (int g : b.word()) rho = burau::multiply(rho, burau::generator(n, g));
    for (int i = 0; i < n - 1; ++i) {
        auto& e = rho[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        e = e - LaurentPoly(Int(1));
    }
    const LaurentPoly det = burau::determinant(rho);
    if (det.is_zero()) return LaurentPoly();

    LaurentPoly one_minus_t(Int(1));
    one_minus_t.add_term(2, Int(-1));
    LaurentPoly one_minus_tn(Int(1));
    one_minus_tn.add_term(2 * static_cast<std::int64_t>(n), Int(-1));

    LaurentPoly raw;
    try {
        raw = divide_exact(det * one_minus_t, one_minus_tn);
    } catch (const NotDivisible& e) {
        throw DegenerateDeterminant(std::string("Burau determinant quotient failed: ") + e.what());
    }

    LaurentPoly result = raw.shifted(n - 1 - w);
    if ((static_cast<std::int64_t>(n) * (n - 1) / 2) % 2 != 0) result = -result;

    // Unit sanity: symmetric or antisymmetric under t -> 1/t, and equal to 1
    // at t = 1 for knots.
    const LaurentPoly mirror = result.mirrored();
    const bool symmetric = (mirror == result);
    if (!symmetric && mirror != -result)
        throw DegenerateDeterminant("normalised Alexander value is not (anti)symmetric");
    if (closure_components(b) == 1) {
        const Int at_one = result.eval_one();
        if (at_one == -1) {
            result = -result;
        } else if (at_one != 1) {
            throw DegenerateDeterminant("knot Alexander value at t=1 is not a unit");
        }
    }
    return result;
}

}  // namespace knotpoly
