// Randomised verification suites behind `verify`: Markov-move invariance,
// the two skein relations (engine and oracle sides), and the interpolation
// identity.  All randomness flows from one fixed-seed LCG, so output for a
// given (suite, nmax, lenmax, trials, seed) is reproducible byte for byte.

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/invariants.hpp"
#include "knotpoly/oracles.hpp"
#include "knotpoly/polyring.hpp"

namespace knotpoly {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> failure_details;

    bool passed() const { return failures == 0; }
};

namespace detail {

inline BraidWord random_test_braid(Lcg& rng, int nmax, int lenmax, int nmin = 1) {
    const int n = nmin + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(nmax - nmin + 1)));
    const int len = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(lenmax + 1)));
    return random_braid(n, len, rng.next());
}

inline void record(SuiteResult& r, bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) {
        ++r.failures;
        if (r.failure_details.size() < 10) r.failure_details.push_back(what);
    }
}

inline BraidWord with_prepended(const BraidWord& b, int letter) {
    std::vector<int> word;
    word.reserve(b.length() + 1);
    word.push_back(letter);
    word.insert(word.end(), b.word().begin(), b.word().end());
    return BraidWord(b.strands(), std::move(word));
}

}  // namespace detail

// Conjugation and stabilisation leave both invariants exactly unchanged.
inline SuiteResult suite_markov(int nmax, int lenmax, int trials, std::uint64_t seed) {
    SuiteResult res;
    res.name = "markov";
    Lcg rng(seed);
    for (int t = 0; t < trials; ++t) {
        const BraidWord b = detail::random_test_braid(rng, nmax, lenmax);
        const int glen = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(lenmax + 1)));
        const BraidWord g = random_braid(b.strands(), glen, rng.next());
        const int sign = (rng.next_below(2) == 0) ? 1 : -1;

        const QuotientPoly closed = omega_closed(b);
        const QuotientPoly open = omega_open(b);
        const BraidWord conj = conjugate(b, g);
        const BraidWord stab = stabilize(b, sign);
        detail::record(res, omega_closed(conj) == closed && omega_open(conj) == open,
                       "conjugation changed invariant for braid '" + b.word_text() + "' (n=" +
                           std::to_string(b.strands()) + ", conjugator '" + g.word_text() + "')");
        detail::record(res, omega_closed(stab) == closed && omega_open(stab) == open,
                       "stabilisation changed invariant for braid '" + b.word_text() + "' (n=" +
                           std::to_string(b.strands()) + ", sign " + (sign > 0 ? "+1" : "-1") + ")");
    }
    return res;
}

// Engine skein relations on random triples (s_i b, b, s_i^{-1} b):
//   x J(L+) - x^{-1} J(L-) = (x^{1/2} - x^{-1/2}) J(L)
//   D(L+) - D(L-) = (x^{-1/2} - x^{1/2}) D(L)
// with J = spec_jones(omega_open), D = spec_alex(omega_open); the oracle
// pair must satisfy the same identities.
inline SuiteResult suite_skein(int nmax, int lenmax, int trials, std::uint64_t seed) {
    SuiteResult res;
    res.name = "skein";
    Lcg rng(seed);
    LaurentPoly nu;  // x^{1/2} - x^{-1/2}
    nu.add_term(1, Int(1));
    nu.add_term(-1, Int(-1));
    for (int t = 0; t < trials; ++t) {
        const BraidWord b = detail::random_test_braid(rng, nmax < 2 ? 2 : nmax, lenmax, 2);
        const int pos = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(b.strands() - 1)));
        const BraidWord bplus = detail::with_prepended(b, pos);
        const BraidWord bminus = detail::with_prepended(b, -pos);
        const std::string label =
            "braid '" + b.word_text() + "' (n=" + std::to_string(b.strands()) + ", i=" +
            std::to_string(pos) + ")";

        {
            const LaurentPoly j = spec_jones(omega_open(b));
            const LaurentPoly jp = spec_jones(omega_open(bplus));
            const LaurentPoly jm = spec_jones(omega_open(bminus));
            detail::record(res, jp.shifted(2) - jm.shifted(-2) == nu * j,
                           "engine Jones skein failed for " + label);
            const LaurentPoly a = spec_alex(omega_open(b));
            const LaurentPoly ap = spec_alex(omega_open(bplus));
            const LaurentPoly am = spec_alex(omega_open(bminus));
            detail::record(res, ap - am == -(nu * a), "engine Alexander skein failed for " + label);
        }
        {
            const LaurentPoly j = jones_oracle(b);
            const LaurentPoly jp = jones_oracle(bplus);
            const LaurentPoly jm = jones_oracle(bminus);
            detail::record(res, jp.shifted(2) - jm.shifted(-2) == nu * j,
                           "oracle Jones skein failed for " + label);
            const LaurentPoly a = alexander_oracle(b);
            const LaurentPoly ap = alexander_oracle(bplus);
            const LaurentPoly am = alexander_oracle(bminus);
            detail::record(res, ap - am == -(nu * a), "oracle Alexander skein failed for " + label);
        }
    }
    return res;
}

// interpolation_decompose reassembles omega_open exactly, and omega_closed
// factors through the normalised Jones polynomial.
inline SuiteResult suite_interpolation(int nmax, int lenmax, int trials, std::uint64_t seed) {
    SuiteResult res;
    res.name = "interpolation";
    Lcg rng(seed);
    for (int t = 0; t < trials; ++t) {
        const BraidWord b = detail::random_test_braid(rng, nmax, lenmax);
        const std::string label =
            "braid '" + b.word_text() + "' (n=" + std::to_string(b.strands()) + ")";
        detail::record(res, interpolation_decompose(omega_open(b)).residual_ok,
                       "interpolation reassembly failed for " + label);
        detail::record(res, closed_form_check(b), "closed-model factorisation failed for " + label);
    }
    return res;
}

inline std::string format_suite_result(const SuiteResult& r) {
    std::ostringstream out;
    out << "suite " << r.name << ": " << (r.checks - r.failures) << "/" << r.checks
        << " checks passed" << (r.passed() ? "" : "  [FAIL]") << "\n";
    for (const auto& d : r.failure_details) out << "  failure: " << d << "\n";
    return out.str();
}

}  // namespace knotpoly
