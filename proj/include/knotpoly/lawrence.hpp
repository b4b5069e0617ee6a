// The multiplicity-free braid representation over the quotient ring: basis
// vectors are {0,1}-index vectors of fixed length n and weight m, and each
// elementary braid acts locally on two adjacent positions.  The local rules
// for the positive generator on positions (i, i+1) are
//
//   (0,0) -> (0,0)
//   (1,0) -> (0,1)
//   (0,1) -> x^{-1} (1,0) + (1 - x^{-1}) (0,1)
//   (1,1) -> (1 - x^{-1} + d) (1,1)
//
// and for the inverse generator
//
//   (0,0) -> (0,0)
//   (0,1) -> (1,0)
//   (1,0) -> x (0,1) + (1 - x) (1,0)
//   (1,1) -> x d (1,1).
//
// The (1,1) coefficients are mutually inverse in the quotient ring, which is
// exactly what makes the action well defined there: the terms that would
// escape to index 2 carry coefficients (1+d)(1-x^{-1}d^{-1}) and
// (1+d)(1-xd), both multiples of the ideal generator.
//
// Traces over a weight sector, and the partial traces with the first index
// pinned to 0, feed the invariant assembly in invariants.hpp.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/parallel.hpp"
#include "knotpoly/polyring.hpp"

namespace knotpoly {

struct RangeError : std::out_of_range {
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

using IndexVector = std::vector<std::uint8_t>;

inline int index_weight(const IndexVector& v) {
    int m = 0;
    for (auto bit : v) m += bit;
    return m;
}

// Formal linear combination of index vectors of one length and weight.
// Amplitudes are canonical quotient-ring elements; zero amplitudes are
// never stored.
class IndexState {
public:
    using Amplitudes = std::map<IndexVector, QuotientPoly>;

    IndexState() = default;
    static IndexState basis(IndexVector v) {
        IndexState s;
        s.amps_.emplace(std::move(v), QuotientPoly::one());
        return s;
    }

    const Amplitudes& amplitudes() const { return amps_; }

    void add(const IndexVector& v, const QuotientPoly& amp) {
        if (amp.is_zero()) return;
        auto it = amps_.find(v);
        if (it == amps_.end()) {
            amps_.emplace(v, amp);
        } else {
            it->second = q_add(it->second, amp);
            if (it->second.is_zero()) amps_.erase(it);
        }
    }

    QuotientPoly amplitude(const IndexVector& v) const {
        auto it = amps_.find(v);
        return it == amps_.end() ? QuotientPoly() : it->second;
    }

private:
    Amplitudes amps_;
};

// All C(n, m) index vectors of length n and weight m, lexicographically ordered.
inline std::vector<IndexVector> sector_basis(int n, int m) {
    if (n < 0 || m < 0 || m > n)
        throw RangeError("sector (" + std::to_string(n) + "," + std::to_string(m) +
                         ") out of range");
    std::vector<IndexVector> out;
    IndexVector cur(static_cast<std::size_t>(n), 0);
    // Lexicographic enumeration: place remaining ones as far right as allowed.
    auto rec = [&](auto&& self, int pos, int ones_left) -> void {
        if (pos == n) {
            if (ones_left == 0) out.push_back(cur);
            return;
        }
        if (n - pos < ones_left) return;
        cur[static_cast<std::size_t>(pos)] = 0;
        self(self, pos + 1, ones_left);
        if (ones_left > 0) {
            cur[static_cast<std::size_t>(pos)] = 1;
            self(self, pos + 1, ones_left - 1);
            cur[static_cast<std::size_t>(pos)] = 0;
        }
    };
    rec(rec, 0, m);
    return out;
}

namespace detail {

// 1 - x^{-1} + d
inline const QuotientPoly& sigma_diag_11() {
    static const QuotientPoly v = [] {
        LaurentPoly a(Int(1));
        a.add_term(-2, Int(-1));
        return QuotientPoly{a, LaurentPoly(Int(1))};
    }();
    return v;
}
// x d
inline const QuotientPoly& sigma_inv_diag_11() {
    static const QuotientPoly v{LaurentPoly(), LaurentPoly::monomial(2)};
    return v;
}

}  // namespace detail

// Linear extension of the local generator action; i is 1-based,
// 1 <= i <= n-1.
inline IndexState apply_generator(const IndexState& s, int i, int sign) {
    IndexState out;
    for (const auto& [v, amp] : s.amplitudes()) {
        const int n = static_cast<int>(v.size());
        if (i < 1 || i > n - 1)
            throw RangeError("generator " + std::to_string(i) + " out of range for n=" +
                             std::to_string(n));
        const std::size_t lo = static_cast<std::size_t>(i - 1), hi = static_cast<std::size_t>(i);
        const int pattern = v[lo] * 2 + v[hi];
        if (pattern == 0) {
            out.add(v, amp);
            continue;
        }
        if (pattern == 3) {
            const QuotientPoly& c = (sign > 0) ? detail::sigma_diag_11() : detail::sigma_inv_diag_11();
            out.add(v, q_mul(amp, c));
            continue;
        }
        IndexVector swapped = v;
        std::swap(swapped[lo], swapped[hi]);
        if (sign > 0) {
            if (pattern == 2) {  // (1,0) -> (0,1)
                out.add(swapped, amp);
            } else {  // (0,1) -> x^{-1} (1,0) + (1 - x^{-1}) (0,1)
                out.add(swapped, q_scale(amp, LaurentPoly::monomial(-2)));
                LaurentPoly diag(Int(1));
                diag.add_term(-2, Int(-1));
                out.add(v, q_scale(amp, diag));
            }
        } else {
            if (pattern == 1) {  // (0,1) -> (1,0)
                out.add(swapped, amp);
            } else {  // (1,0) -> x (0,1) + (1 - x) (1,0)
                out.add(swapped, q_scale(amp, LaurentPoly::monomial(2)));
                LaurentPoly diag(Int(1));
                diag.add_term(2, Int(-1));
                out.add(v, q_scale(amp, diag));
            }
        }
    }
    return out;
}

// Left-to-right application of the word's letters to a basis vector.
inline IndexState apply_word(const IndexVector& v, const BraidWord& b) {
    if (static_cast<int>(v.size()) != b.strands())
        throw RangeError("index vector length does not match strand count");
    IndexState s = IndexState::basis(v);
    for (int g : b.word()) s = apply_generator(s, std::abs(g), g > 0 ? 1 : -1);
    return s;
}

namespace detail {

// Sum of diagonal amplitudes over the given starting vectors; independent
// per vector, so distributed across workers.
inline QuotientPoly diagonal_sum(const std::vector<IndexVector>& basis, const BraidWord& b) {
    std::vector<QuotientPoly> diag(basis.size());
    parallel_for_indexed(
        basis.size(),
        [&](std::size_t k) { diag[k] = apply_word(basis[k], b).amplitude(basis[k]); },
        /*min_count=*/32);
    QuotientPoly total;
    for (const auto& q : diag) total = q_add(total, q);
    return total;
}

}  // namespace detail

// Trace of the braid action on the (n, m) sector.
inline QuotientPoly sector_trace(int n, int m, const BraidWord& b) {
    if (n != b.strands()) throw RangeError("sector length does not match strand count");
    return detail::diagonal_sum(sector_basis(n, m), b);
}

// Diagonal sum restricted to vectors whose first index is 0; this is the
// open-model analogue of the sector trace, with the first strand left open.
// Requires 0 <= m <= n-1.
inline QuotientPoly open_partial_trace(int n, int m, const BraidWord& b) {
    if (n != b.strands()) throw RangeError("sector length does not match strand count");
    if (m < 0 || m > n - 1)
        throw RangeError("open sector (" + std::to_string(n) + "," + std::to_string(m) +
                         ") out of range");
    std::vector<IndexVector> basis;
    for (auto& v : sector_basis(n, m))
        if (v[0] == 0) basis.push_back(std::move(v));
    return detail::diagonal_sum(basis, b);
}

// Dense matrix of the braid action on one sector, row-major over the ordered
// sector basis; used by cross-checks and the debug dump.
inline std::vector<std::vector<QuotientPoly>> sector_matrix(int n, int m, const BraidWord& b) {
    const auto basis = sector_basis(n, m);
    std::map<IndexVector, std::size_t> col;
    for (std::size_t j = 0; j < basis.size(); ++j) col[basis[j]] = j;
    std::vector<std::vector<QuotientPoly>> mat(basis.size(),
                                               std::vector<QuotientPoly>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const IndexState s = apply_word(basis[j], b);
        for (const auto& [v, amp] : s.amplitudes()) mat[col.at(v)][j] = amp;
    }
    return mat;
}

inline std::string sector_matrix_json(int n, int m, const BraidWord& b) {
    const auto mat = sector_matrix(n, m, b);
    std::string out = "[";
    for (std::size_t r = 0; r < mat.size(); ++r) {
        if (r) out += ",";
        out += "[";
        for (std::size_t c = 0; c < mat[r].size(); ++c) {
            if (c) out += ",";
            out += to_json(mat[r][c]);
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace knotpoly
