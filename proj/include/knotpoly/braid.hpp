// Braid words on n strands: parsing, combinatorial attributes, and the two
// Markov-move constructors used by the invariance tests.  A word is a
// sequence of nonzero letters g with 1 <= |g| <= n-1; g > 0 is the positive
// elementary braid on strands (g, g+1), g < 0 its inverse.  Words are kept
// exactly as given (no free cancellation), so syntactically distinct
// representatives of the same braid stay distinct.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotpoly {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
struct StrandMismatch : std::runtime_error {
    explicit StrandMismatch(const std::string& what) : std::runtime_error(what) {}
};

class BraidWord {
public:
    BraidWord() : n_(1) {}
    BraidWord(int n, std::vector<int> word) : n_(n), word_(std::move(word)) {
        if (n_ < 1) throw ParseError("strand count must be >= 1");
        for (int g : word_) {
            if (g == 0 || std::abs(g) > n_ - 1)
                throw ParseError("letter " + std::to_string(g) + " out of range for n=" +
                                 std::to_string(n_));
        }
    }

    int strands() const { return n_; }
    const std::vector<int>& word() const { return word_; }
    std::size_t length() const { return word_.size(); }

    bool operator==(const BraidWord& o) const { return n_ == o.n_ && word_ == o.word_; }

    std::string word_text() const {
        std::string out;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(word_[i]);
        }
        return out;
    }

private:
    int n_;
    std::vector<int> word_;
};

// Whitespace-separated signed generator indices.  Without an override the
// strand count is 1 + max|g| (1 for the empty word).
inline BraidWord parse_braid(const std::string& text, std::optional<int> n_override = {}) {
    std::vector<int> word;
    std::istringstream in(text);
    std::string tok;
    int maxgen = 0;
    while (in >> tok) {
        std::size_t pos = 0;
        long g = 0;
        try {
            g = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + tok + "'");
        }
        if (pos != tok.size()) throw ParseError("not an integer: '" + tok + "'");
        if (g == 0) throw ParseError("generator index 0 is invalid");
        word.push_back(static_cast<int>(g));
        maxgen = std::max(maxgen, static_cast<int>(std::labs(g)));
    }
    const int n = n_override.value_or(word.empty() ? 1 : maxgen + 1);
    if (n < 1) throw ParseError("strand count must be >= 1");
    if (maxgen > n - 1)
        throw ParseError("generator " + std::to_string(maxgen) + " needs at least " +
                         std::to_string(maxgen + 1) + " strands, have " + std::to_string(n));
    return BraidWord(n, std::move(word));
}

inline int writhe(const BraidWord& b) {
    int w = 0;
    for (int g : b.word()) w += (g > 0) ? 1 : -1;
    return w;
}

// Image in the symmetric group; perm[i] is the 0-based endpoint of the strand
// starting at position i.
inline std::vector<int> permutation(const BraidWord& b) {
    std::vector<int> perm(b.strands());
    std::iota(perm.begin(), perm.end(), 0);
    for (int g : b.word()) {
        const int i = std::abs(g) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    return perm;
}

inline int closure_components(const BraidWord& b) {
    const std::vector<int> perm = permutation(b);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
    }
    return cycles;
}

// g b g^{-1} as a word: g's word, then b's, then g's reversed with flipped signs.
inline BraidWord conjugate(const BraidWord& b, const BraidWord& g) {
    if (b.strands() != g.strands())
        throw StrandMismatch("conjugation needs equal strand counts");
    std::vector<int> word = g.word();
    word.insert(word.end(), b.word().begin(), b.word().end());
    for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) word.push_back(-*it);
    return BraidWord(b.strands(), std::move(word));
}

// Markov stabilisation: append sigma_n^{+-1} on a fresh strand.
inline BraidWord stabilize(const BraidWord& b, int sign) {
    std::vector<int> word = b.word();
    word.push_back(sign > 0 ? b.strands() : -b.strands());
    return BraidWord(b.strands() + 1, std::move(word));
}

// Deterministic 64-bit linear congruential generator (Knuth's MMIX
// multiplier), fixed here so seeded runs reproduce across platforms.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 16;
    }
    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

// Letters uniform over +-{1..n-1}; n = 1 admits no letters and yields the
// identity braid for any requested length.
inline BraidWord random_braid(int n, int len, std::uint64_t seed) {
    if (n < 1) throw ParseError("strand count must be >= 1");
    if (n == 1 || len <= 0) return BraidWord(n, {});
    Lcg rng(seed);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        const auto r = rng.next_below(2ULL * static_cast<std::uint64_t>(n - 1));
        const int idx = static_cast<int>(r % static_cast<std::uint64_t>(n - 1)) + 1;
        word.push_back(r < static_cast<std::uint64_t>(n - 1) ? idx : -idx);
    }
    return BraidWord(n, std::move(word));
}

// ---------------------------------------------------------------------------
// Knot-table rows: UTF-8 TSV with header "name<TAB>n<TAB>word".

struct TableEntry {
    std::string name;
    int n = 1;
    std::string word_text;

    BraidWord braid() const { return parse_braid(word_text, n); }
};

// Parses the table body; rows that fail to parse are reported through
// `on_error` (row number is 1-based including the header) and skipped.
template <typename ErrFn>
std::vector<TableEntry> parse_knot_table(std::istream& in, ErrFn on_error) {
    std::vector<TableEntry> rows;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            saw_header = true;
            if (line != "name\tn\tword") on_error(lineno, "missing 'name\\tn\\tword' header");
            continue;
        }
        const auto t1 = line.find('\t');
        const auto t2 = (t1 == std::string::npos) ? std::string::npos : line.find('\t', t1 + 1);
        if (t2 == std::string::npos) {
            on_error(lineno, "expected 3 tab-separated fields");
            continue;
        }
        TableEntry e;
        e.name = line.substr(0, t1);
        e.word_text = line.substr(t2 + 1);
        try {
            const std::string nfield = line.substr(t1 + 1, t2 - t1 - 1);
            std::size_t pos = 0;
            e.n = std::stoi(nfield, &pos);
            if (pos != nfield.size() || e.n < 1) throw ParseError("bad strand count");
            e.braid();  // validates the word against n
        } catch (const std::exception& ex) {
            on_error(lineno, ex.what());
            continue;
        }
        rows.push_back(std::move(e));
    }
    return rows;
}

}  // namespace knotpoly
