#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "knotpoly/braid.hpp"
#include "knotpoly/lawrence.hpp"
#include "test_util.hpp"

using namespace knotpoly;
using testutil::lp;
using testutil::qp;

namespace {

IndexVector iv(std::initializer_list<int> bits) {
    IndexVector v;
    for (int b : bits) v.push_back(static_cast<std::uint8_t>(b));
    return v;
}

// Independent 2x2 reference for the weight-1 block on two strands, basis
// ordered [(1,0), (0,1)]; entries are plain Laurent polynomials.
struct BurauBlock {
    LaurentPoly m[2][2];

    static BurauBlock sigma() {
        BurauBlock b;
        b.m[0][0] = LaurentPoly();
        b.m[0][1] = LaurentPoly::monomial(-2);
        b.m[1][0] = LaurentPoly(Int(1));
        b.m[1][1] = lp({{0, 1}, {-2, -1}});
        return b;
    }
    BurauBlock operator*(const BurauBlock& o) const {
        BurauBlock r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
        return r;
    }
};

}  // namespace

TEST_CASE("sector bases") {
    SECTION("two strands, weight one, lexicographic") {
        CHECK(sector_basis(2, 1) == std::vector<IndexVector>{iv({0, 1}), iv({1, 0})});
    }
    SECTION("weight zero is the single all-zeros vector") {
        CHECK(sector_basis(5, 0) == std::vector<IndexVector>{iv({0, 0, 0, 0, 0})});
    }
    SECTION("binomial count") {
        CHECK(sector_basis(4, 2).size() == 6);
    }
    SECTION("out of range") {
        CHECK_THROWS_AS(sector_basis(3, 4), RangeError);
        CHECK_THROWS_AS(sector_basis(3, -1), RangeError);
    }
}

TEST_CASE("local generator action") {
    const QuotientPoly sigma_11 = qp({{0, 1}, {-2, -1}}, {{0, 1}});  // 1 - x^{-1} + d
    const QuotientPoly sigma_inv_11 = qp({}, {{2, 1}});              // x d

    SECTION("weight-two fixtures") {
        const IndexState plus = apply_generator(IndexState::basis(iv({1, 1})), 1, +1);
        REQUIRE(plus.amplitudes().size() == 1);
        CHECK(plus.amplitude(iv({1, 1})) == sigma_11);

        const IndexState minus = apply_generator(IndexState::basis(iv({1, 1})), 1, -1);
        REQUIRE(minus.amplitudes().size() == 1);
        CHECK(minus.amplitude(iv({1, 1})) == sigma_inv_11);

        CHECK(q_mul(sigma_11, sigma_inv_11) == QuotientPoly::one());
    }
    SECTION("weight-zero pair is fixed") {
        const IndexState s = apply_generator(IndexState::basis(iv({0, 0})), 1, +1);
        REQUIRE(s.amplitudes().size() == 1);
        CHECK(s.amplitude(iv({0, 0})) == QuotientPoly::one());
    }
    SECTION("weight-one diagonal coefficients") {
        // positive: 0 on (1,0), 1 - x^{-1} on (0,1)
        CHECK(apply_generator(IndexState::basis(iv({1, 0})), 1, +1).amplitude(iv({1, 0})).is_zero());
        CHECK(apply_generator(IndexState::basis(iv({0, 1})), 1, +1).amplitude(iv({0, 1})) ==
              qp({{0, 1}, {-2, -1}}, {}));
        // negative: 1 - x on (1,0), 0 on (0,1)
        CHECK(apply_generator(IndexState::basis(iv({1, 0})), 1, -1).amplitude(iv({1, 0})) ==
              qp({{0, 1}, {2, -1}}, {}));
        CHECK(apply_generator(IndexState::basis(iv({0, 1})), 1, -1).amplitude(iv({0, 1})).is_zero());
    }
    SECTION("weight-one off-diagonal gauge") {
        CHECK(apply_generator(IndexState::basis(iv({1, 0})), 1, +1).amplitude(iv({0, 1})) ==
              QuotientPoly::one());
        CHECK(apply_generator(IndexState::basis(iv({0, 1})), 1, +1).amplitude(iv({1, 0})) ==
              qp({{-2, 1}}, {}));
    }
    SECTION("bad generator index") {
        CHECK_THROWS_AS(apply_generator(IndexState::basis(iv({0, 1})), 2, +1), RangeError);
    }
}

TEST_CASE("word application") {
    SECTION("identity word fixes every basis vector") {
        for (const auto& v : sector_basis(3, 2)) {
            const IndexState s = apply_word(v, parse_braid("", 3));
            REQUIRE(s.amplitudes().size() == 1);
            CHECK(s.amplitude(v) == QuotientPoly::one());
        }
    }
    SECTION("generator followed by its inverse is the identity") {
        for (int n = 2; n <= 5; ++n) {
            for (int i = 1; i <= n - 1; ++i) {
                for (int m = 0; m <= n; ++m) {
                    for (const auto& v : sector_basis(n, m)) {
                        for (const auto& word : {std::vector<int>{i, -i}, std::vector<int>{-i, i}}) {
                            const IndexState s = apply_word(v, BraidWord(n, word));
                            REQUIRE(s.amplitudes().size() == 1);
                            CHECK(s.amplitude(v) == QuotientPoly::one());
                        }
                    }
                }
            }
        }
    }
    SECTION("braid relation and far commutation, exhaustive to five strands") {
        for (int n = 2; n <= 5; ++n) {
            for (int i = 1; i <= n - 1; ++i) {
                for (int j = 1; j <= n - 1; ++j) {
                    std::vector<int> left, right;
                    if (std::abs(i - j) == 1) {
                        left = {i, j, i};
                        right = {j, i, j};
                    } else if (std::abs(i - j) >= 2) {
                        left = {i, j};
                        right = {j, i};
                    } else {
                        continue;
                    }
                    for (int m = 0; m <= n; ++m) {
                        for (const auto& v : sector_basis(n, m)) {
                            const IndexState a = apply_word(v, BraidWord(n, left));
                            const IndexState b = apply_word(v, BraidWord(n, right));
                            CHECK(a.amplitudes() == b.amplitudes());
                        }
                    }
                }
            }
        }
    }
    SECTION("weight grading is preserved") {
        Lcg rng(3);
        for (int t = 0; t < 20; ++t) {
            const BraidWord b = random_braid(4, 8, rng.next());
            for (int m = 0; m <= 4; ++m) {
                for (const auto& v : sector_basis(4, m)) {
                    const IndexState s = apply_word(v, b);
                    for (const auto& [key, amp] : s.amplitudes()) {
                        CHECK(index_weight(key) == m);
                        CHECK(key.size() == v.size());
                    }
                }
            }
        }
    }
}

TEST_CASE("sector traces") {
    SECTION("single positive generator on two strands") {
        CHECK(sector_trace(2, 1, parse_braid("1")) == qp({{0, 1}, {-2, -1}}, {}));
        CHECK(sector_trace(2, 2, parse_braid("1")) == qp({{0, 1}, {-2, -1}}, {{0, 1}}));
        CHECK(sector_trace(2, 0, parse_braid("1")) == QuotientPoly::one());
    }
    SECTION("identity braid gives the binomial coefficient") {
        CHECK(sector_trace(4, 2, parse_braid("", 4)) == QuotientPoly::constant(6));
        CHECK(sector_trace(5, 3, parse_braid("", 5)) == QuotientPoly::constant(10));
    }
    SECTION("trace depends only on the conjugacy class") {
        Lcg rng(11);
        for (int t = 0; t < 12; ++t) {
            const int n = 2 + static_cast<int>(rng.next_below(4));  // up to 5 strands
            const BraidWord b = random_braid(n, 1 + static_cast<int>(rng.next_below(10)), rng.next());
            const BraidWord g = random_braid(n, static_cast<int>(rng.next_below(10)), rng.next());
            const BraidWord c = conjugate(b, g);
            for (int m = 0; m <= n; ++m) {
                CHECK(sector_trace(n, m, b) == sector_trace(n, m, c));
            }
        }
    }
}

TEST_CASE("open partial traces") {
    SECTION("cubed generator reproduces the cubed Burau diagonal") {
        // independent route: cube the reference 2x2 block
        const BurauBlock cubed = BurauBlock::sigma() * BurauBlock::sigma() * BurauBlock::sigma();
        const LaurentPoly expect = cubed.m[1][1];
        // frozen value (1 - x^{-1})(1 + x^{-2})
        CHECK(expect == lp({{0, 1}, {-2, -1}}) * lp({{0, 1}, {-4, 1}}));
        CHECK(open_partial_trace(2, 1, parse_braid("1 1 1")) == QuotientPoly{expect, LaurentPoly()});
    }
    SECTION("weight zero is always one") {
        Lcg rng(5);
        for (int t = 0; t < 10; ++t) {
            const int n = 1 + static_cast<int>(rng.next_below(4));
            const BraidWord b = random_braid(n, static_cast<int>(rng.next_below(8)), rng.next());
            CHECK(open_partial_trace(n, 0, b) == QuotientPoly::one());
        }
    }
    SECTION("open unknot seed") {
        CHECK(open_partial_trace(1, 0, parse_braid("", 1)) == QuotientPoly::one());
    }
    SECTION("weight range excludes m = n") {
        CHECK_THROWS_AS(open_partial_trace(2, 2, parse_braid("1")), RangeError);
    }
}

TEST_CASE("weight-one sector is the unreduced Burau block") {
    // Entries stay d-free and the determinant is -x^{-1} per positive letter.
    Lcg rng(21);
    for (int t = 0; t < 10; ++t) {
        const int n = 2 + static_cast<int>(rng.next_below(2));  // 2 or 3 strands
        const BraidWord b = random_braid(n, 1 + static_cast<int>(rng.next_below(8)), rng.next());
        const auto mat = sector_matrix(n, 1, b);
        for (const auto& row : mat)
            for (const auto& entry : row) CHECK(entry.b.is_zero());

        QuotientPoly det;
        if (n == 2) {
            det = q_sub(q_mul(mat[0][0], mat[1][1]), q_mul(mat[0][1], mat[1][0]));
        } else {
            det = QuotientPoly();
            for (int c = 0; c < 3; ++c) {  // cyclic expansion, all terms positive
                const int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
                QuotientPoly minor =
                    q_sub(q_mul(mat[1][c1], mat[2][c2]), q_mul(mat[1][c2], mat[2][c1]));
                det = q_add(det, q_mul(mat[0][c], minor));
            }
        }
        const int w = writhe(b);
        const QuotientPoly expect{
            LaurentPoly::monomial(-2 * w, (w % 2 == 0) ? Int(1) : Int(-1)), LaurentPoly()};
        CHECK(det == expect);
    }
}

TEST_CASE("sector matrix json dump") {
    // basis order is lexicographic: [(0,1), (1,0)]
    const std::string js = sector_matrix_json(2, 1, parse_braid("1"));
    CHECK(js ==
          "[[{\"a\":[[-2,-1],[0,1]],\"b\":[]},{\"a\":[[0,1]],\"b\":[]}],"
          "[{\"a\":[[-2,1]],\"b\":[]},{\"a\":[],\"b\":[]}]]");
}
