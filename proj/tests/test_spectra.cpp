#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "polarbf/spectra.hpp"

using namespace polarbf;

TEST_CASE("wt_n basics") {
    const WeightContext c2(2);
    CHECK(wt_n(5, c2) == 2);
    CHECK(wt_n(-5, c2) == 2);
    CHECK(wt_n(0, c2) == 0);
    CHECK(wt_n(15, c2) == 0);
    const WeightContext c3(3);
    CHECK(wt_n(7 * 5, c3) == 3);
    SUBCASE("negation identity off multiples of the modulus") {
        std::mt19937_64 rng(23);
        for (int m = 2; m <= 8; ++m) {
            const WeightContext ctx(m);
            for (int i = 0; i < 200; ++i) {
                const int64_t u = static_cast<int64_t>(rng() % (ctx.modulus - 1)) + 1;
                CHECK(wt_n(-u, ctx) == ctx.n - wt_n(u, ctx));
            }
        }
    }
    SUBCASE("cyclic shift invariance") {
        std::mt19937_64 rng(29);
        for (int m = 2; m <= 8; ++m) {
            const WeightContext ctx(m);
            for (int i = 0; i < 200; ++i) {
                const int64_t u = static_cast<int64_t>(rng() % ctx.modulus);
                CHECK(wt_n((int64_t{1} << m) * u, ctx) == wt_n(u, ctx));
            }
        }
    }
}

TEST_CASE("exponent pairing") {
    const WeightContext c2(2);
    CHECK(pair_to_exponent(1, 1, c2) == 1);
    CHECK(pair_to_exponent(0, 2, c2) == (pair_to_exponent(0, 4, c2) + 3) % 15);
    for (int j = 0; j <= 1; ++j)
        for (int k = 0; k <= 3; ++k)
            CHECK(pair_to_exponent(j + 1, k + 1, c2) ==
                  (pair_to_exponent(j, k, c2) + 1) % 15);
    CHECK_THROWS_AS(pair_to_exponent(3, 0, c2), std::invalid_argument);
    CHECK_THROWS_AS(pair_to_exponent(0, 5, c2), std::invalid_argument);
    SUBCASE("bijection round trip") {
        for (int m = 2; m <= 6; ++m) {
            const WeightContext ctx(m);
            std::vector<char> seen(ctx.modulus, 0);
            for (int j = 0; j <= (1 << m) - 2; ++j)
                for (int k = 0; k <= (1 << m); ++k) {
                    const uint64_t i = pair_to_exponent(j, k, ctx);
                    REQUIRE(i < ctx.modulus);
                    seen[i] = 1;
                    const auto [jj, kk] = exponent_to_pair(i, ctx);
                    REQUIRE(jj == j);
                    REQUIRE(kk == k);
                }
            for (char s : seen) REQUIRE(s == 1);
        }
    }
}

TEST_CASE("weight identity over the pairing grid") {
    for (int m = 2; m <= 10; ++m) {
        const auto rep = verify_lemma1(WeightContext(m));
        CHECK(rep.holds);
        CHECK(rep.counterexamples.empty());
    }
}

TEST_CASE("S_k and T_k sets") {
    const WeightContext c3(3);
    CHECK(s_k(c3, 0).members == std::vector<int>{0, 1, 2, 4});
    const WeightContext c4(4);
    CHECK(s_k(c4, 0).members.size() == 5);  // 2^3 - C(4,2)/2
    CHECK_THROWS_AS(s_k(c3, 9), std::invalid_argument);
    for (int m = 2; m <= 8; ++m) {
        const WeightContext ctx(m);
        for (int k = 1; k <= (1 << m); ++k) {
            const auto s = s_k(ctx, k).members;
            const auto t = t_k(ctx, k).members;
            CHECK(std::find(s.begin(), s.end(), 0) == s.end());
            CHECK(std::find(t.begin(), t.end(), 0) == t.end());
            CHECK(s.size() == t.size());
            CHECK(s.size() + t.size() <= (1u << m) - 2);
        }
    }
}

TEST_CASE("cardinality bound and equality characterization") {
    for (int m = 2; m <= 10; ++m) {
        const auto rep = verify_prop3(WeightContext(m));
        CHECK(rep.holds);
        CHECK(rep.max_card <= 1 << (m - 1));
        if (m % 2 == 1) {
            CHECK(rep.equality_cases == std::vector<int>{0});
        } else {
            CHECK(rep.equality_cases.empty());
        }
    }
}
