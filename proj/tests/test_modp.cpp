#include <catch2/catch.hpp>

#include "equindex/modp.hpp"
#include "oracle_bigint.hpp"

using equindex::binom_mod_p;
using equindex::minimal_s;
using equindex::to_digits;

TEST_CASE("base-p digit decomposition", "[modp]") {
    CHECK(to_digits(10, 2).digits == std::vector<int>{0, 1, 0, 1});
    CHECK(to_digits(0, 5).digits.empty());
    CHECK(to_digits(7, 7).digits == std::vector<int>{0, 1});

    SECTION("digits reassemble to the original value") {
        for (std::int64_t p : {2, 3, 5, 7, 11}) {
            for (std::int64_t n = 0; n <= 300; ++n) {
                const auto dv = to_digits(n, p);
                CHECK(dv.value() == n);
                if (!dv.digits.empty()) CHECK(dv.digits.back() != 0);
                for (int d : dv.digits) {
                    CHECK(d >= 0);
                    CHECK(d < p);
                }
            }
        }
    }

    SECTION("rejects bad input") {
        CHECK_THROWS_AS(to_digits(3, 4), equindex::parameter_error);
        CHECK_THROWS_AS(to_digits(3, 1), equindex::parameter_error);
        CHECK_THROWS_AS(to_digits(-1, 2), equindex::parameter_error);
    }
}

TEST_CASE("binomials mod p via Lucas", "[modp]") {
    CHECK(binom_mod_p(6, 4, 2) == 1);  // C(6,4) = 15
    CHECK(binom_mod_p(10, 4, 2) == 0);  // C(10,4) = 210
    CHECK(binom_mod_p(12, 0, 7) == 1);
    CHECK(binom_mod_p(3, 5, 3) == 0);  // k > n

    SECTION("non-prime modulus is rejected") {
        CHECK_THROWS_AS(binom_mod_p(6, 4, 6), equindex::parameter_error);
        CHECK_THROWS_AS(binom_mod_p(6, 4, 1), equindex::parameter_error);
    }

    SECTION("agrees with the exact big-integer oracle up to n = 64") {
        for (std::int64_t p : {2, 3, 5, 7}) {
            for (int n = 0; n <= 64; ++n) {
                for (int k = 0; k <= n; ++k) {
                    const auto expected = oracle::big_binomial(n, k).mod_small(p);
                    REQUIRE(binom_mod_p(n, k, p) == static_cast<int>(expected));
                }
            }
        }
    }

    SECTION("Pascal recurrence holds mod p") {
        for (std::int64_t p : {2, 3, 5, 7}) {
            for (int n = 1; n <= 40; ++n) {
                for (int k = 1; k <= n; ++k) {
                    const int lhs = binom_mod_p(n, k, p);
                    const int rhs =
                        (binom_mod_p(n - 1, k - 1, p) + binom_mod_p(n - 1, k, p)) % static_cast<int>(p);
                    REQUIRE(lhs == rhs);
                }
            }
        }
    }

    SECTION("Kummer boundary: zero exactly when a digit of k exceeds one of n") {
        for (std::int64_t p : {2, 3, 5}) {
            for (int n = 0; n <= 120; ++n) {
                for (int k = 0; k <= n; ++k) {
                    const auto nd = to_digits(n, p).digits;
                    const auto kd = to_digits(k, p).digits;
                    bool carries = false;
                    for (std::size_t i = 0; i < kd.size(); ++i)
                        if (kd[i] > nd[i]) carries = true;
                    REQUIRE((binom_mod_p(n, k, p) == 0) == carries);
                }
            }
        }
    }
}

TEST_CASE("minimal s with k < 2^s", "[modp]") {
    CHECK(minimal_s(3) == 2);
    CHECK(minimal_s(1) == 1);
    CHECK(minimal_s(8) == 4);

    for (int s = 1; s <= 20; ++s) {
        CHECK(minimal_s((std::int64_t(1) << s) - 1) == s);
        CHECK(minimal_s(std::int64_t(1) << s) == s + 1);
    }

    CHECK_THROWS_AS(minimal_s(0), equindex::parameter_error);
    CHECK_THROWS_AS(minimal_s(-4), equindex::parameter_error);
}
