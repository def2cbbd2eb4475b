#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "radicals/closed_form.hpp"
#include "radicals/numeric.hpp"
#include "radicals/sign_pattern.hpp"

using namespace radicals;

using Catch::Matchers::WithinAbs;

TEST_CASE("finite radical at small depths") {
    CHECK(finite_radical(parse_pattern("+"), 1) == std::sqrt(2.0));
    CHECK_THAT(finite_radical(parse_pattern("+"), 2),
               WithinAbs(2.0 * std::sin(3.0 * std::numbers::pi / 8.0), 1e-14));
    CHECK_THAT(finite_radical(parse_pattern("-"), 2),
               WithinAbs(2.0 * std::sin(-std::numbers::pi / 8.0), 1e-14));
    CHECK_THAT(finite_radical(parse_pattern("-"), 2),
               WithinAbs(-std::sqrt(2.0 - std::sqrt(2.0)), 1e-15));
}

TEST_CASE("sine sum at small depths") {
    CHECK_THAT(sine_sum_truncation(parse_pattern("+"), 1), WithinAbs(std::sqrt(2.0), 1e-15));
    CHECK_THAT(sine_sum_truncation(parse_pattern("+"), 2),
               WithinAbs(2.0 * std::sin(3.0 * std::numbers::pi / 8.0), 1e-15));
    CHECK_THAT(sine_sum_truncation(parse_pattern("+-"), 2),
               WithinAbs(2.0 * std::sin(std::numbers::pi / 8.0), 1e-15));
}

TEST_CASE("radical and sine sum agree to roundoff") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const SignPattern& p : enumerate_patterns(n)) {
            for (std::size_t m = 1; m <= 24; ++m) {
                CHECK(std::abs(finite_radical(p, m) - sine_sum_truncation(p, m)) < 1e-12);
            }
        }
    }
}

TEST_CASE("certified limits land on known values") {
    CHECK_THAT(limit_numeric(parse_pattern("+"), 1e-10).value, WithinAbs(2.0, 1e-10));
    CHECK_THAT(limit_numeric(parse_pattern("+++"), 1e-10).value, WithinAbs(2.0, 1e-10));
    CHECK_THAT(limit_numeric(parse_pattern("-"), 1e-10).value, WithinAbs(-1.0, 1e-10));
    CHECK_THAT(limit_numeric(parse_pattern("+-+"), 1e-10).value,
               WithinAbs(2.0 * std::sin(std::numbers::pi / 18.0), 1e-10));
}

TEST_CASE("depth selection is minimal for the requested tolerance") {
    const TruncationResult res = limit_numeric(parse_pattern("+-"), 1e-10);
    // smallest m with pi * 2^(1-m) <= 1e-10
    CHECK(res.depth == 36);
    CHECK(res.error_bound == std::numbers::pi * std::exp2(-35.0));
    CHECK(res.error_bound <= 1e-10);
    CHECK(2.0 * res.error_bound > 1e-10);

    CHECK(truncation_error_bound(res.depth) == res.error_bound);
    CHECK(truncation_error_bound(1) == std::numbers::pi);
}

TEST_CASE("successive truncations decay at the certified rate") {
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<std::size_t> length(1, 10);
    for (int trial = 0; trial < 50; ++trial) {
        std::string text;
        const std::size_t n = length(rng);
        for (std::size_t i = 0; i < n; ++i) text.push_back(coin(rng) ? '-' : '+');
        const SignPattern p = parse_pattern(text);
        for (std::size_t m = 1; m <= 40; ++m) {
            CHECK(std::abs(finite_radical(p, m) - finite_radical(p, m + 1)) <=
                  truncation_error_bound(m));
        }
    }
}

TEST_CASE("intermediates stay inside the real domain") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<std::size_t> length(1, 10);
    for (int trial = 0; trial < 50; ++trial) {
        std::string text;
        const std::size_t n = length(rng);
        for (std::size_t i = 0; i < n; ++i) text.push_back(coin(rng) ? '-' : '+');
        const SignPattern p = parse_pattern(text);
        const std::size_t depth = 32;
        // replay the innermost-first recurrence, checking each radicand
        double t = std::sqrt(2.0);
        for (std::size_t k = depth - 1; k >= 1; --k) {
            const double radicand = 2.0 + to_int(p.at_periodic(k)) * t;
            REQUIRE(radicand >= 0.0);
            REQUIRE(radicand <= 4.0);
            t = std::sqrt(radicand);
        }
        const double result = finite_radical(p, depth);
        CHECK(std::abs(result) <= 2.0);
        CHECK(result == to_int(p[0]) * t);
    }
}

TEST_CASE("depth and tolerance validation") {
    const SignPattern p = parse_pattern("+-");
    CHECK_THROWS_MATCHES(finite_radical(p, 0), std::invalid_argument,
                         Catch::Matchers::Message("depth must be positive"));
    CHECK_THROWS_MATCHES(sine_sum_truncation(p, 0), std::invalid_argument,
                         Catch::Matchers::Message("depth must be positive"));
    CHECK_THROWS_AS(limit_numeric(p, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(limit_numeric(p, 1.0), std::invalid_argument);
    CHECK_THROWS_MATCHES(limit_numeric(p, 1e-70), std::domain_error,
                         Catch::Matchers::Message("tolerance below certified precision"));
    // just above the certified floor still works
    CHECK_NOTHROW(limit_numeric(p, 1e-50));
}
