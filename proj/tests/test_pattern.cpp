#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>

#include "radicals/sign_pattern.hpp"

using namespace radicals;

TEST_CASE("parse_pattern maps characters to signs in order") {
    const SignPattern single = parse_pattern("+");
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Sign::plus);

    const SignPattern pair = parse_pattern("+-");
    REQUIRE(pair.size() == 2);
    CHECK(pair[0] == Sign::plus);
    CHECK(pair[1] == Sign::minus);
}

TEST_CASE("parse_pattern rejects bad input") {
    CHECK_THROWS_MATCHES(parse_pattern(""), std::invalid_argument,
                         Catch::Matchers::Message("empty pattern"));
    CHECK_THROWS_MATCHES(parse_pattern("+x"), std::invalid_argument,
                         Catch::Matchers::Message("invalid sign character at index 1"));
    CHECK_THROWS_MATCHES(parse_pattern("--0-"), std::invalid_argument,
                         Catch::Matchers::Message("invalid sign character at index 2"));
}

TEST_CASE("format_pattern inverts parse_pattern") {
    CHECK(format_pattern(parse_pattern("+-")) == "+-");
    CHECK(format_pattern(parse_pattern("---")) == "---");
    CHECK(format_pattern(parse_pattern("+")) == "+");
}

TEST_CASE("parity is the product of all signs") {
    CHECK(parity(parse_pattern("+-")) == Sign::minus);
    CHECK(parity(parse_pattern("--")) == Sign::plus);
    CHECK(parity(parse_pattern("++++")) == Sign::plus);
}

TEST_CASE("prefix products") {
    const auto products = prefix_products(parse_pattern("+-+"));
    REQUIRE(products.size() == 3);
    CHECK(products[0] == Sign::plus);
    CHECK(products[1] == Sign::minus);
    CHECK(products[2] == Sign::minus);

    const auto pair = prefix_products(parse_pattern("--"));
    CHECK(pair == std::vector<Sign>{Sign::minus, Sign::plus});
    CHECK(prefix_products(parse_pattern("+++")) ==
          std::vector<Sign>{Sign::plus, Sign::plus, Sign::plus});
}

TEST_CASE("minimal period") {
    CHECK(minimal_period(parse_pattern("++++")) == 1);
    CHECK(minimal_period(parse_pattern("+-+-")) == 2);
    CHECK(minimal_period(parse_pattern("+-+")) == 3);
    CHECK(minimal_period(parse_pattern("+--+--")) == 3);
}

TEST_CASE("enumeration order is canonical") {
    const auto one = enumerate_patterns(1);
    REQUIRE(one.size() == 2);
    CHECK(format_pattern(one[0]) == "+");
    CHECK(format_pattern(one[1]) == "-");

    const auto two = enumerate_patterns(2);
    REQUIRE(two.size() == 4);
    CHECK(format_pattern(two[0]) == "++");
    CHECK(format_pattern(two[1]) == "+-");
    CHECK(format_pattern(two[2]) == "-+");
    CHECK(format_pattern(two[3]) == "--");
}

TEST_CASE("enumeration bounds") {
    CHECK_THROWS_AS(enumerate_patterns(0), std::invalid_argument);
    CHECK_THROWS_MATCHES(enumerate_patterns(31), std::invalid_argument,
                         Catch::Matchers::Message("period too large"));
}

TEST_CASE("round trip holds exhaustively for short patterns") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const SignPattern& p : enumerate_patterns(n)) {
            CHECK(parse_pattern(format_pattern(p)) == p);
        }
    }
}

TEST_CASE("round trip holds for sampled long patterns") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<std::size_t> length(13, 20);
    for (int trial = 0; trial < 200; ++trial) {
        std::string text;
        const std::size_t n = length(rng);
        for (std::size_t i = 0; i < n; ++i) text.push_back(coin(rng) ? '-' : '+');
        CHECK(format_pattern(parse_pattern(text)) == text);
    }
}

TEST_CASE("prefix products end at the parity") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const SignPattern& p : enumerate_patterns(n)) {
            CHECK(prefix_products(p).back() == parity(p));
        }
    }
}

TEST_CASE("minimal period divides the length") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const SignPattern& p : enumerate_patterns(n)) {
            CHECK(n % minimal_period(p) == 0);
        }
    }
}

TEST_CASE("enumeration yields 2^n distinct patterns") {
    for (std::size_t n = 1; n <= 16; ++n) {
        const auto patterns = enumerate_patterns(n);
        REQUIRE(patterns.size() == (std::size_t{1} << n));
        std::set<std::string> seen;
        for (const SignPattern& p : patterns) seen.insert(format_pattern(p));
        CHECK(seen.size() == patterns.size());
    }
}

TEST_CASE("periodic indexing wraps") {
    const SignPattern p = parse_pattern("+-+");
    CHECK(p.at_periodic(0) == Sign::plus);
    CHECK(p.at_periodic(4) == Sign::minus);
    CHECK(p.at_periodic(3 * 1000) == Sign::plus);
}
