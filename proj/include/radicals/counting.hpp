#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "radicals/sign_pattern.hpp"

namespace radicals {

/// All divisors of n, ascending.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<std::int64_t> divs;
    for (std::int64_t i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        divs.push_back(i);
        if (i != n / i) divs.push_back(n / i);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Moebius function: +1 / -1 for squarefree n with an even / odd number
/// of prime factors, 0 otherwise. Trial division; fine for small n.
inline int mobius(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    int result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

// 2^62 is the largest power of two a signed 64-bit integer can hold
// alongside the inversion sum's smaller terms.
constexpr std::int64_t kMaxCountingPeriod = 62;

/// Number of sign patterns whose minimal period is exactly n, via
/// Moebius inversion of sum_{d|n} N(d) = 2^n:
///   N(n) = sum_{d|n} mu(n/d) * 2^d.
/// Exact 64-bit integer arithmetic; n is capped at 62.
inline std::int64_t count_minimal_period(std::int64_t n) {
    if (n < 1 || n > kMaxCountingPeriod) throw std::invalid_argument("period too large");
    std::int64_t total = 0;
    for (std::int64_t d : divisors(n)) {
        total += mobius(n / d) * (std::int64_t{1} << d);
    }
    return total;
}

constexpr std::int64_t kMaxBruteForcePeriod = 20;

/// Independent oracle: enumerate all 2^n patterns and count those whose
/// minimal period equals n. Exponential; capped at n = 20.
inline std::int64_t brute_force_count(std::int64_t n) {
    if (n < 1 || n > kMaxBruteForcePeriod)
        throw std::invalid_argument("period too large for brute force");
    std::int64_t count = 0;
    for (const SignPattern& p : enumerate_patterns(static_cast<std::size_t>(n))) {
        if (minimal_period(p) == static_cast<std::size_t>(n)) ++count;
    }
    return count;
}

} // namespace radicals
