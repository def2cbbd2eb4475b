#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "radicals/rational.hpp"
#include "radicals/sign_pattern.hpp"

namespace radicals {

// Largest period for which 2^n +- 1 and the alpha numerator 2*S still
// fit in a signed 64-bit integer.
constexpr std::size_t kMaxExactPeriod = 62;

/// Exact limit of the periodic radical with period n and parity P,
/// expressed as the angle index of x = 2*cos(2*pi*ell / (2^n - P)).
/// ell/denominator is deliberately kept unreduced; reduction would
/// destroy the one-to-one pairing with the fixed-point labels.
struct ClosedForm {
    std::size_t n;             // period length
    Sign parity;               // P
    std::int64_t ell;          // angle index, range depends on parity
    std::int64_t denominator;  // 2^n - P

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

namespace detail {
inline void require_exact_period(const SignPattern& p) {
    if (p.size() > kMaxExactPeriod)
        throw std::invalid_argument("period too large for exact arithmetic");
}
} // namespace detail

/// The limit as x = 2*sin(alpha*pi/4) with alpha = 2*S / (2^n - P),
/// where S = sum_{m=0}^{n-1} P_m * 2^{n-1-m} over the prefix products.
/// Always in (-2, 2], and exactly 2 only for the all-plus pattern.
inline ExactRational alpha_exact(const SignPattern& p) {
    detail::require_exact_period(p);
    const std::size_t n = p.size();
    std::int64_t s = 0;
    Sign prod = Sign::plus;
    for (std::size_t m = 0; m < n; ++m) {
        prod = prod * p[m];
        s += to_int(prod) * (std::int64_t{1} << (n - 1 - m));
    }
    const std::int64_t den = (std::int64_t{1} << n) - to_int(parity(p));
    return ExactRational(2 * s, den);
}

/// The integer with binary digits Q_0 Q_1 ... Q_{n-2} (Q_0 most
/// significant), where Q_m = (1 + P_m) / 2. Zero for n = 1.
inline std::int64_t q_digits(const SignPattern& p) {
    detail::require_exact_period(p);
    std::int64_t q = 0;
    Sign prod = Sign::plus;
    for (std::size_t m = 0; m + 1 < p.size(); ++m) {
        prod = prod * p[m];
        q = (q << 1) | (prod == Sign::plus ? 1 : 0);
    }
    return q;
}

/// Integer-only evaluation of the angle index: 2*ell = 2^n - P - 1 - 2*Q.
/// The right-hand side is always even, so the division is exact.
inline ClosedForm closed_form_of(const SignPattern& p) {
    detail::require_exact_period(p);
    const std::size_t n = p.size();
    const Sign par = parity(p);
    const std::int64_t two_ell =
        (std::int64_t{1} << n) - to_int(par) - 1 - 2 * q_digits(p);
    assert(two_ell % 2 == 0);
    return ClosedForm{
        .n = n,
        .parity = par,
        .ell = two_ell / 2,
        .denominator = (std::int64_t{1} << n) - to_int(par),
    };
}

/// Floating-point value 2*cos(2*pi*ell / denominator), in [-2, 2].
inline double value_of(const ClosedForm& cf) {
    const double angle = 2.0 * std::numbers::pi *
                         (static_cast<double>(cf.ell) / static_cast<double>(cf.denominator));
    return 2.0 * std::cos(angle);
}

/// beta = 1 - alpha/2, so that x = 2*cos(beta*pi/2). Equals the
/// unreduced 4*ell / (2^n - P). For the single extremal pattern at
/// n = 62 the reduced numerator needs 2^63 and this throws
/// std::overflow_error; every other pattern up to the cap fits.
inline ExactRational beta_of(const SignPattern& p) {
    return ExactRational(1) - alpha_exact(p) / ExactRational(2);
}

} // namespace radicals
