#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "radicals/sign_pattern.hpp"

namespace radicals {

/// A depth-m truncation together with its a-priori error certificate.
/// The bound pi * 2^{-(m-1)} comes from the geometric tail of the angle
/// series (at most 2^{-(m-1)}) scaled by the Lipschitz constant of
/// 2*sin(t*pi/4), then doubled for rounding slack.
struct TruncationResult {
    std::size_t depth;
    double value;
    double error_bound;
};

/// Certified bound on |truncation at depth m - true limit|.
inline double truncation_error_bound(std::size_t depth) {
    return std::numbers::pi * std::exp2(1.0 - static_cast<double>(depth));
}

/// Depth-m nested radical a_0*sqrt(2 + a_1*sqrt(2 + ... + a_{m-1}*sqrt(2))),
/// signs taken from the periodic extension of p. Evaluated innermost-first;
/// every intermediate stays in [0, 2], so each radicand 2 +- t stays in
/// [0, 4] and every square root is real.
inline double finite_radical(const SignPattern& p, std::size_t depth) {
    if (depth == 0) throw std::invalid_argument("depth must be positive");
    double t = std::sqrt(2.0);
    for (std::size_t k = depth - 1; k >= 1; --k) {
        t = std::sqrt(2.0 + to_int(p.at_periodic(k)) * t);
    }
    return to_int(p[0]) * t;
}

/// Sine-sum form of the same truncation:
///   2*sin( (sum_{k=0}^{m-1} (a_0*...*a_k) / 2^k) * pi/4 ).
/// Agrees with finite_radical to roundoff at every depth.
inline double sine_sum_truncation(const SignPattern& p, std::size_t depth) {
    if (depth == 0) throw std::invalid_argument("depth must be positive");
    double sum = 0.0;
    double scale = 1.0;
    int prod = 1;
    for (std::size_t k = 0; k < depth; ++k) {
        prod *= to_int(p.at_periodic(k));
        sum += prod * scale;
        scale *= 0.5;
    }
    return 2.0 * std::sin(sum * std::numbers::pi / 4.0);
}

// Beyond depth 200 the certified bound is far below anything double
// precision can honor, so the request is refused instead of looping.
constexpr std::size_t kMaxCertifiedDepth = 200;

/// Truncation at the smallest depth whose certified bound is <= tol.
inline TruncationResult limit_numeric(const SignPattern& p, double tol) {
    if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("tolerance must be in (0,1)");
    std::size_t depth = 1;
    double bound = std::numbers::pi;
    while (bound > tol) {
        ++depth;
        bound *= 0.5;
        if (depth > kMaxCertifiedDepth)
            throw std::domain_error("tolerance below certified precision");
    }
    return TruncationResult{depth, finite_radical(p, depth), bound};
}

} // namespace radicals
