#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "radicals/closed_form.hpp"
#include "radicals/sign_pattern.hpp"

namespace radicals {

constexpr std::int64_t kMaxChebDegree = std::int64_t{1} << 20;

/// First-kind Chebyshev polynomial T_N(x) = cos(N*arccos x) on [-1, 1].
/// The trigonometric form stays uniformly accurate near |x| = 1 where
/// the three-term recurrence degrades for large N.
inline double cheb_t(std::int64_t degree, double x) {
    if (degree < 0 || degree > kMaxChebDegree)
        throw std::invalid_argument("degree out of range");
    if (std::abs(x) > 1.0) throw std::invalid_argument("argument outside [-1,1]");
    return std::cos(static_cast<double>(degree) * std::acos(x));
}

constexpr std::int64_t kMaxChebRecurrenceDegree = 64;

/// Same polynomial via T_{k+1} = 2x*T_k - T_{k-1}; kept as an
/// independent cross-check of cheb_t for small degrees.
inline double cheb_t_recurrence(std::int64_t degree, double x) {
    if (degree < 0 || degree > kMaxChebRecurrenceDegree)
        throw std::invalid_argument("degree out of range for recurrence");
    if (std::abs(x) > 1.0) throw std::invalid_argument("argument outside [-1,1]");
    if (degree == 0) return 1.0;
    double prev = 1.0;
    double curr = x;
    for (std::int64_t k = 1; k < degree; ++k) {
        const double next = 2.0 * x * curr - prev;
        prev = std::exchange(curr, next);
    }
    return curr;
}

/// The quadratic map x^2 - 2; doubles the angle of x = 2*cos(theta).
inline double p_map(double x) noexcept { return x * x - 2.0; }

// Angle errors double per application, so long iterations are refused
// rather than returned with silently useless accuracy.
constexpr std::size_t kMaxIterations = 40;

/// n-fold composition of p_map, restricted to the invariant interval.
inline double p_iterate(double x, std::size_t n) {
    if (std::abs(x) > 2.0) throw std::invalid_argument("outside conjugacy domain");
    if (n < 1) throw std::invalid_argument("iteration count must be positive");
    if (n > kMaxIterations) throw std::invalid_argument("iteration count too large");
    for (std::size_t i = 0; i < n; ++i) x = p_map(x);
    return x;
}

/// Which family of fixed-point angles: denominator 2^n - 1 (minus)
/// or 2^n + 1 (plus).
enum class Branch : std::uint8_t { minus, plus };

constexpr const char* to_string(Branch b) noexcept {
    return b == Branch::minus ? "minus" : "plus";
}

/// One fixed point of the n-fold iterate of x^2 - 2, as the exact
/// angle fraction theta = 2*pi*ell / (2^n -+ 1), value x = 2*cos(theta).
struct FixedPoint {
    Branch branch;
    std::int64_t ell;
    std::size_t n;

    std::int64_t denominator() const noexcept {
        return (std::int64_t{1} << n) + (branch == Branch::minus ? -1 : +1);
    }
    double angle() const noexcept {
        return 2.0 * std::numbers::pi *
               (static_cast<double>(ell) / static_cast<double>(denominator()));
    }
    double value() const noexcept { return 2.0 * std::cos(angle()); }
};

struct FixedPointSet {
    std::size_t n;
    std::vector<FixedPoint> points;  // exactly 2^n, minus branch first
};

constexpr std::size_t kMaxFixedPointPeriod = 20;

/// All 2^n fixed points of the n-fold iterate: branch minus with
/// ell = 0 .. 2^{n-1}-1, branch plus with ell = 1 .. 2^{n-1}.
inline FixedPointSet fixed_points(std::size_t n) {
    if (n < 1) throw std::invalid_argument("period must be positive");
    if (n > kMaxFixedPointPeriod) throw std::invalid_argument("too many fixed points");
    const std::int64_t half = std::int64_t{1} << (n - 1);
    FixedPointSet set{n, {}};
    set.points.reserve(static_cast<std::size_t>(2 * half));
    for (std::int64_t ell = 0; ell < half; ++ell)
        set.points.push_back(FixedPoint{Branch::minus, ell, n});
    for (std::int64_t ell = 1; ell <= half; ++ell)
        set.points.push_back(FixedPoint{Branch::plus, ell, n});
    return set;
}

constexpr std::size_t kMaxConjugacyPeriod = 12;

/// Residual |P^n(x) - 2*T_{2^n}(x/2)| of the conjugacy identity.
inline double conjugacy_check(std::size_t n, double x) {
    if (n < 1 || n > kMaxConjugacyPeriod)
        throw std::invalid_argument("conjugacy check limited to n <= 12");
    if (std::abs(x) > 2.0) throw std::invalid_argument("outside conjugacy domain");
    return std::abs(p_iterate(x, n) - 2.0 * cheb_t(std::int64_t{1} << n, x / 2.0));
}

/// Exact integer identity of a fixed point: which branch, which ell.
/// Even parity lands on denominator 2^n - 1, odd parity on 2^n + 1.
struct FixedPointLabel {
    Branch branch;
    std::int64_t ell;

    friend auto operator<=>(const FixedPointLabel&, const FixedPointLabel&) = default;
};

inline FixedPointLabel label_of(const ClosedForm& cf) noexcept {
    return FixedPointLabel{cf.parity == Sign::plus ? Branch::minus : Branch::plus, cf.ell};
}

/// Outcome of matching the 2^n pattern limits against the 2^n fixed
/// points by exact label. `mapping` doubles as the empirical table of
/// which pattern claims which fixed point.
struct BijectionResult {
    std::size_t n;
    bool ok;
    std::vector<std::pair<SignPattern, FixedPointLabel>> mapping;
    std::vector<FixedPointLabel> unclaimed;    // fixed points no pattern reached
    std::vector<FixedPointLabel> overclaimed;  // claimed twice or out of range
};

constexpr std::size_t kMaxBijectionPeriod = 16;

/// Core of the bijection check, split out so a test harness can feed
/// deliberately corrupted labels. `claimed[i]` must belong to the i-th
/// pattern in canonical enumeration order.
inline BijectionResult match_fixed_point_labels(std::size_t n,
                                                const std::vector<FixedPointLabel>& claimed) {
    if (n < 1) throw std::invalid_argument("period must be positive");
    if (n > kMaxBijectionPeriod)
        throw std::invalid_argument("period too large for exhaustive check");
    const std::int64_t half = std::int64_t{1} << (n - 1);
    if (claimed.size() != static_cast<std::size_t>(2 * half))
        throw std::invalid_argument("label count must be 2^n");

    BijectionResult result{n, true, {}, {}, {}};
    const std::vector<SignPattern> patterns = enumerate_patterns(n);

    // claim counts per label; valid minus ells are 0..half-1, plus 1..half
    std::vector<int> minus_claims(static_cast<std::size_t>(half), 0);
    std::vector<int> plus_claims(static_cast<std::size_t>(half) + 1, 0);
    result.mapping.reserve(claimed.size());
    for (std::size_t i = 0; i < claimed.size(); ++i) {
        const FixedPointLabel label = claimed[i];
        result.mapping.emplace_back(patterns[i], label);
        const bool in_range = label.branch == Branch::minus
                                  ? (label.ell >= 0 && label.ell < half)
                                  : (label.ell >= 1 && label.ell <= half);
        if (!in_range) {
            result.overclaimed.push_back(label);
            continue;
        }
        int& count = label.branch == Branch::minus
                         ? minus_claims[static_cast<std::size_t>(label.ell)]
                         : plus_claims[static_cast<std::size_t>(label.ell)];
        if (++count > 1) result.overclaimed.push_back(label);
    }
    for (std::int64_t ell = 0; ell < half; ++ell) {
        if (minus_claims[static_cast<std::size_t>(ell)] == 0)
            result.unclaimed.push_back(FixedPointLabel{Branch::minus, ell});
    }
    for (std::int64_t ell = 1; ell <= half; ++ell) {
        if (plus_claims[static_cast<std::size_t>(ell)] == 0)
            result.unclaimed.push_back(FixedPointLabel{Branch::plus, ell});
    }
    result.ok = result.unclaimed.empty() && result.overclaimed.empty();
    return result;
}

/// Verifies that the closed-form limits of all 2^n period-n patterns
/// claim each fixed point of the n-fold iterate exactly once.
inline BijectionResult bijection_check(std::size_t n) {
    if (n < 1) throw std::invalid_argument("period must be positive");
    if (n > kMaxBijectionPeriod)
        throw std::invalid_argument("period too large for exhaustive check");
    std::vector<FixedPointLabel> claimed;
    claimed.reserve(std::size_t{1} << n);
    for (const SignPattern& p : enumerate_patterns(n))
        claimed.push_back(label_of(closed_form_of(p)));
    return match_fixed_point_labels(n, claimed);
}

} // namespace radicals
