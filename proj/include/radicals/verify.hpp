#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "radicals/chebyshev.hpp"
#include "radicals/closed_form.hpp"
#include "radicals/counting.hpp"
#include "radicals/numeric.hpp"
#include "radicals/sign_pattern.hpp"
#include "radicals/table.hpp"

namespace radicals {

// Pinned tolerances for the verification sweeps.
constexpr double kSineSumTolerance = 1e-12;
constexpr double kOracleTolerance = 1e-10;
constexpr double kConjugacyTolerance = 1e-8;
constexpr std::size_t kSineSumMaxDepth = 24;
constexpr std::size_t kConjugacyGridPoints = 1001;
constexpr std::size_t kMaxVerifyPeriod = 12;

struct CheckResult {
    std::size_t n;
    std::string name;
    bool passed;
    std::string detail;
};

/// Hooks for deliberately breaking a sweep from a test harness.
struct FaultInjection {
    bool corrupt_bijection_ell = false;
};

namespace detail {

inline CheckResult check_sine_sum_identity(std::size_t n) {
    double worst = 0.0;
    std::string at;
    for (const SignPattern& p : enumerate_patterns(n)) {
        for (std::size_t m = 1; m <= kSineSumMaxDepth; ++m) {
            const double diff = std::abs(finite_radical(p, m) - sine_sum_truncation(p, m));
            if (diff > worst) {
                worst = diff;
                at = format_pattern(p) + " at depth " + std::to_string(m);
            }
        }
    }
    const bool passed = worst < kSineSumTolerance;
    return {n, "sine_sum_identity", passed,
            "max |radical - sine sum| = " + format_double(worst) +
                (passed ? "" : " for " + at)};
}

inline CheckResult check_closedform_vs_numeric(std::size_t n) {
    double worst = 0.0;
    std::string at;
    for (const SignPattern& p : enumerate_patterns(n)) {
        const double exact = value_of(closed_form_of(p));
        const double numeric = limit_numeric(p, 1e-12).value;
        const double diff = std::abs(exact - numeric);
        if (diff > worst) {
            worst = diff;
            at = format_pattern(p);
        }
    }
    const bool passed = worst < kOracleTolerance;
    return {n, "closedform_vs_numeric", passed,
            "max |closed form - truncation| = " + format_double(worst) +
                (passed ? "" : " for " + at)};
}

inline CheckResult check_counting(std::size_t n) {
    const std::int64_t formula = count_minimal_period(static_cast<std::int64_t>(n));
    const std::int64_t brute = brute_force_count(static_cast<std::int64_t>(n));
    std::int64_t divisor_sum = 0;
    for (std::int64_t d : divisors(static_cast<std::int64_t>(n)))
        divisor_sum += count_minimal_period(d);
    const std::int64_t total = std::int64_t{1} << n;
    if (formula != brute)
        return {n, "counting", false,
                "formula " + std::to_string(formula) + " != brute force " + std::to_string(brute)};
    if (divisor_sum != total)
        return {n, "counting", false,
                "sum over divisors " + std::to_string(divisor_sum) + " != " + std::to_string(total)};
    return {n, "counting", true,
            "N(" + std::to_string(n) + ") = " + std::to_string(formula) +
                ", divisor sum = 2^" + std::to_string(n)};
}

inline CheckResult check_conjugacy(std::size_t n) {
    double worst = 0.0;
    for (std::size_t i = 0; i < kConjugacyGridPoints; ++i) {
        const double x = -2.0 + 4.0 * static_cast<double>(i) /
                                    static_cast<double>(kConjugacyGridPoints - 1);
        worst = std::max(worst, conjugacy_check(n, x));
    }
    return {n, "conjugacy", worst < kConjugacyTolerance,
            "max |P^n(x) - 2 T_{2^n}(x/2)| = " + format_double(worst)};
}

inline std::string label_list(const std::vector<FixedPointLabel>& labels) {
    std::string text;
    for (const FixedPointLabel& label : labels) {
        if (!text.empty()) text += ", ";
        text += std::string("(") + to_string(label.branch) + "," + std::to_string(label.ell) + ")";
    }
    return text;
}

inline CheckResult check_bijection(std::size_t n, const FaultInjection& fault) {
    std::vector<FixedPointLabel> claimed;
    claimed.reserve(std::size_t{1} << n);
    for (const SignPattern& p : enumerate_patterns(n))
        claimed.push_back(label_of(closed_form_of(p)));
    if (fault.corrupt_bijection_ell) claimed.front().ell += 1;
    const BijectionResult result = match_fixed_point_labels(n, claimed);
    if (result.ok)
        return {n, "bijection", true,
                std::to_string(result.mapping.size()) + " fixed points each claimed once"};
    return {n, "bijection", false,
            "unclaimed: [" + label_list(result.unclaimed) + "], overclaimed: [" +
                label_list(result.overclaimed) + "]"};
}

} // namespace detail

/// Runs the five per-period sweeps for every n up to n_max.
inline std::vector<CheckResult> run_verification(std::size_t n_max,
                                                 const FaultInjection& fault = {}) {
    if (n_max < 1 || n_max > kMaxVerifyPeriod)
        throw std::invalid_argument("verification limited to n <= 12");
    std::vector<CheckResult> checks;
    checks.reserve(5 * n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        checks.push_back(detail::check_sine_sum_identity(n));
        checks.push_back(detail::check_closedform_vs_numeric(n));
        checks.push_back(detail::check_counting(n));
        checks.push_back(detail::check_conjugacy(n));
        checks.push_back(detail::check_bijection(n, fault));
    }
    return checks;
}

inline bool all_passed(const std::vector<CheckResult>& checks) {
    for (const CheckResult& check : checks)
        if (!check.passed) return false;
    return true;
}

} // namespace radicals
