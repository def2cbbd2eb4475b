#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "radicals/closed_form.hpp"
#include "radicals/rational.hpp"
#include "radicals/sign_pattern.hpp"

namespace radicals {

/// 15 significant digits, same format everywhere; deterministic output
/// matters more here than shortest round-trip.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

/// "num*pi/den" as compact text: "0", "pi/2", "-3pi/10", "6pi/9".
/// The fraction is printed exactly as given, unreduced.
inline std::string pi_fraction_text(std::int64_t num, std::int64_t den) {
    if (num == 0) return "0";
    std::string text = num < 0 ? "-" : "";
    const std::int64_t mag = num < 0 ? -num : num;
    if (mag != 1) text += std::to_string(mag);
    text += "pi/" + std::to_string(den);
    return text;
}

/// "2*pi*ell/denominator" with the numbers substituted.
inline std::string angle_text(std::int64_t ell, std::int64_t denominator) {
    return "2*pi*" + std::to_string(ell) + "/" + std::to_string(denominator);
}

/// One pattern's worth of results: both trigonometric forms plus the
/// exact angle data behind them.
struct TableRow {
    std::string pattern;
    int parity;
    std::string alpha;        // exact fraction text
    std::int64_t ell;
    std::int64_t denominator; // 2^n - P
    std::string sin_form;     // sin(alpha*pi/4), argument reduced
    std::string cos_form;     // cos(2*ell*pi/denominator), unreduced
    double value;
};

inline TableRow make_table_row(const SignPattern& p) {
    const ClosedForm cf = closed_form_of(p);
    const ExactRational alpha = alpha_exact(p);
    const ExactRational sin_arg = alpha / ExactRational(4);
    return TableRow{
        .pattern = format_pattern(p),
        .parity = to_int(cf.parity),
        .alpha = alpha.str(),
        .ell = cf.ell,
        .denominator = cf.denominator,
        .sin_form = "sin(" + pi_fraction_text(sin_arg.num(), sin_arg.den()) + ")",
        .cos_form = "cos(" + pi_fraction_text(2 * cf.ell, cf.denominator) + ")",
        .value = value_of(cf),
    };
}

constexpr std::size_t kMaxTablePeriod = 16;

/// All 2^n rows in canonical pattern enumeration order.
inline std::vector<TableRow> make_table(std::size_t n) {
    if (n < 1) throw std::invalid_argument("period must be positive");
    if (n > kMaxTablePeriod) throw std::invalid_argument("period too large for table");
    std::vector<TableRow> rows;
    rows.reserve(std::size_t{1} << n);
    for (const SignPattern& p : enumerate_patterns(n)) rows.push_back(make_table_row(p));
    return rows;
}

} // namespace radicals
