#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "radicals/chebyshev.hpp"
#include "radicals/closed_form.hpp"
#include "radicals/counting.hpp"
#include "radicals/json_io.hpp"
#include "radicals/numeric.hpp"
#include "radicals/table.hpp"
#include "radicals/verify.hpp"

namespace radicals {

enum class OutputFormat { pretty, csv, json };

namespace cli_detail {

// Exit codes: 0 success, 1 verification failure, 2 usage/parse error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

constexpr const char* kUsage =
    "usage: radicals <command> [options]\n"
    "\n"
    "commands:\n"
    "  eval PATTERN [--tol T] [--format F]   evaluate one radical exactly and numerically\n"
    "  table N [--format F]                  all closed forms for period N (1..16)\n"
    "  count NMAX [--format F]               pattern counts by minimal period (1..62)\n"
    "  fixed-points N [--format F]           fixed points of the N-fold x^2 - 2 (1..16)\n"
    "  verify NMAX                           verification sweeps for n = 1..NMAX (1..12)\n"
    "\n"
    "options:\n"
    "  --tol T       certified numeric tolerance in (0,1), default 1e-12\n"
    "  --format F    pretty (default), csv, or json\n"
    "  --help        show this message\n"
    "\n"
    "PATTERN is a nonempty string of '+' and '-' signs, the repeating block\n"
    "of the radical, e.g. \"+-+\" for sqrt(2 - sqrt(2 + sqrt(2 - ...))).\n";

inline void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size())
                out << std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out << '\n';
    }
}

constexpr const char* kTableHeader = "pattern,parity,alpha,ell,denominator,sin_form,cos_form,value";

inline void emit_table_row_csv(std::ostream& out, const TableRow& row) {
    out << row.pattern << ',' << row.parity << ',' << row.alpha << ',' << row.ell << ','
        << row.denominator << ',' << row.sin_form << ',' << row.cos_form << ','
        << format_double(row.value);
}

inline std::vector<std::string> table_row_cells(const TableRow& row) {
    return {row.pattern,
            std::to_string(row.parity),
            row.alpha,
            std::to_string(row.ell),
            std::to_string(row.denominator),
            row.sin_form,
            row.cos_form,
            format_double(row.value)};
}

} // namespace cli_detail

inline int cmd_eval(const std::string& text, double tol, OutputFormat fmt, std::ostream& out) {
    using namespace cli_detail;
    const SignPattern p = parse_pattern(text);
    const TableRow row = make_table_row(p);
    const TruncationResult numeric = limit_numeric(p, tol);
    const double discrepancy = std::abs(row.value - numeric.value);
    const int status = discrepancy < std::max(tol, 1e-10) ? kExitOk : kExitVerifyFailure;

    switch (fmt) {
    case OutputFormat::csv:
        out << kTableHeader << ",numeric_value,numeric_depth,error_bound,discrepancy\n";
        emit_table_row_csv(out, row);
        out << ',' << format_double(numeric.value) << ',' << numeric.depth << ','
            << format_double(numeric.error_bound) << ',' << format_double(discrepancy) << '\n';
        break;
    case OutputFormat::json: {
        ordered_json doc;
        ordered_json entry = to_json(row);
        entry["angle"] = angle_text(row.ell, row.denominator);
        entry["numeric_value"] = numeric.value;
        entry["numeric_depth"] = numeric.depth;
        entry["error_bound"] = numeric.error_bound;
        entry["discrepancy"] = discrepancy;
        doc["rows"] = ordered_json::array({std::move(entry)});
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::pretty:
        print_aligned(out,
                      {{"pattern", row.pattern},
                       {"period", std::to_string(p.size())},
                       {"parity", std::to_string(row.parity)},
                       {"alpha", row.alpha},
                       {"closed form", "2*" + row.cos_form + "   (ell = " + std::to_string(row.ell) +
                                           ", denominator = " + std::to_string(row.denominator) + ")"},
                       {"sin form", "2*" + row.sin_form},
                       {"exact value", format_double(row.value)},
                       {"numeric value", format_double(numeric.value) + "   (depth " +
                                             std::to_string(numeric.depth) + ", error bound " +
                                             format_double(numeric.error_bound) + ")"},
                       {"discrepancy", format_double(discrepancy)}});
        break;
    }
    return status;
}

inline int cmd_table(std::size_t n, OutputFormat fmt, std::ostream& out) {
    using namespace cli_detail;
    const std::vector<TableRow> rows = make_table(n);
    switch (fmt) {
    case OutputFormat::csv:
        out << kTableHeader << '\n';
        for (const TableRow& row : rows) {
            emit_table_row_csv(out, row);
            out << '\n';
        }
        break;
    case OutputFormat::json: {
        ordered_json doc;
        doc["rows"] = ordered_json::array();
        for (const TableRow& row : rows) doc["rows"].push_back(to_json(row));
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::pretty: {
        std::vector<std::vector<std::string>> cells = {{"pattern", "parity", "alpha", "ell",
                                                        "denominator", "sin_form", "cos_form",
                                                        "value"}};
        for (const TableRow& row : rows) cells.push_back(table_row_cells(row));
        print_aligned(out, cells);
        break;
    }
    }
    return cli_detail::kExitOk;
}

inline int cmd_count(std::int64_t n_max, OutputFormat fmt, std::ostream& out) {
    using namespace cli_detail;
    struct CountRow {
        std::int64_t n;
        std::int64_t count;
        std::optional<std::int64_t> brute;
    };
    std::vector<CountRow> rows;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        CountRow row{n, count_minimal_period(n), std::nullopt};
        if (n <= 16) row.brute = brute_force_count(n);
        rows.push_back(row);
    }
    switch (fmt) {
    case OutputFormat::csv:
        out << "n,count,brute_force,match\n";
        for (const CountRow& row : rows) {
            out << row.n << ',' << row.count << ',';
            if (row.brute) out << *row.brute;
            out << ',';
            if (row.brute) out << (*row.brute == row.count ? "true" : "false");
            out << '\n';
        }
        break;
    case OutputFormat::json: {
        ordered_json doc;
        doc["rows"] = ordered_json::array();
        for (const CountRow& row : rows) {
            ordered_json entry{{"n", row.n}, {"count", row.count}};
            entry["brute_force"] = row.brute ? ordered_json(*row.brute) : ordered_json(nullptr);
            entry["match"] = row.brute ? ordered_json(*row.brute == row.count) : ordered_json(nullptr);
            doc["rows"].push_back(std::move(entry));
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::pretty: {
        std::vector<std::vector<std::string>> cells = {{"n", "count", "brute_force", "match"}};
        for (const CountRow& row : rows) {
            cells.push_back({std::to_string(row.n), std::to_string(row.count),
                             row.brute ? std::to_string(*row.brute) : "-",
                             row.brute ? (*row.brute == row.count ? "yes" : "NO") : "-"});
        }
        print_aligned(out, cells);
        break;
    }
    }
    return cli_detail::kExitOk;
}

inline int cmd_fixed_points(std::size_t n, OutputFormat fmt, std::ostream& out) {
    using namespace cli_detail;
    const FixedPointSet set = fixed_points(n);
    const auto residual_of = [&](const FixedPoint& fp) {
        return std::abs(p_iterate(fp.value(), n) - fp.value());
    };
    switch (fmt) {
    case OutputFormat::csv:
        out << "branch,ell,angle,value,residual\n";
        for (const FixedPoint& fp : set.points) {
            out << to_string(fp.branch) << ',' << fp.ell << ','
                << angle_text(fp.ell, fp.denominator()) << ',' << format_double(fp.value()) << ','
                << format_double(residual_of(fp)) << '\n';
        }
        break;
    case OutputFormat::json: {
        ordered_json doc;
        doc["rows"] = ordered_json::array();
        for (const FixedPoint& fp : set.points) {
            doc["rows"].push_back(ordered_json{{"branch", to_string(fp.branch)},
                                               {"ell", fp.ell},
                                               {"angle", angle_text(fp.ell, fp.denominator())},
                                               {"value", fp.value()},
                                               {"residual", residual_of(fp)}});
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::pretty: {
        std::vector<std::vector<std::string>> cells = {{"branch", "ell", "angle", "value",
                                                        "residual"}};
        for (const FixedPoint& fp : set.points) {
            cells.push_back({to_string(fp.branch), std::to_string(fp.ell),
                             angle_text(fp.ell, fp.denominator()), format_double(fp.value()),
                             format_double(residual_of(fp))});
        }
        print_aligned(out, cells);
        break;
    }
    }
    return cli_detail::kExitOk;
}

/// Prints one pass/fail line per check and maps the outcome to the
/// exit-code contract. Split from cmd_verify so tests can feed reports
/// produced under fault injection.
inline int print_verification(const std::vector<CheckResult>& checks, std::ostream& out) {
    std::size_t passed = 0;
    for (const CheckResult& check : checks) {
        out << "n=" << check.n << "  " << std::left << std::setw(24) << check.name
            << (check.passed ? "PASS  " : "FAIL  ") << check.detail << '\n';
        if (check.passed) ++passed;
    }
    out << "verify: " << passed << "/" << checks.size() << " checks passed\n";
    return passed == checks.size() ? cli_detail::kExitOk : cli_detail::kExitVerifyFailure;
}

inline int cmd_verify(std::size_t n_max, std::ostream& out, const FaultInjection& fault = {}) {
    return print_verification(run_verification(n_max, fault), out);
}

namespace cli_detail {

// Sign patterns ("+", "--", "-+-") look exactly like option syntax, so
// option parsers cannot be trusted with them. Any token made purely of
// '+' and '-' is a positional, no matter how it starts.
inline bool is_sign_token(std::string_view token) {
    if (token.empty()) return false;
    for (char c : token)
        if (c != '+' && c != '-') return false;
    return true;
}

struct ParsedArgs {
    std::string command;
    std::vector<std::string> positionals;
    std::string format = "pretty";
    double tol = 1e-12;
    bool help = false;
    std::string error;  // nonempty on parse failure
};

inline bool parse_number(const std::string& text, double& value) {
    try {
        std::size_t used = 0;
        value = std::stod(text, &used);
        return used == text.size();
    } catch (const std::exception&) {
        return false;
    }
}

inline bool parse_integer(const std::string& text, std::int64_t& value) {
    try {
        std::size_t used = 0;
        value = std::stoll(text, &used);
        return used == text.size();
    } catch (const std::exception&) {
        return false;
    }
}

inline ParsedArgs parse_args(const std::vector<std::string>& args) {
    ParsedArgs parsed;
    if (args.empty()) {
        parsed.error = "missing command";
        return parsed;
    }
    if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        parsed.help = true;
        return parsed;
    }
    parsed.command = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& token = args[i];
        if (is_sign_token(token) || token.rfind("--", 0) != 0) {
            parsed.positionals.push_back(token);
            continue;
        }
        if (token == "--help") {
            parsed.help = true;
            return parsed;
        }
        std::string name = token;
        std::string value;
        bool has_value = false;
        if (const std::size_t eq = token.find('='); eq != std::string::npos) {
            name = token.substr(0, eq);
            value = token.substr(eq + 1);
            has_value = true;
        }
        if (name != "--tol" && name != "--format") {
            parsed.error = "unknown option: " + name;
            return parsed;
        }
        if (!has_value) {
            if (i + 1 >= args.size()) {
                parsed.error = name + " requires a value";
                return parsed;
            }
            value = args[++i];
        }
        if (name == "--tol") {
            if (!parse_number(value, parsed.tol)) {
                parsed.error = "invalid tolerance: " + value;
                return parsed;
            }
        } else {
            if (value != "pretty" && value != "csv" && value != "json") {
                parsed.error = "invalid format: " + value + " (expected pretty, csv, or json)";
                return parsed;
            }
            parsed.format = value;
        }
    }
    return parsed;
}

inline bool single_integer_arg(const ParsedArgs& parsed, std::int64_t lo, std::int64_t hi,
                               std::int64_t& value, std::string& error) {
    if (parsed.positionals.size() != 1) {
        error = parsed.command + ": expected exactly one argument";
        return false;
    }
    if (!parse_integer(parsed.positionals[0], value) || value < lo || value > hi) {
        error = parsed.command + ": argument must be an integer in [" + std::to_string(lo) +
                ", " + std::to_string(hi) + "]";
        return false;
    }
    return true;
}

} // namespace cli_detail

/// Front end used by main() and by the tests; args exclude the program
/// name. Returns the process exit code: 0 success, 1 verification
/// failure, 2 usage or parse error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    const ParsedArgs parsed = parse_args(args);
    if (parsed.help) {
        out << kUsage;
        return kExitOk;
    }
    if (!parsed.error.empty()) {
        err << parsed.error << '\n' << kUsage;
        return kExitUsage;
    }

    const OutputFormat fmt = parsed.format == "csv"    ? OutputFormat::csv
                             : parsed.format == "json" ? OutputFormat::json
                                                       : OutputFormat::pretty;
    try {
        std::string error;
        std::int64_t n = 0;
        if (parsed.command == "eval") {
            if (parsed.positionals.size() != 1) {
                err << "eval: expected exactly one pattern\n" << kUsage;
                return kExitUsage;
            }
            return cmd_eval(parsed.positionals[0], parsed.tol, fmt, out);
        }
        if (parsed.command == "table") {
            if (!single_integer_arg(parsed, 1, 16, n, error)) {
                err << error << '\n';
                return kExitUsage;
            }
            return cmd_table(static_cast<std::size_t>(n), fmt, out);
        }
        if (parsed.command == "count") {
            if (!single_integer_arg(parsed, 1, 62, n, error)) {
                err << error << '\n';
                return kExitUsage;
            }
            return cmd_count(n, fmt, out);
        }
        if (parsed.command == "fixed-points") {
            if (!single_integer_arg(parsed, 1, 16, n, error)) {
                err << error << '\n';
                return kExitUsage;
            }
            return cmd_fixed_points(static_cast<std::size_t>(n), fmt, out);
        }
        if (parsed.command == "verify") {
            if (!single_integer_arg(parsed, 1, 12, n, error)) {
                err << error << '\n';
                return kExitUsage;
            }
            return cmd_verify(static_cast<std::size_t>(n), out);
        }
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    err << "unknown command: " << parsed.command << '\n' << kUsage;
    return kExitUsage;
}

} // namespace radicals
