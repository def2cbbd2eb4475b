#pragma once

#include "json.hpp"

#include "radicals/chebyshev.hpp"
#include "radicals/closed_form.hpp"
#include "radicals/table.hpp"

namespace radicals {

using ordered_json = nlohmann::ordered_json;

/// Exact fields as integers; only "value" is floating point.
inline ordered_json to_json(const ClosedForm& cf) {
    return ordered_json{
        {"n", cf.n},
        {"parity", to_int(cf.parity)},
        {"ell", cf.ell},
        {"denominator", cf.denominator},
        {"value", value_of(cf)},
        {"angle", angle_text(cf.ell, cf.denominator)},
    };
}

inline ordered_json to_json(const FixedPointSet& set) {
    ordered_json points = ordered_json::array();
    for (const FixedPoint& fp : set.points) {
        points.push_back(ordered_json{
            {"branch", to_string(fp.branch)},
            {"ell", fp.ell},
            {"value", fp.value()},
        });
    }
    return ordered_json{{"n", set.n}, {"points", std::move(points)}};
}

inline ordered_json to_json(const TableRow& row) {
    return ordered_json{
        {"pattern", row.pattern},
        {"parity", row.parity},
        {"alpha", row.alpha},
        {"ell", row.ell},
        {"denominator", row.denominator},
        {"sin_form", row.sin_form},
        {"cos_form", row.cos_form},
        {"value", row.value},
    };
}

} // namespace radicals
