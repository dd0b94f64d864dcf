#pragma once

#include "pel/locpoly.hpp"

#include <json.hpp>

#include <string>

namespace pel {

/// {"num": [{"e": [x, y, lambda, La, Lb, Lc], "c": "p/q"}, ...], "dA": a, "dL": l}
/// with terms in descending lexicographic exponent order.
nlohmann::json serialize_locpoly(const LocPoly& v);

/// Inverse of serialize_locpoly. Throws ParseError naming the offending
/// path below `location`.
LocPoly parse_locpoly(const nlohmann::json& doc, const std::string& location = "");

/// LaTeX rendering in the fixed variable order.
std::string to_latex(const LocPoly& v);

}  // namespace pel
