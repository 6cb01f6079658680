#pragma once

#include "legkit/beukers.hpp"
#include "legkit/exact_poly.hpp"
#include "legkit/quadrature.hpp"
#include "legkit/series.hpp"
#include "legkit/sphere.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace legkit {

/// Insertion-ordered so emitted documents keep a fixed field order.
using Json = nlohmann::ordered_json;

/// 17 significant digits ("%.17g"), enough to round-trip any double.
std::string format_double(double x);

/// Writes `doc` with doubles rendered by format_double (NaN/inf as null).
/// indent < 0 gives the compact form.
void write_json(const Json& doc, std::ostream& os, int indent = 2);
std::string dump_json(const Json& doc, int indent = 2);

Json to_json(const QuadratureRule& rule);
QuadratureRule rule_from_json(const Json& doc);

Json to_json(const SeriesExpansion& s);
SeriesExpansion series_from_json(const Json& doc);

Json to_json(const SphereSolution& sol);
SphereSolution solution_from_json(const Json& doc);

Json to_json(const BeukersReport& report);
BeukersReport report_from_json(const Json& doc);

/// Exact coefficients as "p/q" strings, lowest power first.
Json exact_coeffs_json(const ExactPoly& p);
ExactPoly exact_poly_from_json(const Json& coeffs);

void write_curve_csv(const std::vector<CurvePoint>& points, std::ostream& os);
void write_field_csv(const std::vector<FieldSample>& grid, std::ostream& os);

} // namespace legkit
