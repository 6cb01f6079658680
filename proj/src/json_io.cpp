#include "legkit/json_io.hpp"

#include "legkit/errors.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace legkit {

std::string format_double(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void write_string(const std::string& s, std::ostream& os) {
  // Reuse the library's escaping for strings.
  os << Json(s).dump();
}

void write_value(const Json& doc, std::ostream& os, int indent, int depth) {
  const bool pretty = indent >= 0;
  const auto newline = [&](int level) {
    if (pretty) {
      os << '\n' << std::string(static_cast<std::size_t>(indent * level), ' ');
    }
  };
  switch (doc.type()) {
  case Json::value_t::object: {
    if (doc.empty()) {
      os << "{}";
      return;
    }
    os << '{';
    bool first = true;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (!first) {
        os << ',';
      }
      first = false;
      newline(depth + 1);
      write_string(it.key(), os);
      os << (pretty ? ": " : ":");
      write_value(it.value(), os, indent, depth + 1);
    }
    newline(depth);
    os << '}';
    return;
  }
  case Json::value_t::array: {
    os << '[';
    bool first = true;
    for (const auto& item : doc) {
      if (!first) {
        os << (pretty ? ", " : ",");
      }
      first = false;
      write_value(item, os, indent, depth + 1);
    }
    os << ']';
    return;
  }
  case Json::value_t::number_float: {
    const double x = doc.get<double>();
    os << (std::isfinite(x) ? format_double(x) : std::string("null"));
    return;
  }
  default:
    os << doc.dump();
    return;
  }
}

std::vector<double> doubles(const Json& arr, const char* what) {
  if (!arr.is_array()) {
    throw InvalidArgument(std::string(what) + " must be an array");
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    out.push_back(v.get<double>());
  }
  return out;
}

std::pair<double, double> interval(const Json& doc) {
  const auto& iv = doc.at("interval");
  if (!iv.is_array() || iv.size() != 2) {
    throw InvalidArgument("interval must be [a, b]");
  }
  return {iv[0].get<double>(), iv[1].get<double>()};
}

} // namespace

void write_json(const Json& doc, std::ostream& os, int indent) {
  write_value(doc, os, indent, 0);
  os << '\n';
}

std::string dump_json(const Json& doc, int indent) {
  std::ostringstream os;
  write_json(doc, os, indent);
  return os.str();
}

Json to_json(const QuadratureRule& rule) {
  Json doc;
  doc["n"] = rule.n;
  doc["interval"] = Json::array({rule.a, rule.b});
  doc["nodes"] = rule.nodes;
  doc["weights"] = rule.weights;
  return doc;
}

QuadratureRule rule_from_json(const Json& doc) {
  QuadratureRule rule;
  rule.n = doc.at("n").get<int>();
  std::tie(rule.a, rule.b) = interval(doc);
  rule.nodes = doubles(doc.at("nodes"), "nodes");
  rule.weights = doubles(doc.at("weights"), "weights");
  if (static_cast<int>(rule.nodes.size()) != rule.n || rule.weights.size() != rule.nodes.size()) {
    throw InvalidArgument("rule needs n nodes and n weights");
  }
  return rule;
}

Json to_json(const SeriesExpansion& s) {
  Json doc;
  doc["basis"] = to_string(s.basis);
  doc["interval"] = Json::array({s.a, s.b});
  doc["coeffs"] = s.coeffs;
  return doc;
}

SeriesExpansion series_from_json(const Json& doc) {
  SeriesExpansion s;
  s.basis = parse_basis_kind(doc.at("basis").get<std::string>());
  std::tie(s.a, s.b) = interval(doc);
  s.coeffs = doubles(doc.at("coeffs"), "coeffs");
  return s;
}

Json to_json(const SphereSolution& sol) {
  Json doc;
  doc["a"] = sol.a;
  doc["coeffs"] = sol.coeffs;
  return doc;
}

SphereSolution solution_from_json(const Json& doc) {
  SphereSolution sol;
  sol.a = doc.at("a").get<double>();
  sol.coeffs = doubles(doc.at("coeffs"), "coeffs");
  return sol;
}

Json to_json(const BeukersReport& report) {
  Json doc;
  doc["n"] = report.n;
  doc["f"] = report.function;
  doc["left"] = report.left;
  doc["right"] = report.right;
  doc["abs_diff"] = report.abs_diff;
  doc["bound"] = report.bound;
  return doc;
}

BeukersReport report_from_json(const Json& doc) {
  BeukersReport report;
  report.n = doc.at("n").get<int>();
  report.function = doc.value("f", std::string());
  report.left = doc.at("left").get<double>();
  report.right = doc.at("right").get<double>();
  report.abs_diff = doc.value("abs_diff", std::abs(report.left - report.right));
  report.bound = doc.at("bound").get<double>();
  return report;
}

Json exact_coeffs_json(const ExactPoly& p) { return Json(p.coeff_strings()); }

ExactPoly exact_poly_from_json(const Json& coeffs) {
  if (!coeffs.is_array()) {
    throw InvalidArgument("coefficients must be an array");
  }
  std::vector<Rational> out;
  for (const auto& c : coeffs) {
    out.push_back(parse_rational(c.get<std::string>()));
  }
  return ExactPoly(std::move(out));
}

void write_curve_csv(const std::vector<CurvePoint>& points, std::ostream& os) {
  os << "x,f,f_approx\n";
  for (const auto& p : points) {
    os << format_double(p.x) << ',' << format_double(p.f) << ',' << format_double(p.approx) << '\n';
  }
}

void write_field_csv(const std::vector<FieldSample>& grid, std::ostream& os) {
  os << "r,theta,V\n";
  for (const auto& s : grid) {
    os << format_double(s.r) << ',' << format_double(s.theta) << ',' << format_double(s.V) << '\n';
  }
}

} // namespace legkit
