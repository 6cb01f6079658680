#include "legkit/series.hpp"

#include "legkit/errors.hpp"
#include "legkit/legendre.hpp"
#include "legkit/quadrature.hpp"
#include "legkit/shifted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace legkit {

std::string to_string(BasisKind kind) {
  switch (kind) {
  case BasisKind::Legendre:
    return "legendre";
  case BasisKind::ShiftedBeukers:
    return "shifted";
  case BasisKind::Mapped:
    return "mapped";
  }
  return "unknown";
}

BasisKind parse_basis_kind(const std::string& text) {
  if (text == "legendre") {
    return BasisKind::Legendre;
  }
  if (text == "shifted") {
    return BasisKind::ShiftedBeukers;
  }
  if (text == "mapped") {
    return BasisKind::Mapped;
  }
  throw InvalidArgument("unknown basis '" + text + "'");
}

double basis_norm_squared(BasisKind basis, double a, double b, int n) {
  switch (basis) {
  case BasisKind::Legendre:
    return 2.0 / (2.0 * n + 1.0);
  case BasisKind::ShiftedBeukers:
    return 1.0 / (2.0 * n + 1.0);
  case BasisKind::Mapped:
    return (b - a) / (2.0 * n + 1.0);
  }
  return 0.0;
}

double basis_argument(BasisKind basis, double a, double b, double x) {
  switch (basis) {
  case BasisKind::Legendre:
    return x;
  case BasisKind::ShiftedBeukers:
    return 1.0 - 2.0 * x;
  case BasisKind::Mapped:
    return std::clamp((2.0 * x - a - b) / (b - a), -1.0, 1.0);
  }
  return x;
}

int default_quad_points(int N) { return std::max(64, 2 * N); }

namespace {

void check_basis_domain(BasisKind basis, double a, double b) {
  if (basis == BasisKind::Legendre && (a != -1.0 || b != 1.0)) {
    throw InvalidArgument("the Legendre basis lives on [-1, 1]");
  }
  if (basis == BasisKind::ShiftedBeukers && (a != 0.0 || b != 1.0)) {
    throw InvalidArgument("the shifted (Beukers) basis lives on [0, 1]");
  }
}

} // namespace

SeriesExpansion project(const FunctionSpec& f, int N, int quad_n, BasisKind basis) {
  if (N < 0) {
    throw InvalidArgument("truncation degree must be non-negative");
  }
  if (quad_n < 1) {
    throw InvalidArgument("quad_n must be at least 1");
  }
  if (quad_n < N + 2) {
    throw InvalidArgument("quad_n must be at least N + 2");
  }
  check_basis_domain(basis, f.a(), f.b());

  SeriesExpansion out;
  out.basis = basis;
  out.a = f.a();
  out.b = f.b();
  std::vector<double> integrals(static_cast<std::size_t>(N) + 1, 0.0);
  auto& cache = default_rule_cache();
  for (const auto& [lo, hi] : f.pieces()) {
    const auto rule = cache.get(quad_n, lo, hi);
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
      const double x = rule->mapped_node(i);
      double fx = 0.0;
      try {
        fx = f(x);
      } catch (const std::exception& e) {
        throw EvaluationError(i, e.what());
      }
      const double wf = rule->mapped_weight(i) * fx;
      const auto values = eval_batch(N, basis_argument(basis, out.a, out.b, x));
      for (std::size_t n = 0; n < values.size(); ++n) {
        integrals[n] += wf * values[n];
      }
    }
  }
  out.coeffs.resize(integrals.size());
  for (std::size_t n = 0; n < integrals.size(); ++n) {
    out.coeffs[n] = integrals[n] / basis_norm_squared(basis, out.a, out.b, static_cast<int>(n));
  }
  return out;
}

SeriesExpansion project(const FunctionSpec& f, int N, int quad_n) {
  BasisKind basis = BasisKind::Mapped;
  if (f.a() == -1.0 && f.b() == 1.0) {
    basis = BasisKind::Legendre;
  } else if (f.a() == 0.0 && f.b() == 1.0) {
    basis = BasisKind::ShiftedBeukers;
  }
  return project(f, N, quad_n, basis);
}

SeriesExpansion project(const FunctionSpec& f, int N) { return project(f, N, default_quad_points(N)); }

std::vector<Rational> project_exact(const ExactPoly& p, BasisKind basis, const Rational& a, const Rational& b,
                                    int N) {
  const auto map = AffineBasisMap::make(a, b);
  if (basis == BasisKind::Legendre && (a != -1 || b != 1)) {
    throw InvalidArgument("the Legendre basis lives on [-1, 1]");
  }
  if (basis == BasisKind::ShiftedBeukers && (a != 0 || b != 1)) {
    throw InvalidArgument("the shifted (Beukers) basis lives on [0, 1]");
  }
  const int top = std::max(N, std::max(p.degree(), 0));
  std::vector<Rational> out(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= std::min(top, p.degree()); ++n) {
    ExactPoly basis_poly;
    Rational norm;
    switch (basis) {
    case BasisKind::Legendre:
      basis_poly = coeffs_explicit(n);
      norm = norm_squared(n);
      break;
    case BasisKind::ShiftedBeukers:
      basis_poly = shifted_coeffs(n).to_exact();
      norm = shifted_norm_squared(n);
      break;
    case BasisKind::Mapped:
      basis_poly = interval_poly(n, map);
      norm = map.length() / Rational(2 * n + 1);
      break;
    }
    out[static_cast<std::size_t>(n)] = inner_product(p, basis_poly, a, b) / norm;
  }
  return out;
}

double evaluate(const SeriesExpansion& s, double x) {
  if (!(x >= s.a && x <= s.b)) {
    throw DomainError("x = " + std::to_string(x) + " outside the series interval");
  }
  if (s.coeffs.empty()) {
    return 0.0;
  }
  const auto values = eval_batch(s.degree(), basis_argument(s.basis, s.a, s.b, x));
  double sum = 0.0;
  for (std::size_t n = 0; n < values.size(); ++n) {
    sum += s.coeffs[n] * values[n];
  }
  return sum;
}

double tail_energy(const SeriesExpansion& s, int from) {
  if (from < 0) {
    throw InvalidArgument("tail start must be non-negative");
  }
  double sum = 0.0;
  for (int n = from; n <= s.degree(); ++n) {
    const double c = s.coeffs[static_cast<std::size_t>(n)];
    sum += c * c * basis_norm_squared(s.basis, s.a, s.b, n);
  }
  return sum;
}

std::vector<double> orthonormal_coeffs(const SeriesExpansion& s) {
  std::vector<double> out(s.coeffs.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = s.coeffs[n] * std::sqrt(basis_norm_squared(s.basis, s.a, s.b, static_cast<int>(n)));
  }
  return out;
}

std::vector<CurvePoint> sample_curve(const SeriesExpansion& s, const FunctionSpec* f, int points) {
  if (points < 2) {
    throw InvalidArgument("curve needs at least two points");
  }
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double x = i + 1 == points ? s.b : s.a + (s.b - s.a) * i / (points - 1);
    CurvePoint p;
    p.x = x;
    p.f = f ? (*f)(x) : std::numeric_limits<double>::quiet_NaN();
    p.approx = evaluate(s, x);
    out.push_back(p);
  }
  return out;
}

} // namespace legkit
