#include "legkit/beukers.hpp"

#include "legkit/combinatorics.hpp"
#include "legkit/errors.hpp"
#include "legkit/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace legkit {

namespace {

bool parse_suffix_int(const std::string& text, int& out) {
  if (text.empty() || text.size() > 6) {
    return false;
  }
  for (const char c : text) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  out = std::stoi(text);
  return true;
}

void require_unit_interval(const QuadratureRule& quad) {
  if (quad.a != 0.0 || quad.b != 1.0) {
    throw InvalidArgument("Beukers integrals need a rule on [0, 1]");
  }
}

double factorial_double(int n) {
  double out = 1.0;
  for (int k = 2; k <= n; ++k) {
    out *= k;
  }
  return out;
}

} // namespace

SmoothFunction::SmoothFunction(std::string name, std::vector<Evaluator> evaluators, double a, double b)
    : name_(std::move(name)), evaluators_(std::move(evaluators)), a_(a), b_(b) {
  if (evaluators_.empty()) {
    throw InvalidArgument("a smooth function needs at least its value evaluator");
  }
  if (!(b > a)) {
    throw InvalidArgument("smooth function domain needs b > a");
  }
  order_ = static_cast<int>(evaluators_.size()) - 1;
}

SmoothFunction SmoothFunction::polynomial(std::string name, const ExactPoly& p, double a, double b) {
  SmoothFunction out(std::move(name), {[](double) { return 0.0; }}, a, b);
  out.evaluators_.clear();
  out.is_polynomial_ = true;
  out.order_ = std::numeric_limits<int>::max();
  ExactPoly d = p;
  while (!d.is_zero()) {
    out.poly_derivatives_.push_back(d);
    d = d.derivative();
  }
  return out;
}

double SmoothFunction::derivative(int k, double x) const {
  if (k < 0) {
    throw InvalidArgument("derivative order must be non-negative");
  }
  if (is_polynomial_) {
    if (k >= static_cast<int>(poly_derivatives_.size())) {
      return 0.0;
    }
    return poly_derivatives_[static_cast<std::size_t>(k)].eval(x);
  }
  if (k > order_) {
    throw OrderTooLow(name_ + " provides derivatives up to order " + std::to_string(order_) + ", " +
                      std::to_string(k) + " requested");
  }
  return evaluators_[static_cast<std::size_t>(k)](x);
}

SmoothFunction make_smooth_builtin(const std::string& name, int order) {
  if (order < 0) {
    throw InvalidArgument("derivative order must be non-negative");
  }
  int k = 0;
  if (name == "1") {
    return SmoothFunction::polynomial(name, ExactPoly::constant(1));
  }
  if (name == "x") {
    return SmoothFunction::polynomial(name, ExactPoly::monomial(1));
  }
  if (name.rfind("x^", 0) == 0 && parse_suffix_int(name.substr(2), k)) {
    return SmoothFunction::polynomial(name, ExactPoly::monomial(k));
  }
  if (name.size() > 1 && name[0] == 'P' && parse_suffix_int(name.substr(1), k)) {
    return SmoothFunction::polynomial(name, coeffs_explicit(k));
  }
  if (name.rfind("const:", 0) == 0) {
    return SmoothFunction::polynomial(name, ExactPoly::constant(to_rational(std::stod(name.substr(6)))));
  }
  std::vector<SmoothFunction::Evaluator> chain;
  for (int j = 0; j <= order; ++j) {
    if (name == "exp") {
      chain.emplace_back([](double x) { return std::exp(x); });
    } else if (name == "sin" || name == "cos") {
      // sin^(j)(x) = sin(x + j pi/2)
      const int phase = (name == "cos" ? 1 : 0) + j;
      chain.emplace_back([phase](double x) {
        switch (phase % 4) {
        case 0:
          return std::sin(x);
        case 1:
          return std::cos(x);
        case 2:
          return -std::sin(x);
        default:
          return -std::cos(x);
        }
      });
    } else if (name == "inv1p") {
      // (-1)^j j! / (1 + x)^(j+1)
      const double scale = (j % 2 == 0 ? 1.0 : -1.0) * factorial_double(j);
      chain.emplace_back([scale, j](double x) { return scale / std::pow(1.0 + x, j + 1); });
    } else {
      throw InvalidArgument("unknown smooth builtin '" + name + "'");
    }
  }
  return SmoothFunction(name, std::move(chain));
}

void check_derivative_chain(const SmoothFunction& f) {
  constexpr double h = 1e-5;
  constexpr double tol = 1e-4;
  const double width = f.b() - f.a();
  const int top = std::min(f.order(), 12);
  for (const double frac : {0.25, 0.5, 0.75}) {
    const double x = f.a() + frac * width;
    for (int k = 1; k <= top; ++k) {
      const double fd = (f.derivative(k - 1, x + h) - f.derivative(k - 1, x - h)) / (2.0 * h);
      const double d = f.derivative(k, x);
      if (std::abs(fd - d) > tol * std::max(1.0, std::abs(d))) {
        throw InvalidArgument("derivative " + std::to_string(k) + " of " + f.name() +
                              " disagrees with a finite difference at x = " + std::to_string(x));
      }
    }
  }
}

double ibp_left(int n, const SmoothFunction& f, const QuadratureRule& quad) {
  if (n < 0) {
    throw InvalidArgument("n must be non-negative");
  }
  require_unit_interval(quad);
  return integrate(quad, [&](double x) { return eval_recurrence(n, 1.0 - 2.0 * x) * f(x); });
}

double ibp_right(int n, const SmoothFunction& f, const QuadratureRule& quad) {
  if (n < 0) {
    throw InvalidArgument("n must be non-negative");
  }
  require_unit_interval(quad);
  if (f.order() < n) {
    throw OrderTooLow(f.name() + " provides derivatives up to order " + std::to_string(f.order()) + ", " +
                      std::to_string(n) + " requested");
  }
  const double integral = integrate(quad, [&](double x) {
    return std::pow(x * (1.0 - x), n) * f.derivative(n, x);
  });
  return (n % 2 == 0 ? 1.0 : -1.0) * integral / factorial_double(n);
}

IbpGeneralResult ibp_general(int n, const SmoothFunction& f, const SmoothFunction& g, double a, double b,
                             int quad_n) {
  if (n < 0) {
    throw InvalidArgument("n must be non-negative");
  }
  if (f.order() < n || g.order() < n) {
    throw OrderTooLow("both functions need derivatives up to order " + std::to_string(n));
  }
  check_derivative_chain(f);
  check_derivative_chain(g);
  const QuadratureRule rule = build_rule(quad_n, a, b);
  IbpGeneralResult out;
  out.left = integrate(rule, [&](double x) { return f.derivative(n, x) * g(x); });
  out.right = (n % 2 == 0 ? 1.0 : -1.0) * integrate(rule, [&](double x) { return f(x) * g.derivative(n, x); });
  for (int j = 0; j < n; ++j) {
    const double at_b = g.derivative(j, b) * f.derivative(n - 1 - j, b);
    const double at_a = g.derivative(j, a) * f.derivative(n - 1 - j, a);
    out.max_boundary_term = std::max(out.max_boundary_term, std::abs(at_b - at_a));
  }
  out.hypothesis_holds = out.max_boundary_term <= kBoundaryHypothesisTolerance;
  return out;
}

BeukersBound bound_In(int n, double M, double H) {
  if (n < 0) {
    throw InvalidArgument("n must be non-negative");
  }
  if (!(M >= 0.0) || !(H >= 0.0)) {
    throw InvalidArgument("bound needs M >= 0 and H >= 0");
  }
  return BeukersBound{n, M, H, std::pow(M, n) / factorial_double(n) * H};
}

double canonical_weight_max() {
  // g(x) = x - x^2 peaks at the vertex x = 1/2.
  const double vertex = 0.5;
  return vertex * (1.0 - vertex);
}

std::vector<std::pair<Rational, Rational>> rodrigues_boundary_terms(int n) {
  if (n < 1) {
    throw InvalidArgument("boundary terms exist for n >= 1");
  }
  const ExactPoly xn = ExactPoly::monomial(n);
  const ExactPoly one_minus_x_n = [&] {
    ExactPoly p = ExactPoly::constant(1);
    for (int i = 0; i < n; ++i) {
      p *= ExactPoly::affine(-1, 1);
    }
    return p;
  }();
  std::vector<std::pair<Rational, Rational>> out;
  for (int k = 0; k < n; ++k) {
    const ExactPoly term =
        xn.derivative(k) * one_minus_x_n.derivative(n - 1 - k) * Rational(binomial(n - 1, k));
    out.emplace_back(term.eval(Rational(0)), term.eval(Rational(1)));
  }
  return out;
}

BeukersReport run_beukers_experiment(int n, const SmoothFunction& f, int quad_n) {
  const auto rule = default_rule_cache().get(quad_n, 0.0, 1.0);
  BeukersReport report;
  report.n = n;
  report.function = f.name();
  report.left = ibp_left(n, f, *rule);
  report.right = ibp_right(n, f, *rule);
  report.abs_diff = std::abs(report.left - report.right);
  const double H = integrate(*rule, [&](double x) { return std::abs(f.derivative(n, x)); });
  report.bound = bound_In(n, canonical_weight_max(), H).bound;
  return report;
}

} // namespace legkit
