#include "legkit/quadrature.hpp"

#include "legkit/errors.hpp"
#include "legkit/function_spec.hpp"
#include "legkit/legendre.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>
#include <utility>

namespace legkit {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

template <class Real>
struct ValueAndSlope {
  Real value;
  Real slope;
};

// P_k(x) and P'_k(x) for |x| < 1 in one recurrence pass.
template <class Real>
ValueAndSlope<Real> eval_with_slope(int k, const Real& x) {
  if (k == 0) {
    return {Real(1), Real(0)};
  }
  Real prev = 1;
  Real cur = x;
  for (int j = 1; j < k; ++j) {
    Real next = (Real(2 * j + 1) * x * cur - Real(j) * prev) / Real(j + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  Real slope = Real(k) * (prev - x * cur) / (Real(1) - x * x);
  return {cur, slope};
}

template <class Real>
Real polish_in_bracket(const RootBracket& bracket, double tol) {
  using std::abs;
  const double eps_ratio = static_cast<double>(std::numeric_limits<Real>::epsilon()) /
                           std::numeric_limits<double>::epsilon();
  const Real value_tol = Real(tol * eps_ratio);
  const Real move_tol = Real(kNodeMovementStop * eps_ratio);

  Real lo = bracket.lo;
  Real hi = bracket.hi;
  const bool lo_positive = eval_with_slope<Real>(bracket.degree, lo).value > 0;
  Real x = (lo + hi) / 2;
  for (int iter = 0; iter < kNewtonBudget; ++iter) {
    const auto [p, dp] = eval_with_slope<Real>(bracket.degree, x);
    if (abs(p) <= value_tol) {
      return x;
    }
    if ((p > 0) == lo_positive) {
      lo = x;
    } else {
      hi = x;
    }
    Real next = x - p / dp;
    if (!(next > lo && next < hi)) {
      next = (lo + hi) / 2;
    }
    const Real step = abs(next - x);
    x = next;
    if (step <= move_tol) {
      return x;
    }
  }
  throw ConvergenceError("root of P_" + std::to_string(bracket.degree) + " in (" + std::to_string(bracket.lo) +
                         ", " + std::to_string(bracket.hi) + ") not found within " +
                         std::to_string(kNewtonBudget) + " iterations");
}

// Walks ulp by ulp from x while |P_n| keeps dropping. The Newton movement
// stop is absolute, so near +-1 it can halt a few ulps short.
double nearest_best(int n, double x) {
  constexpr int kMaxUlpSteps = 64;
  double best = x;
  double best_residual = std::abs(eval_recurrence(n, x));
  for (const double direction : {2.0, -2.0}) {
    double candidate = best;
    for (int step = 0; step < kMaxUlpSteps; ++step) {
      candidate = std::nextafter(candidate, direction);
      if (!(candidate > 0.0 && candidate < 1.0)) {
        break;
      }
      const double residual = std::abs(eval_recurrence(n, candidate));
      if (!(residual < best_residual)) {
        break;
      }
      best = candidate;
      best_residual = residual;
    }
  }
  return best;
}

template <class Real>
std::vector<double> nonneg_roots(int n, double tol) {
  std::vector<double> previous{0.0}; // P_1
  for (int degree = 2; degree <= n; ++degree) {
    std::vector<double> current;
    if (degree % 2 == 1) {
      current.push_back(0.0);
    }
    for (const auto& bracket : interleaving_brackets(degree, previous)) {
      double root = static_cast<double>(polish_in_bracket<Real>(bracket, tol));
      if (degree == n) {
        root = nearest_best(n, root);
      }
      current.push_back(root);
    }
    previous = std::move(current);
  }
  return previous;
}

} // namespace

std::vector<RootBracket> interleaving_brackets(int degree, const std::vector<double>& previous_nonneg_roots) {
  if (degree < 2) {
    throw InvalidArgument("interleaving brackets start at degree 2");
  }
  std::vector<double> fences;
  for (const double r : previous_nonneg_roots) {
    fences.push_back(r);
  }
  fences.push_back(1.0);
  std::vector<RootBracket> out;
  // For odd degree the middle subinterval (-r1, r1) holds the root at 0.
  for (std::size_t i = 0; i + 1 < fences.size(); ++i) {
    out.push_back(RootBracket{fences[i], fences[i + 1], degree});
  }
  return out;
}

std::vector<double> legendre_roots(int n, double tol, int precision_bits) {
  if (n < 1) {
    throw InvalidArgument("legendre_roots needs n >= 1");
  }
  if (!(tol >= 1e-15)) {
    throw InvalidArgument("root tolerance must be at least 1e-15");
  }
  if (n == 1) {
    return {0.0};
  }
  std::vector<double> positive;
  if (precision_bits <= 53) {
    positive = nonneg_roots<double>(n, tol);
  } else if (precision_bits <= 64) {
    positive = nonneg_roots<long double>(n, tol);
  } else {
    positive = nonneg_roots<Quad>(n, tol);
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    if (*it != 0.0) {
      out.push_back(-*it);
    }
  }
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

std::vector<double> gauss_weights(const std::vector<double>& nodes, int n) {
  if (static_cast<int>(nodes.size()) != n) {
    throw InvalidArgument("gauss_weights expects exactly n nodes");
  }
  std::vector<double> out;
  out.reserve(nodes.size());
  for (const double x : nodes) {
    if (!(std::abs(x) < 1.0)) {
      throw DomainError("Gauss node outside (-1, 1)");
    }
    const double slope = derivative_relation(n, x);
    out.push_back(2.0 / ((1.0 - x * x) * slope * slope));
  }
  return out;
}

QuadratureRule build_rule(int n, double a, double b, int precision_bits) {
  if (n < 1) {
    throw InvalidArgument("quadrature rule needs n >= 1");
  }
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("quadrature interval needs finite b > a");
  }
  QuadratureRule rule;
  rule.n = n;
  rule.a = a;
  rule.b = b;
  if (n == 1) {
    rule.nodes = {0.0};
    rule.weights = {2.0};
    return rule;
  }
  rule.nodes = legendre_roots(n, kDefaultRootTolerance, precision_bits);
  rule.weights = gauss_weights(rule.nodes, n);
  // Mirror so that symmetric nodes carry bitwise-equal weights.
  for (std::size_t i = 0, j = rule.weights.size() - 1; i < j; ++i, --j) {
    rule.weights[i] = rule.weights[j];
  }
  return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double value = 0.0;
    try {
      value = f(rule.mapped_node(i));
    } catch (const EvaluationError&) {
      throw;
    } catch (const std::exception& e) {
      throw EvaluationError(i, e.what());
    }
    sum += rule.weights[i] * value;
  }
  return rule.half_width() * sum;
}

double integrate(const QuadratureRule& rule, const FunctionSpec& f) {
  return integrate(rule, [&f](double x) { return f(x); });
}

std::shared_ptr<const QuadratureRule> RuleCache::get(int n, double a, double b) {
  const Key key{n, a, b};
  {
    std::shared_lock lock(mutex_);
    if (auto it = rules_.find(key); it != rules_.end()) {
      return it->second;
    }
  }
  auto rule = std::make_shared<const QuadratureRule>(build_rule(n, a, b));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = rules_.emplace(key, std::move(rule));
  return it->second;
}

std::size_t RuleCache::size() const {
  std::shared_lock lock(mutex_);
  return rules_.size();
}

RuleCache& default_rule_cache() {
  static RuleCache cache;
  return cache;
}

int precision_bits_from_env() {
  const char* raw = std::getenv("LEGKIT_PRECISION_BITS");
  if (raw == nullptr) {
    return 53;
  }
  char* end = nullptr;
  const long bits = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || bits < 1 || bits > 4096) {
    throw InvalidArgument(std::string("LEGKIT_PRECISION_BITS must be an integer in [1, 4096], got '") + raw + "'");
  }
  return static_cast<int>(bits);
}

} // namespace legkit
