#pragma once

#include <functional>
#include <memory>
#include <map>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace legkit {

class FunctionSpec;

/// Interval containing exactly one root of P_degree, taken from the roots
/// of P_{degree-1} (with +-1 appended). P_degree(lo) P_degree(hi) < 0.
struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
  int degree = 0;
};

/// n-point Gauss-Legendre rule. nodes/weights are the reference values on
/// (-1, 1); interval is where integrate() maps them.
struct QuadratureRule {
  int n = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = -1.0;
  double b = 1.0;

  double half_width() const { return 0.5 * (b - a); }
  double center() const { return 0.5 * (a + b); }
  double mapped_node(std::size_t i) const { return half_width() * nodes[i] + center(); }
  double mapped_weight(std::size_t i) const { return half_width() * weights[i]; }
};

inline constexpr double kDefaultRootTolerance = 1e-14;
inline constexpr double kNodeMovementStop = 1e-15;
inline constexpr int kNewtonBudget = 100;

/// Brackets for the non-negative roots of P_degree given the non-negative
/// roots of P_{degree-1} in increasing order.
std::vector<RootBracket> interleaving_brackets(int degree, const std::vector<double>& previous_nonneg_roots);

/// The n roots of P_n in increasing order, by ascending interleaving
/// induction and safeguarded Newton. precision_bits > 53 polishes in
/// extended (<= 64) or quad (> 64) precision before rounding.
/// Throws ConvergenceError when a root exceeds the iteration budget.
std::vector<double> legendre_roots(int n, double tol = kDefaultRootTolerance, int precision_bits = 53);

/// w_i = 2 / ((1 - x_i^2) P'_n(x_i)^2).
std::vector<double> gauss_weights(const std::vector<double>& nodes, int n);

/// Rule for int_a^b. Throws InvalidArgument unless b > a and n >= 1.
QuadratureRule build_rule(int n, double a = -1.0, double b = 1.0, int precision_bits = 53);

/// sum_i w_i f(x_i) over the mapped nodes, ascending i. A throwing f is
/// rethrown as EvaluationError carrying the node index.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);
double integrate(const QuadratureRule& rule, const FunctionSpec& f);

/// Rules keyed by (n, a, b); concurrent lookups, serialized insertion.
class RuleCache {
public:
  std::shared_ptr<const QuadratureRule> get(int n, double a = -1.0, double b = 1.0);
  std::size_t size() const;

private:
  using Key = std::tuple<int, double, double>;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const QuadratureRule>> rules_;
};

/// Process-wide cache used by the series and Beukers modules.
RuleCache& default_rule_cache();

/// Working precision for root polishing from LEGKIT_PRECISION_BITS, 53 when
/// unset or unparsable.
int precision_bits_from_env();

} // namespace legkit
