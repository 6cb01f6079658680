#pragma once

#include "legkit/exact_poly.hpp"
#include "legkit/quadrature.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace legkit {

/// A function together with caller-supplied evaluators for its first
/// `order` derivatives. derivative(0, x) is the function itself.
class SmoothFunction {
public:
  using Evaluator = std::function<double(double)>;

  /// evaluators[k] is the k-th derivative; order = evaluators.size() - 1.
  SmoothFunction(std::string name, std::vector<Evaluator> evaluators, double a = 0.0, double b = 1.0);
  /// Exact polynomial; every derivative is available.
  static SmoothFunction polynomial(std::string name, const ExactPoly& p, double a = 0.0, double b = 1.0);

  const std::string& name() const noexcept { return name_; }
  int order() const noexcept { return order_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  double operator()(double x) const { return derivative(0, x); }
  /// Throws OrderTooLow when k > order().
  double derivative(int k, double x) const;

private:
  std::string name_;
  std::vector<Evaluator> evaluators_;
  std::vector<ExactPoly> poly_derivatives_;
  bool is_polynomial_ = false;
  int order_ = 0;
  double a_ = 0.0;
  double b_ = 1.0;
};

/// Builtin smooth functions on [0, 1] with derivatives up to `order`:
/// "1", "x", "x^k", "const:v", "exp", "sin", "cos", "inv1p" (1/(1+x)), "Pk".
SmoothFunction make_smooth_builtin(const std::string& name, int order);

/// Central-difference spot check (step 1e-5) of each derivative evaluator
/// against the next lower one at three interior points. Throws
/// InvalidArgument when any disagrees by more than 1e-4 relative.
void check_derivative_chain(const SmoothFunction& f);

/// int_0^1 P~_n(x) f(x) dx. quad must target [0, 1].
double ibp_left(int n, const SmoothFunction& f, const QuadratureRule& quad);

/// (-1)^n / n! int_0^1 x^n (1-x)^n f^(n)(x) dx. Throws OrderTooLow when
/// f.order() < n.
double ibp_right(int n, const SmoothFunction& f, const QuadratureRule& quad);

struct IbpGeneralResult {
  double left = 0.0;               ///< int_a^b f^(n) g
  double right = 0.0;              ///< (-1)^n int_a^b f g^(n)
  double max_boundary_term = 0.0;  ///< max_j |[g^(j) f^(n-1-j)]_a^b|
  bool hypothesis_holds = true;    ///< max_boundary_term <= 1e-8
};

/// Both sides of the derivative-transfer identity on [a, b] using a
/// quad_n-point rule. The boundary terms that repeated integration by parts
/// discards are evaluated at a and b; a violation is reported through
/// hypothesis_holds rather than thrown.
IbpGeneralResult ibp_general(int n, const SmoothFunction& f, const SmoothFunction& g, double a, double b,
                             int quad_n = 64);

inline constexpr double kBoundaryHypothesisTolerance = 1e-8;

struct BeukersBound {
  int n = 0;
  double M = 0.0;
  double H = 0.0;
  double bound = 0.0; ///< M^n / n! * H
};

/// Throws InvalidArgument for negative M or H.
BeukersBound bound_In(int n, double M, double H);

/// Maximum of the canonical weight x(1 - x) on [0, 1]: 1/4 at x = 1/2.
double canonical_weight_max();

/// Exact values at x = 0 and x = 1 of each Leibniz term
/// C(n-1,k) (x^n)^(k) ((1-x)^n)^(n-1-k), k = 0..n-1, of
/// d^(n-1)/dx^(n-1) [x^n (1-x)^n]. All vanish for n >= 1.
std::vector<std::pair<Rational, Rational>> rodrigues_boundary_terms(int n);

struct BeukersReport {
  int n = 0;
  std::string function;
  double left = 0.0;
  double right = 0.0;
  double abs_diff = 0.0;
  double bound = 0.0;
};

/// ibp_left, ibp_right and the bound with M = 1/4 and H = int_0^1 |f^(n)|.
BeukersReport run_beukers_experiment(int n, const SmoothFunction& f, int quad_n = 64);

} // namespace legkit
