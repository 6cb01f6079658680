#pragma once

#include "legkit/exact_poly.hpp"

#include <optional>
#include <vector>

namespace legkit {

/// Separation constant of the angular equation. Bounded (polynomial)
/// solutions exist only for lambda = n (n + 1).
struct Eigenvalue {
  int n = 0;
  long long lambda = 0;

  static Eigenvalue for_degree(int n);
  /// The degree n with n (n + 1) == lambda, if there is one.
  static std::optional<Eigenvalue> from_lambda(long long lambda);
};

/// P_n from the closed sum 2^-n sum_k (-1)^k C(n,k) C(2n-2k,n) x^(n-2k).
ExactPoly coeffs_explicit(int n);

/// P_n as d^n/dx^n (x^2 - 1)^n / (2^n n!), expanded term by term.
ExactPoly coeffs_rodrigues(int n);

/// P_n(x) by the three-term (Bonnet) recurrence. Defined for every real x.
double eval_recurrence(int n, double x);

/// P_0(x) ... P_nmax(x) from a single recurrence pass.
std::vector<double> eval_batch(int n_max, double x);

/// P'_n(x) by exact differentiation of the coefficients, evaluated exactly
/// at the rational value of x and rounded once.
double derivative_exact(int n, double x);

/// P'_n(x) from (1 - x^2) P'_n = n (P_{n-1} - x P_n). Requires |x| < 1.
double derivative_relation(int n, double x);

/// P'_n(x) by the relation path, cross-checked against the exact path.
/// Throws ConsistencyError when they disagree beyond 1e-13 relative.
double derivative_eval(int n, double x);

enum class SpecialPoint { PlusOne, MinusOne, Zero };

/// Exact P_n(+1), P_n(-1) or P_n(0).
Rational special_value(int n, SpecialPoint point);

/// sum_{n=0}^{N} P_n(x) t^n. Throws DomainError unless |t| < 1.
double generating_partial_sum(double x, double t, int N);

/// Closed form 1/sqrt(1 - 2xt + t^2) of the generating function.
double generating_function(double x, double t);

/// nu_2(n!): multiplying P_n by 2^nu_2(n!) clears every power of two from
/// its coefficient denominators.
int two_adic_scaling(int n);

/// 2^nu_2(n!) P_n; all coefficients integral.
ExactPoly two_adic_scaled(int n);

/// Exactly 2 / (2n + 1).
Rational norm_squared(int n);
/// The same value from exact integration of P_n^2 over [-1, 1].
Rational norm_squared_by_integration(int n);

/// Exact value of int_{-1}^{1} x^n P_n(x) dx = 2^(n+1) (n!)^2 / (2n+1)!.
Rational leading_moment(int n);

/// Immutable table of P_0 ... P_max exactly, with their squared norms.
/// extended() returns a new basis reusing the polynomials already built.
class LegendreBasis {
public:
  explicit LegendreBasis(int max_degree);

  int max_degree() const noexcept { return static_cast<int>(polys_.size()) - 1; }
  const ExactPoly& poly(int n) const;
  const Rational& norm_sq(int n) const;
  const std::vector<ExactPoly>& polys() const noexcept { return polys_; }

  LegendreBasis extended(int new_max_degree) const;

private:
  LegendreBasis() = default;
  void grow_to(int max_degree);

  std::vector<ExactPoly> polys_;
  std::vector<Rational> norm_sq_;
};

} // namespace legkit
