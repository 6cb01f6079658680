#pragma once

#include "legkit/exact_poly.hpp"

#include <string>
#include <vector>

namespace legkit {

/// Shifted Legendre polynomial P~_n(x) = P_n(1 - 2x), the convention used in
/// Beukers-style integrals. Coefficients are integers; constructing one from
/// a polynomial with a fractional coefficient throws ConsistencyError.
class ShiftedPoly {
public:
  ShiftedPoly() = default;
  explicit ShiftedPoly(std::vector<BigInt> coeffs);
  static ShiftedPoly from_exact(const ExactPoly& p);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  ExactPoly to_exact() const;
  Rational eval(const Rational& x) const;

  /// Every coefficient nonzero, coefficient of x^m has sign (-1)^m.
  bool alternates() const;

  std::vector<std::string> coeff_strings() const;

  friend bool operator==(const ShiftedPoly&, const ShiftedPoly&) = default;

private:
  std::vector<BigInt> coeffs_;
};

/// sum_m C(n,m) C(n+m,m) (-x)^m.
ShiftedPoly shifted_coeffs(int n);
/// Exact composition P_n(1 - 2x).
ShiftedPoly shifted_from_substitution(int n);
/// d^n/dx^n [x^n (1-x)^n] / n!.
ShiftedPoly shifted_rodrigues(int n);
/// sum_k C(n,k)^2 sum_j C(k,j) (-x)^(n-k+j), the Leibniz-rule expansion.
ShiftedPoly shifted_leibniz(int n);

enum class ShiftedPoint { Zero, One, Half };

Rational shifted_special(int n, ShiftedPoint point);

/// (-1)^n (n!)^2 / (2n+1)!, the value of int_0^1 x^n P~_n(x) dx.
Rational shifted_moment(int n);
/// int_0^1 x^m P~_n(x) dx by exact integration.
Rational shifted_moment_by_integration(int n, int m);

/// Exactly 1 / (2n + 1).
Rational shifted_norm_squared(int n);
Rational shifted_norm_squared_by_integration(int n);

/// Affine map of [a, b] onto [-1, 1]: x -> alpha x - beta.
struct AffineBasisMap {
  Rational a;
  Rational b;
  Rational alpha;
  Rational beta;

  /// Throws InvalidArgument unless b > a.
  static AffineBasisMap make(const Rational& a, const Rational& b);
  Rational length() const { return b - a; }
};

/// P_n(alpha x - beta), orthogonal on [a, b] with norm (b - a)/(2n + 1).
/// On [0, 1] this is P_n(2x - 1) = (-1)^n P~_n(x).
ExactPoly interval_poly(int n, const AffineBasisMap& map);

} // namespace legkit
