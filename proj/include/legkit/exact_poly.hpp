#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace legkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion of a finite double into a rational.
Rational to_rational(double x);

/// Parses "p", "-p" or "p/q". Throws InvalidArgument on malformed text or q = 0.
Rational parse_rational(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Dense univariate polynomial with exact rational coefficients.
///
/// coeffs()[k] is the coefficient of x^k. The representation is kept
/// trimmed, so the leading coefficient is nonzero; the zero polynomial holds
/// no coefficients and reports degree -1. Every operation is exact.
class ExactPoly {
public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<Rational> coeffs);
  ExactPoly(std::initializer_list<Rational> coeffs);

  static ExactPoly constant(const Rational& c);
  static ExactPoly monomial(int power, const Rational& c = 1);
  /// scale * x + shift
  static ExactPoly affine(const Rational& scale, const Rational& shift);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  Rational coeff(int k) const;
  const Rational& leading() const;

  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  Rational eval(const Rational& x) const;
  /// Evaluates exactly at the rational value of x, then rounds once.
  double eval(double x) const;

  ExactPoly derivative(int order = 1) const;
  /// Antiderivative with zero constant term.
  ExactPoly antiderivative() const;
  Rational integrate(const Rational& a, const Rational& b) const;

  /// p(inner(x)).
  ExactPoly compose(const ExactPoly& inner) const;

  /// x -> -x
  ExactPoly reflect() const;

  ExactPoly& operator+=(const ExactPoly& other);
  ExactPoly& operator-=(const ExactPoly& other);
  ExactPoly& operator*=(const ExactPoly& other);
  ExactPoly& operator*=(const Rational& s);
  ExactPoly& operator/=(const Rational& s);

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(ExactPoly a, const Rational& s) { return a *= s; }
  friend ExactPoly operator*(const Rational& s, ExactPoly a) { return a *= s; }
  friend ExactPoly operator/(ExactPoly a, const Rational& s) { return a /= s; }
  ExactPoly operator-() const;

  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Coefficients rendered with to_string(), lowest power first.
  std::vector<std::string> coeff_strings() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact integral over [a, b] of p * q.
Rational inner_product(const ExactPoly& p, const ExactPoly& q, const Rational& a, const Rational& b);

} // namespace legkit
