#include "legkit/shifted.hpp"

#include "legkit/combinatorics.hpp"
#include "legkit/errors.hpp"
#include "legkit/legendre.hpp"

#include <string>

namespace legkit {

namespace {

void require_degree(int n) {
  if (n < 0) {
    throw InvalidArgument("polynomial degree must be non-negative, got " + std::to_string(n));
  }
}

} // namespace

ShiftedPoly::ShiftedPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

ShiftedPoly ShiftedPoly::from_exact(const ExactPoly& p) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (denominator(c) != 1) {
      throw ConsistencyError("shifted Legendre coefficient " + to_string(c) + " is not an integer");
    }
    coeffs.push_back(numerator(c));
  }
  return ShiftedPoly(std::move(coeffs));
}

ExactPoly ShiftedPoly::to_exact() const {
  std::vector<Rational> coeffs(coeffs_.begin(), coeffs_.end());
  return ExactPoly(std::move(coeffs));
}

Rational ShiftedPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

bool ShiftedPoly::alternates() const {
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    const int expected = m % 2 == 0 ? 1 : -1;
    if (coeffs_[m].sign() != expected) {
      return false;
    }
  }
  return !coeffs_.empty();
}

std::vector<std::string> ShiftedPoly::coeff_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs_) {
    out.push_back(c.str());
  }
  if (out.empty()) {
    out.emplace_back("0");
  }
  return out;
}

ShiftedPoly shifted_coeffs(int n) {
  require_degree(n);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    BigInt c = binomial(n, m) * binomial(n + m, m);
    coeffs[static_cast<std::size_t>(m)] = m % 2 == 0 ? c : BigInt(-c);
  }
  return ShiftedPoly(std::move(coeffs));
}

ShiftedPoly shifted_from_substitution(int n) {
  require_degree(n);
  return ShiftedPoly::from_exact(coeffs_explicit(n).compose(ExactPoly::affine(-2, 1)));
}

ShiftedPoly shifted_rodrigues(int n) {
  require_degree(n);
  // x^n (1-x)^n = sum_j C(n,j) (-1)^j x^(n+j)
  std::vector<Rational> expanded(2 * static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    BigInt c = binomial(n, j);
    expanded[static_cast<std::size_t>(n + j)] = Rational(j % 2 == 0 ? c : BigInt(-c));
  }
  ExactPoly p = ExactPoly(std::move(expanded)).derivative(n);
  p /= Rational(factorial(n));
  return ShiftedPoly::from_exact(p);
}

ShiftedPoly shifted_leibniz(int n) {
  require_degree(n);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const BigInt outer = binomial(n, k) * binomial(n, k);
    for (int j = 0; j <= k; ++j) {
      const int power = n - k + j;
      const BigInt term = outer * binomial(k, j);
      auto& slot = coeffs[static_cast<std::size_t>(power)];
      if (power % 2 == 0) {
        slot += term;
      } else {
        slot -= term;
      }
    }
  }
  return ShiftedPoly(std::move(coeffs));
}

Rational shifted_special(int n, ShiftedPoint point) {
  require_degree(n);
  switch (point) {
  case ShiftedPoint::Zero:
    return special_value(n, SpecialPoint::PlusOne);
  case ShiftedPoint::One:
    return special_value(n, SpecialPoint::MinusOne);
  case ShiftedPoint::Half:
    return special_value(n, SpecialPoint::Zero);
  }
  throw InvalidArgument("unknown shifted special point");
}

Rational shifted_moment(int n) {
  require_degree(n);
  const BigInt f = factorial(n);
  Rational out(f * f, factorial(2 * n + 1));
  return n % 2 == 0 ? out : Rational(-out);
}

Rational shifted_moment_by_integration(int n, int m) {
  require_degree(m);
  return (ExactPoly::monomial(m) * shifted_coeffs(n).to_exact()).integrate(0, 1);
}

Rational shifted_norm_squared(int n) {
  require_degree(n);
  return Rational(1, 2 * n + 1);
}

Rational shifted_norm_squared_by_integration(int n) {
  const ExactPoly p = shifted_coeffs(n).to_exact();
  return inner_product(p, p, 0, 1);
}

AffineBasisMap AffineBasisMap::make(const Rational& a, const Rational& b) {
  if (!(b > a)) {
    throw InvalidArgument("interval needs b > a, got [" + to_string(a) + ", " + to_string(b) + "]");
  }
  const Rational width = b - a;
  return AffineBasisMap{a, b, Rational(2) / width, (b + a) / width};
}

ExactPoly interval_poly(int n, const AffineBasisMap& map) {
  require_degree(n);
  if (!(map.b > map.a)) {
    throw InvalidArgument("interval needs b > a");
  }
  return coeffs_explicit(n).compose(ExactPoly::affine(map.alpha, -map.beta));
}

} // namespace legkit
