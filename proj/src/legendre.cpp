#include "legkit/legendre.hpp"

#include "legkit/combinatorics.hpp"
#include "legkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace legkit {

namespace {

void require_degree(int n) {
  if (n < 0) {
    throw InvalidArgument("polynomial degree must be non-negative, got " + std::to_string(n));
  }
}

} // namespace

Eigenvalue Eigenvalue::for_degree(int n) {
  require_degree(n);
  return Eigenvalue{n, static_cast<long long>(n) * (n + 1)};
}

std::optional<Eigenvalue> Eigenvalue::from_lambda(long long lambda) {
  if (lambda < 0) {
    return std::nullopt;
  }
  // n(n+1) = lambda  <=>  (2n+1)^2 = 4 lambda + 1
  const auto disc = 4 * lambda + 1;
  auto root = static_cast<long long>(std::sqrt(static_cast<long double>(disc)));
  while (root * root > disc) {
    --root;
  }
  while ((root + 1) * (root + 1) <= disc) {
    ++root;
  }
  if (root * root != disc) {
    return std::nullopt;
  }
  return Eigenvalue{static_cast<int>((root - 1) / 2), lambda};
}

ExactPoly coeffs_explicit(int n) {
  require_degree(n);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  const BigInt scale = BigInt(1) << n;
  for (int k = 0; 2 * k <= n; ++k) {
    BigInt term = binomial(n, k) * binomial(2 * n - 2 * k, n);
    if (k % 2 == 1) {
      term = -term;
    }
    coeffs[static_cast<std::size_t>(n - 2 * k)] = Rational(term, scale);
  }
  return ExactPoly(std::move(coeffs));
}

ExactPoly coeffs_rodrigues(int n) {
  require_degree(n);
  // (x^2 - 1)^n = sum_j C(n,j) (-1)^(n-j) x^(2j)
  std::vector<Rational> expanded(2 * static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    BigInt c = binomial(n, j);
    if ((n - j) % 2 == 1) {
      c = -c;
    }
    expanded[2 * static_cast<std::size_t>(j)] = Rational(c);
  }
  ExactPoly out = ExactPoly(std::move(expanded)).derivative(n);
  out /= Rational((BigInt(1) << n) * factorial(n));
  return out;
}

double eval_recurrence(int n, double x) {
  require_degree(n);
  if (n == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> eval_batch(int n_max, double x) {
  require_degree(n_max);
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1.0;
  if (n_max >= 1) {
    out[1] = x;
  }
  for (int k = 1; k < n_max; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out[i + 1] = ((2.0 * k + 1.0) * x * out[i] - k * out[i - 1]) / (k + 1.0);
  }
  return out;
}

double derivative_exact(int n, double x) {
  require_degree(n);
  return coeffs_explicit(n).derivative().eval(x);
}

double derivative_relation(int n, double x) {
  require_degree(n);
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("derivative relation needs |x| < 1");
  }
  if (n == 0) {
    return 0.0;
  }
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return n * (prev - x * cur) / (1.0 - x * x);
}

double derivative_eval(int n, double x) {
  const double fast = derivative_relation(n, x);
  const double exact = derivative_exact(n, x);
  // The relation path divides by 1 - x^2, so its rounding error grows as |x| -> 1.
  const double cancellation = 64.0 * std::numeric_limits<double>::epsilon() * n *
                              (std::abs(x * eval_recurrence(n, x)) + std::abs(eval_recurrence(n - 1, x))) /
                              (1.0 - x * x);
  const double scale = std::max(std::abs(exact), 1.0);
  if (std::abs(fast - exact) > 1e-13 * scale + cancellation) {
    throw ConsistencyError("P'_" + std::to_string(n) + " paths disagree at x = " + std::to_string(x));
  }
  return exact;
}

Rational special_value(int n, SpecialPoint point) {
  require_degree(n);
  switch (point) {
  case SpecialPoint::PlusOne:
    return Rational(1);
  case SpecialPoint::MinusOne:
    return Rational(n % 2 == 0 ? 1 : -1);
  case SpecialPoint::Zero:
    break;
  }
  if (n % 2 == 1) {
    return Rational(0);
  }
  Rational out(double_factorial(n - 1), double_factorial(n));
  return (n / 2) % 2 == 0 ? out : Rational(-out);
}

double generating_partial_sum(double x, double t, int N) {
  if (!(std::abs(t) < 1.0)) {
    throw DomainError("generating function series needs |t| < 1");
  }
  require_degree(N);
  const auto values = eval_batch(N, x);
  double sum = 0.0;
  double power = 1.0;
  for (const double p : values) {
    sum += p * power;
    power *= t;
  }
  return sum;
}

double generating_function(double x, double t) { return 1.0 / std::sqrt(1.0 - 2.0 * x * t + t * t); }

int two_adic_scaling(int n) {
  require_degree(n);
  return factorial_valuation(n, 2);
}

ExactPoly two_adic_scaled(int n) {
  ExactPoly out = coeffs_explicit(n) * Rational(BigInt(1) << two_adic_scaling(n));
  if (!out.is_integral()) {
    throw ConsistencyError("2-adic scaling of P_" + std::to_string(n) + " left a fractional coefficient");
  }
  return out;
}

Rational norm_squared(int n) {
  require_degree(n);
  return Rational(2, 2 * n + 1);
}

Rational norm_squared_by_integration(int n) {
  const ExactPoly p = coeffs_explicit(n);
  return inner_product(p, p, -1, 1);
}

Rational leading_moment(int n) {
  require_degree(n);
  const BigInt f = factorial(n);
  return Rational((BigInt(1) << (n + 1)) * f * f, factorial(2 * n + 1));
}

LegendreBasis::LegendreBasis(int max_degree) {
  require_degree(max_degree);
  grow_to(max_degree);
}

void LegendreBasis::grow_to(int max_degree) {
  const ExactPoly x = ExactPoly::monomial(1);
  while (this->max_degree() < max_degree) {
    const int next = this->max_degree() + 1;
    if (next == 0) {
      polys_.push_back(ExactPoly::constant(1));
    } else if (next == 1) {
      polys_.push_back(x);
    } else {
      // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
      const int k = next - 1;
      const auto& pk = polys_[static_cast<std::size_t>(k)];
      const auto& pkm1 = polys_[static_cast<std::size_t>(k - 1)];
      ExactPoly p = (x * pk) * Rational(2 * k + 1) - pkm1 * Rational(k);
      p /= Rational(k + 1);
      polys_.push_back(std::move(p));
    }
    norm_sq_.push_back(norm_squared(next));
  }
}

const ExactPoly& LegendreBasis::poly(int n) const {
  if (n < 0 || n > max_degree()) {
    throw InvalidArgument("degree " + std::to_string(n) + " outside basis of max degree " +
                          std::to_string(max_degree()));
  }
  return polys_[static_cast<std::size_t>(n)];
}

const Rational& LegendreBasis::norm_sq(int n) const {
  if (n < 0 || n > max_degree()) {
    throw InvalidArgument("degree " + std::to_string(n) + " outside basis");
  }
  return norm_sq_[static_cast<std::size_t>(n)];
}

LegendreBasis LegendreBasis::extended(int new_max_degree) const {
  if (new_max_degree < max_degree()) {
    throw InvalidArgument("a basis only extends upward");
  }
  LegendreBasis out = *this;
  out.grow_to(new_max_degree);
  return out;
}

} // namespace legkit
