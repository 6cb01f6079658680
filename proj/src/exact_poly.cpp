#include "legkit/exact_poly.hpp"

#include "legkit/errors.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

namespace legkit {

Rational to_rational(double x) {
  if (!std::isfinite(x)) {
    throw InvalidArgument("cannot convert a non-finite double to a rational");
  }
  if (x == 0.0) {
    return Rational(0);
  }
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // 53 bits hold every double mantissa exactly.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt num(scaled);
  if (exponent >= 0) {
    return Rational(num << exponent);
  }
  return Rational(num, BigInt(1) << -exponent);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const auto parse_int = [&](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (part.size() == start) {
      throw InvalidArgument("malformed rational '" + text + "'");
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw InvalidArgument("malformed rational '" + text + "'");
      }
    }
    return BigInt(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) {
    return Rational(parse_int(text));
  }
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw InvalidArgument("zero denominator in '" + text + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  const BigInt den = denominator(r);
  if (den == 1) {
    return numerator(r).str();
  }
  return numerator(r).str() + "/" + den.str();
}

ExactPoly::ExactPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ExactPoly::ExactPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

ExactPoly ExactPoly::constant(const Rational& c) { return ExactPoly({c}); }

ExactPoly ExactPoly::monomial(int power, const Rational& c) {
  if (power < 0) {
    throw InvalidArgument("monomial power must be non-negative");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return ExactPoly(std::move(coeffs));
}

ExactPoly ExactPoly::affine(const Rational& scale, const Rational& shift) { return ExactPoly({shift, scale}); }

void ExactPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Rational ExactPoly::coeff(int k) const {
  if (k < 0 || k > degree()) {
    return Rational(0);
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& ExactPoly::leading() const {
  if (is_zero()) {
    throw InvalidArgument("the zero polynomial has no leading coefficient");
  }
  return coeffs_.back();
}

bool ExactPoly::is_integral() const {
  for (const auto& c : coeffs_) {
    if (denominator(c) != 1) {
      return false;
    }
  }
  return true;
}

Rational ExactPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double ExactPoly::eval(double x) const { return eval(to_rational(x)).convert_to<double>(); }

ExactPoly ExactPoly::derivative(int order) const {
  if (order < 0) {
    throw InvalidArgument("derivative order must be non-negative");
  }
  if (order == 0) {
    return *this;
  }
  if (order > degree()) {
    return ExactPoly();
  }
  std::vector<Rational> out(coeffs_.size() - static_cast<std::size_t>(order));
  for (std::size_t k = 0; k < out.size(); ++k) {
    // falling factorial (k+order)!/k!
    BigInt factor = 1;
    for (std::size_t j = k + 1; j <= k + static_cast<std::size_t>(order); ++j) {
      factor *= j;
    }
    out[k] = coeffs_[k + static_cast<std::size_t>(order)] * factor;
  }
  return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::antiderivative() const {
  if (is_zero()) {
    return ExactPoly();
  }
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k + 1] = coeffs_[k] / Rational(k + 1);
  }
  return ExactPoly(std::move(out));
}

Rational ExactPoly::integrate(const Rational& a, const Rational& b) const {
  const ExactPoly anti = antiderivative();
  return anti.eval(b) - anti.eval(a);
}

ExactPoly ExactPoly::compose(const ExactPoly& inner) const {
  ExactPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

ExactPoly ExactPoly::reflect() const {
  ExactPoly out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) {
    out.coeffs_[k] = -out.coeffs_[k];
  }
  return out;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] += other.coeffs_[k];
  }
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] -= other.coeffs_[k];
  }
  trim();
  return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return ExactPoly();
  }
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ExactPoly(std::move(out));
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& other) {
  *this = *this * other;
  return *this;
}

ExactPoly& ExactPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) {
    c *= s;
  }
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator/=(const Rational& s) {
  if (s == 0) {
    throw InvalidArgument("polynomial division by zero");
  }
  for (auto& c : coeffs_) {
    c /= s;
  }
  return *this;
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly out = *this;
  for (auto& c : out.coeffs_) {
    c = -c;
  }
  return out;
}

std::vector<std::string> ExactPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    out.push_back(to_string(c));
  }
  if (out.empty()) {
    out.emplace_back("0");
  }
  return out;
}

Rational inner_product(const ExactPoly& p, const ExactPoly& q, const Rational& a, const Rational& b) {
  return (p * q).integrate(a, b);
}

} // namespace legkit
