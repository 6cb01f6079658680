#include "legkit/errors.hpp"
#include "legkit/legendre.hpp"
#include "legkit/shifted.hpp"

#include <doctest.h>

using namespace legkit;

namespace {
ShiftedPoly sp(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) {
    v.emplace_back(x);
  }
  return ShiftedPoly(v);
}
} // namespace

TEST_SUITE("shifted") {

TEST_CASE("listed polynomials") {
  CHECK(shifted_coeffs(0) == sp({1}));
  CHECK(shifted_coeffs(3) == sp({1, -12, 30, -20}));
  CHECK(shifted_coeffs(5) == sp({1, -30, 210, -560, 630, -252}));
  CHECK(shifted_from_substitution(1) == sp({1, -2}));
  CHECK(shifted_from_substitution(2) == sp({1, -6, 6}));
  CHECK(shifted_rodrigues(0) == sp({1}));
  CHECK(shifted_rodrigues(4) == sp({1, -20, 90, -140, 70}));
  CHECK(shifted_leibniz(1) == sp({1, -2}));
  CHECK(shifted_leibniz(2) == sp({1, -6, 6}));
}

TEST_CASE("four constructions agree") {
  for (int n = 0; n <= 20; ++n) {
    const ShiftedPoly ref = shifted_coeffs(n);
    CHECK(shifted_from_substitution(n) == ref);
    CHECK(shifted_rodrigues(n) == ref);
    CHECK(shifted_leibniz(n) == ref);
    CHECK(ref.alternates());
  }
}

TEST_CASE("integrality guard") {
  CHECK_THROWS_AS(ShiftedPoly::from_exact(ExactPoly{Rational(1, 2)}), ConsistencyError);
  CHECK(ShiftedPoly::from_exact(ExactPoly{1, -2}) == sp({1, -2}));
}

TEST_CASE("special values") {
  CHECK(shifted_special(6, ShiftedPoint::Zero) == 1);
  CHECK(shifted_special(5, ShiftedPoint::Half) == 0);
  CHECK(shifted_special(4, ShiftedPoint::Half) == Rational(3, 8));
  for (int n = 0; n <= 15; ++n) {
    const ShiftedPoly p = shifted_coeffs(n);
    CHECK(shifted_special(n, ShiftedPoint::Zero) == p.eval(0));
    CHECK(shifted_special(n, ShiftedPoint::One) == p.eval(1));
    CHECK(shifted_special(n, ShiftedPoint::Half) == p.eval(Rational(1, 2)));
  }
}

TEST_CASE("moments") {
  CHECK(shifted_moment(0) == 1);
  CHECK(shifted_moment(2) == Rational(1, 30));
  CHECK(shifted_moment(3) == Rational(-1, 140));
  for (int n = 0; n <= 25; ++n) {
    CHECK(shifted_moment(n) == shifted_moment_by_integration(n, n));
  }
  for (int n = 1; n <= 10; ++n) {
    for (int m = 0; m < n; ++m) {
      CHECK(shifted_moment_by_integration(n, m) == 0);
    }
  }
}

TEST_CASE("norms and orthogonality") {
  CHECK(shifted_norm_squared(0) == 1);
  CHECK(shifted_norm_squared(4) == Rational(1, 9));
  CHECK(shifted_norm_squared_by_integration(7) == Rational(1, 15));
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      const Rational ip = inner_product(shifted_coeffs(m).to_exact(), shifted_coeffs(n).to_exact(), 0, 1);
      CHECK(ip == (m == n ? Rational(1, 2 * n + 1) : Rational(0)));
    }
  }
}

TEST_CASE("interval polynomials") {
  CHECK(interval_poly(1, AffineBasisMap::make(-1, 1)) == ExactPoly{0, 1});
  CHECK(interval_poly(1, AffineBasisMap::make(0, 1)) == ExactPoly{-1, 2});
  const AffineBasisMap m05 = AffineBasisMap::make(0, 5);
  CHECK(m05.alpha == Rational(2, 5));
  CHECK(m05.beta == 1);
  CHECK(inner_product(interval_poly(2, m05), interval_poly(3, m05), 0, 5) == 0);
  CHECK(inner_product(interval_poly(3, m05), interval_poly(3, m05), 0, 5) == Rational(5, 7));
  // On [0, 1] the interval convention differs from P~_n by (-1)^n.
  for (int n = 0; n <= 8; ++n) {
    const ExactPoly sign = ExactPoly::constant(n % 2 == 0 ? 1 : -1);
    CHECK(interval_poly(n, AffineBasisMap::make(0, 1)) == sign * shifted_coeffs(n).to_exact());
  }
  CHECK_THROWS_AS(AffineBasisMap::make(1, 1), InvalidArgument);
}

}
