#include "legkit/combinatorics.hpp"

#include "legkit/errors.hpp"

namespace legkit {

BigInt factorial(int n) {
  if (n < 0) {
    throw InvalidArgument("factorial of a negative integer");
  }
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) {
    out *= k;
  }
  return out;
}

BigInt double_factorial(int n) {
  if (n < -1) {
    throw InvalidArgument("double factorial below -1");
  }
  BigInt out = 1;
  for (int k = n; k > 1; k -= 2) {
    out *= k;
  }
  return out;
}

BigInt binomial(int n, int k) {
  if (n < 0) {
    throw InvalidArgument("binomial with negative n");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  BigInt out = 1;
  for (int j = 1; j <= k; ++j) {
    out = out * (n - k + j) / j;
  }
  return out;
}

int factorial_valuation(int n, int p) {
  if (n < 0 || p < 2) {
    throw InvalidArgument("factorial_valuation needs n >= 0 and p >= 2");
  }
  int total = 0;
  for (long long power = p; power <= n; power *= p) {
    total += static_cast<int>(n / power);
  }
  return total;
}

} // namespace legkit
