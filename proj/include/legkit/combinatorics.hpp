#pragma once

#include "legkit/exact_poly.hpp"

namespace legkit {

BigInt factorial(int n);
/// n!! = n (n-2) (n-4) ...; (-1)!! = 0!! = 1.
BigInt double_factorial(int n);
/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Exponent of the prime p in n!, by Legendre's formula sum_k floor(n / p^k).
int factorial_valuation(int n, int p);

} // namespace legkit
