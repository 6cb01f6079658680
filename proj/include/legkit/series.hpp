#pragma once

#include "legkit/exact_poly.hpp"
#include "legkit/function_spec.hpp"

#include <string>
#include <vector>

namespace legkit {

/// Which orthogonal family a coefficient vector refers to.
///  - Legendre:       P_n(x) on [-1, 1], a_n = (n + 1/2) int P_n f
///  - ShiftedBeukers: P~_n(x) = P_n(1 - 2x) on [0, 1], b_n = (2n + 1) int P~_n f
///  - Mapped:         P_n(alpha x - beta) on [a, b], c_n = (2n + 1)/(b - a) int ...
enum class BasisKind { Legendre, ShiftedBeukers, Mapped };

std::string to_string(BasisKind kind);
/// Accepts "legendre", "shifted", "mapped". Throws InvalidArgument otherwise.
BasisKind parse_basis_kind(const std::string& text);

/// Truncated Fourier-Legendre series c_0 ... c_N in the practical
/// (P_n(1) = 1) normalization.
struct SeriesExpansion {
  BasisKind basis = BasisKind::Legendre;
  double a = -1.0;
  double b = 1.0;
  std::vector<double> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

/// Squared L2 norm of the n-th basis function of the given family.
double basis_norm_squared(BasisKind basis, double a, double b, int n);

/// Reference argument t in [-1, 1] for the basis polynomial at x.
double basis_argument(BasisKind basis, double a, double b, double x);

/// Default quadrature size for a projection of degree N: max(64, 2N).
int default_quad_points(int N);

/// Projects f onto basis polynomials of degree 0..N with quad_n-point
/// Gauss-Legendre rules, one per piece between declared jump points. The
/// basis interval is f's domain; Legendre needs [-1, 1] and ShiftedBeukers
/// [0, 1]. Throws InvalidArgument if quad_n < 1 or quad_n < N + 2.
SeriesExpansion project(const FunctionSpec& f, int N, int quad_n, BasisKind basis);
/// Basis inferred from f's domain: [-1,1] Legendre, [0,1] ShiftedBeukers,
/// anything else Mapped.
SeriesExpansion project(const FunctionSpec& f, int N, int quad_n);
SeriesExpansion project(const FunctionSpec& f, int N);

/// Exact coefficients of a polynomial in the given family by exact
/// integration. The result has max(N, deg p) + 1 entries (N < 0: deg p + 1);
/// entries above deg p are zero.
std::vector<Rational> project_exact(const ExactPoly& p, BasisKind basis, const Rational& a = -1,
                                    const Rational& b = 1, int N = -1);

/// sum_n c_n basis_n(x). Throws DomainError outside [a, b].
double evaluate(const SeriesExpansion& s, double x);

/// sum_{n >= from} c_n^2 ||basis_n||^2; zero when from > N.
double tail_energy(const SeriesExpansion& s, int from);

/// Coefficients against the orthonormal family, c_n ||basis_n||.
std::vector<double> orthonormal_coeffs(const SeriesExpansion& s);

struct CurvePoint {
  double x = 0.0;
  double f = 0.0; ///< NaN when no reference function was given
  double approx = 0.0;
};

/// Uniform grid of `points` >= 2 abscissae over [a, b], both ends included.
std::vector<CurvePoint> sample_curve(const SeriesExpansion& s, const FunctionSpec* f, int points);

} // namespace legkit
