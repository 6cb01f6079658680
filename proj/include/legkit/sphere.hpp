#pragma once

#include "legkit/function_spec.hpp"

#include <functional>
#include <string>
#include <vector>

namespace legkit {

/// Potential prescribed on the sphere r = a. Stored as G(x) = F(arccos x)
/// on x = cos(theta) in [-1, 1].
struct BoundaryData {
  double a = 1.0;
  FunctionSpec G;

  /// F given as a function of theta on [0, pi]; theta jumps map to x = cos(theta).
  static BoundaryData from_theta(double a, std::function<double(double)> F, std::vector<double> theta_jumps = {},
                                 std::string name = "F(theta)");
  /// G given directly in x; its domain must be [-1, 1].
  static BoundaryData from_x(double a, FunctionSpec G);
};

/// Exterior solution V(r, theta) = sum_n c_n (a/r)^(n+1) P_n(cos theta).
struct SphereSolution {
  double a = 1.0;
  std::vector<double> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

/// Decaying power of the radial factor for degree n: R(r) ~ r^-(n+1).
int radial_exponent(int n);

/// (a/r)^(n+1).
double radial_factor(int n, double a, double r);

/// c_n = (n + 1/2) int_{-1}^{1} G(x) P_n(x) dx for n = 0..N.
SphereSolution solve_exterior(const BoundaryData& bd, int N, int quad_n);
SphereSolution solve_exterior(const BoundaryData& bd, int N);

/// Throws DomainError for r < a or theta outside [0, pi].
double eval_potential(const SphereSolution& sol, double r, double theta);

struct FieldSample {
  double r = 0.0;
  double theta = 0.0;
  double V = 0.0;
};

/// nr x ntheta uniform grid over [a, r_max] x [0, pi], r-major. With
/// radius_in_units_of_a the r column is reported as r / a.
std::vector<FieldSample> emit_field_grid(const SphereSolution& sol, double r_max, int nr, int ntheta,
                                         bool radius_in_units_of_a = false);

} // namespace legkit
