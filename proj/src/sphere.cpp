#include "legkit/sphere.hpp"

#include "legkit/errors.hpp"
#include "legkit/legendre.hpp"
#include "legkit/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace legkit {

BoundaryData BoundaryData::from_theta(double a, std::function<double(double)> F, std::vector<double> theta_jumps,
                                      std::string name) {
  if (!(a > 0.0)) {
    throw InvalidArgument("sphere radius must be positive");
  }
  std::vector<double> x_jumps;
  for (const double theta : theta_jumps) {
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
      throw InvalidArgument("theta jump outside (0, pi)");
    }
    x_jumps.push_back(std::cos(theta));
  }
  std::sort(x_jumps.begin(), x_jumps.end());
  auto G = [F = std::move(F)](double x) { return F(std::acos(std::clamp(x, -1.0, 1.0))); };
  return BoundaryData{a, FunctionSpec::builtin(std::move(name), std::move(G), -1.0, 1.0, std::move(x_jumps))};
}

BoundaryData BoundaryData::from_x(double a, FunctionSpec G) {
  if (!(a > 0.0)) {
    throw InvalidArgument("sphere radius must be positive");
  }
  if (G.a() != -1.0 || G.b() != 1.0) {
    throw InvalidArgument("boundary data in x = cos(theta) must cover [-1, 1]");
  }
  return BoundaryData{a, std::move(G)};
}

int radial_exponent(int n) {
  if (n < 0) {
    throw InvalidArgument("degree must be non-negative");
  }
  // R = r^p solves r (r R)'' = lambda R iff p (p + 1) = lambda; with
  // lambda = n (n + 1) the roots are n and -(n + 1), and 1 + 4 lambda = (2n + 1)^2.
  const long long lambda = Eigenvalue::for_degree(n).lambda;
  const long long disc = 1 + 4 * lambda;
  const long long root = 2LL * n + 1;
  if (root * root != disc) {
    throw ConsistencyError("radial characteristic discriminant is not a perfect square");
  }
  return static_cast<int>((-1 - root) / 2);
}

double radial_factor(int n, double a, double r) { return std::pow(a / r, -radial_exponent(n)); }

SphereSolution solve_exterior(const BoundaryData& bd, int N, int quad_n) {
  const SeriesExpansion s = project(bd.G, N, quad_n, BasisKind::Legendre);
  return SphereSolution{bd.a, s.coeffs};
}

SphereSolution solve_exterior(const BoundaryData& bd, int N) { return solve_exterior(bd, N, default_quad_points(N)); }

double eval_potential(const SphereSolution& sol, double r, double theta) {
  if (!(r >= sol.a)) {
    throw DomainError("only the exterior r >= a is modelled");
  }
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("theta outside [0, pi]");
  }
  if (sol.coeffs.empty()) {
    return 0.0;
  }
  const auto values = eval_batch(sol.degree(), std::cos(theta));
  const double ratio = sol.a / r;
  double decay = ratio;
  double sum = 0.0;
  for (std::size_t n = 0; n < values.size(); ++n) {
    sum += sol.coeffs[n] * decay * values[n];
    decay *= ratio;
  }
  return sum;
}

std::vector<FieldSample> emit_field_grid(const SphereSolution& sol, double r_max, int nr, int ntheta,
                                         bool radius_in_units_of_a) {
  if (nr < 2 || ntheta < 2) {
    throw InvalidArgument("field grid needs nr >= 2 and ntheta >= 2");
  }
  if (!(r_max > sol.a)) {
    throw InvalidArgument("field grid needs r_max > a");
  }
  std::vector<FieldSample> out;
  out.reserve(static_cast<std::size_t>(nr) * static_cast<std::size_t>(ntheta));
  for (int i = 0; i < nr; ++i) {
    const double r = i + 1 == nr ? r_max : sol.a + (r_max - sol.a) * i / (nr - 1);
    for (int j = 0; j < ntheta; ++j) {
      const double theta = j + 1 == ntheta ? std::numbers::pi : std::numbers::pi * j / (ntheta - 1);
      out.push_back(FieldSample{radius_in_units_of_a ? r / sol.a : r, theta, eval_potential(sol, r, theta)});
    }
  }
  return out;
}

} // namespace legkit
