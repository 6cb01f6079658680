#include "legkit/beukers.hpp"
#include "legkit/function_spec.hpp"
#include "legkit/json_io.hpp"
#include "legkit/legendre.hpp"
#include "legkit/quadrature.hpp"
#include "legkit/series.hpp"
#include "legkit/sphere.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace legkit;

TEST_SUITE("json_io") {

TEST_CASE("double rendering") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("rule round trip") {
  const QuadratureRule rule = build_rule(7, 0.5, 2.25);
  const QuadratureRule back = rule_from_json(Json::parse(dump_json(to_json(rule))));
  CHECK(back.n == rule.n);
  CHECK(back.a == rule.a);
  CHECK(back.b == rule.b);
  CHECK(back.nodes == rule.nodes);
  CHECK(back.weights == rule.weights);
}

TEST_CASE("series round trip") {
  const SeriesExpansion s = project(make_builtin("exp", 0, 3), 12);
  const SeriesExpansion back = series_from_json(Json::parse(dump_json(to_json(s))));
  CHECK(back.basis == s.basis);
  CHECK(back.a == s.a);
  CHECK(back.b == s.b);
  CHECK(back.coeffs == s.coeffs);
}

TEST_CASE("sphere round trip") {
  const SphereSolution sol =
      solve_exterior(BoundaryData::from_theta(1.25, [](double t) { return std::exp(std::cos(t)); }), 10);
  const SphereSolution back = solution_from_json(Json::parse(dump_json(to_json(sol))));
  CHECK(back.a == sol.a);
  CHECK(back.coeffs == sol.coeffs);
}

TEST_CASE("report round trip") {
  const BeukersReport r = run_beukers_experiment(5, make_smooth_builtin("sin", 5));
  const BeukersReport back = report_from_json(Json::parse(dump_json(to_json(r))));
  CHECK(back.n == r.n);
  CHECK(back.function == r.function);
  CHECK(back.left == r.left);
  CHECK(back.right == r.right);
  CHECK(back.abs_diff == r.abs_diff);
  CHECK(back.bound == r.bound);
}

TEST_CASE("exact coefficients round trip") {
  for (int n = 0; n <= 20; ++n) {
    const ExactPoly p = coeffs_explicit(n);
    CHECK(exact_poly_from_json(exact_coeffs_json(p)) == p);
  }
}

TEST_CASE("deterministic output") {
  const SeriesExpansion s = project(make_builtin("sign"), 9);
  CHECK(dump_json(to_json(s)) == dump_json(to_json(project(make_builtin("sign"), 9))));
}

TEST_CASE("csv writers") {
  std::ostringstream curve;
  write_curve_csv({{0.0, 1.0, 1.5}}, curve);
  CHECK(curve.str() == "x,f,f_approx\n0,1,1.5\n");
  std::ostringstream field;
  write_field_csv({{1.0, 0.0, 0.25}}, field);
  CHECK(field.str() == "r,theta,V\n1,0,0.25\n");
}

}
