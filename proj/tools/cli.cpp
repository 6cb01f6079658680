#include "cli.hpp"

#include "legkit/beukers.hpp"
#include "legkit/errors.hpp"
#include "legkit/function_spec.hpp"
#include "legkit/json_io.hpp"
#include "legkit/legendre.hpp"
#include "legkit/quadrature.hpp"
#include "legkit/series.hpp"
#include "legkit/shifted.hpp"
#include "legkit/sphere.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace legkit::cli {

namespace {

struct Common {
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output,-o", common.output, "Write to this file instead of standard output");
}

// Writes the command's payload to --output or to `out`.
void emit(const Common& common, std::ostream& out, const std::string& payload) {
  if (common.output.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(common.output);
  if (!file) {
    throw InputError(common.output, 0, "cannot open for writing");
  }
  file << payload;
}

void write_file(const std::string& path, const std::string& payload) {
  std::ofstream file(path);
  if (!file) {
    throw InputError(path, 0, "cannot open for writing");
  }
  file << payload;
}

std::string csv_rows(const std::vector<std::string>& values, const char* header) {
  std::ostringstream os;
  os << header << '\n';
  for (std::size_t k = 0; k < values.size(); ++k) {
    os << k << ',' << values[k] << '\n';
  }
  return os.str();
}

FunctionSpec resolve_function(const std::string& name, const std::string& samples, double a, double b) {
  if (!samples.empty()) {
    return load_samples_csv(samples);
  }
  return make_builtin(name, a, b);
}

// --- poly -----------------------------------------------------------------

struct PolyArgs {
  Common common;
  int n = 0;
  std::string basis = "legendre";
  bool scale_2adic = false;
};

std::string cmd_poly(const PolyArgs& args) {
  if (args.n < 0) {
    throw InvalidArgument("--n must be non-negative");
  }
  std::vector<std::string> coeffs;
  Json doc;
  doc["n"] = args.n;
  doc["basis"] = args.basis;
  if (args.basis == "shifted") {
    if (args.scale_2adic) {
      throw InvalidArgument("--scale-2adic applies to the legendre basis only");
    }
    coeffs = shifted_coeffs(args.n).coeff_strings();
  } else if (args.scale_2adic) {
    const int exponent = two_adic_scaling(args.n);
    doc["scale_exponent"] = exponent;
    coeffs = two_adic_scaled(args.n).coeff_strings();
  } else {
    coeffs = coeffs_explicit(args.n).coeff_strings();
  }
  if (args.common.format == "csv") {
    return csv_rows(coeffs, "k,coeff");
  }
  doc["coeffs"] = coeffs;
  return dump_json(doc);
}

// --- shifted --------------------------------------------------------------

struct ShiftedArgs {
  Common common;
  int n = 0;
};

std::string cmd_shifted(const ShiftedArgs& args) {
  if (args.n < 0) {
    throw InvalidArgument("--n must be non-negative");
  }
  const ShiftedPoly sum_form = shifted_coeffs(args.n);
  const bool agree = sum_form == shifted_from_substitution(args.n) && sum_form == shifted_rodrigues(args.n) &&
                     sum_form == shifted_leibniz(args.n);
  if (!agree) {
    throw ConsistencyError("shifted Legendre representations disagree at n = " + std::to_string(args.n));
  }
  if (args.common.format == "csv") {
    return csv_rows(sum_form.coeff_strings(), "k,coeff");
  }
  Json doc;
  doc["n"] = args.n;
  doc["coeffs"] = sum_form.coeff_strings();
  doc["representations_agree"] = agree;
  doc["value_at_0"] = to_string(shifted_special(args.n, ShiftedPoint::Zero));
  doc["value_at_1"] = to_string(shifted_special(args.n, ShiftedPoint::One));
  doc["value_at_half"] = to_string(shifted_special(args.n, ShiftedPoint::Half));
  doc["moment"] = to_string(shifted_moment(args.n));
  doc["norm_squared"] = to_string(shifted_norm_squared(args.n));
  return dump_json(doc);
}

// --- roots ----------------------------------------------------------------

struct RootsArgs {
  Common common;
  int n = 1;
  double tol = kDefaultRootTolerance;
};

std::string cmd_roots(const RootsArgs& args) {
  const auto roots = legendre_roots(args.n, args.tol, precision_bits_from_env());
  if (args.common.format == "csv") {
    std::ostringstream os;
    os << "i,root\n";
    for (std::size_t i = 0; i < roots.size(); ++i) {
      os << i << ',' << format_double(roots[i]) << '\n';
    }
    return os.str();
  }
  Json doc;
  doc["n"] = args.n;
  doc["roots"] = roots;
  return dump_json(doc);
}

// --- quad -----------------------------------------------------------------

struct QuadArgs {
  Common common;
  int n = 1;
  double a = -1.0;
  double b = 1.0;
  std::string f = "1";
  std::string samples;
};

std::string cmd_quad(const QuadArgs& args) {
  const QuadratureRule rule = build_rule(args.n, args.a, args.b, precision_bits_from_env());
  const FunctionSpec f = resolve_function(args.f, args.samples, args.a, args.b);
  const double integral = integrate(rule, f);
  if (args.common.format == "csv") {
    std::ostringstream os;
    os << "node,weight,mapped_node,mapped_weight\n";
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      os << format_double(rule.nodes[i]) << ',' << format_double(rule.weights[i]) << ','
         << format_double(rule.mapped_node(i)) << ',' << format_double(rule.mapped_weight(i)) << '\n';
    }
    return os.str();
  }
  Json doc = to_json(rule);
  doc["f"] = args.samples.empty() ? args.f : args.samples;
  doc["integral"] = integral;
  return dump_json(doc);
}

// --- expand ---------------------------------------------------------------

struct ExpandArgs {
  Common common;
  std::string f = "1";
  std::string samples;
  int N = 0;
  double a = -1.0;
  double b = 1.0;
  std::string basis;
  int quad_n = 0;
  int grid = 0;
  std::string curve;
};

std::string cmd_expand(const ExpandArgs& args) {
  if (args.N < 0) {
    throw InvalidArgument("--N must be non-negative");
  }
  FunctionSpec f = resolve_function(args.f, args.samples, args.a, args.b);
  const int quad_n = args.quad_n > 0 ? args.quad_n : default_quad_points(args.N);
  const SeriesExpansion s =
      args.basis.empty() ? project(f, args.N, quad_n) : project(f, args.N, quad_n, parse_basis_kind(args.basis));
  const int grid = args.grid > 0 ? args.grid : 101;
  if (args.common.format == "csv") {
    std::ostringstream os;
    write_curve_csv(sample_curve(s, &f, grid), os);
    return os.str();
  }
  if (!args.curve.empty()) {
    std::ostringstream os;
    write_curve_csv(sample_curve(s, &f, grid), os);
    write_file(args.curve, os.str());
  }
  return dump_json(to_json(s));
}

// --- bvp ------------------------------------------------------------------

struct BvpArgs {
  Common common;
  std::string boundary = "const:1";
  std::string samples;
  std::string variable = "theta";
  double a = 1.0;
  int N = 8;
  std::optional<double> r_max;
  int nr = 11;
  int ntheta = 13;
  int quad_n = 0;
  std::string grid_out;
  bool units_of_a = false;
};

BoundaryData resolve_boundary(const BvpArgs& args) {
  if (args.variable == "x") {
    FunctionSpec G = args.samples.empty() ? make_builtin(args.boundary, -1.0, 1.0) : load_samples_csv(args.samples);
    return BoundaryData::from_x(args.a, std::move(G));
  }
  FunctionSpec F = args.samples.empty() ? make_builtin(args.boundary, 0.0, std::numbers::pi)
                                        : load_samples_csv(args.samples);
  const std::string name = F.name();
  const auto jumps = F.jump_points();
  return BoundaryData::from_theta(args.a, [F](double theta) { return F(theta); }, jumps, name);
}

std::string cmd_bvp(const BvpArgs& args) {
  if (args.N < 0) {
    throw InvalidArgument("--N must be non-negative");
  }
  const double r_max = args.r_max.value_or(4.0 * args.a);
  if (!(r_max > args.a)) {
    throw InvalidArgument("--r-max must exceed the radius --a");
  }
  if (args.nr < 2 || args.ntheta < 2) {
    throw InvalidArgument("--nr and --ntheta must be at least 2");
  }
  const BoundaryData bd = resolve_boundary(args);
  const int quad_n = args.quad_n > 0 ? args.quad_n : default_quad_points(args.N);
  const SphereSolution sol = solve_exterior(bd, args.N, quad_n);
  const bool want_grid = args.common.format == "csv" || !args.grid_out.empty();
  std::string grid_csv;
  if (want_grid) {
    std::ostringstream os;
    write_field_csv(emit_field_grid(sol, r_max, args.nr, args.ntheta, args.units_of_a), os);
    grid_csv = os.str();
  }
  if (args.common.format == "csv") {
    return grid_csv;
  }
  if (!args.grid_out.empty()) {
    write_file(args.grid_out, grid_csv);
  }
  return dump_json(to_json(sol));
}

// --- beukers --------------------------------------------------------------

struct BeukersArgs {
  Common common;
  int n = 0;
  std::string f = "exp";
  int quad_n = 64;
};

std::string cmd_beukers(const BeukersArgs& args) {
  if (args.n < 0) {
    throw InvalidArgument("--n must be non-negative");
  }
  const SmoothFunction f = make_smooth_builtin(args.f, args.n);
  const BeukersReport report = run_beukers_experiment(args.n, f, args.quad_n);
  if (args.common.format == "csv") {
    std::ostringstream os;
    os << "n,f,left,right,abs_diff,bound\n"
       << report.n << ',' << report.function << ',' << format_double(report.left) << ','
       << format_double(report.right) << ',' << format_double(report.abs_diff) << ','
       << format_double(report.bound) << '\n';
    return os.str();
  }
  return dump_json(to_json(report));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legendre polynomial toolkit", "legkit"};
  app.require_subcommand(1);

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "Exact coefficients of P_n (or the shifted P~_n)");
  poly_cmd->add_option("--n", poly.n, "Degree")->required();
  poly_cmd->add_option("--basis", poly.basis, "legendre | shifted")->check(CLI::IsMember({"legendre", "shifted"}));
  poly_cmd->add_flag("--scale-2adic", poly.scale_2adic, "Multiply by 2^nu_2(n!) to clear denominators");
  add_common(poly_cmd, poly.common);

  ShiftedArgs shifted;
  auto* shifted_cmd = app.add_subcommand("shifted", "Shifted Legendre polynomial with its identities");
  shifted_cmd->add_option("--n", shifted.n, "Degree")->required();
  add_common(shifted_cmd, shifted.common);

  RootsArgs roots;
  auto* roots_cmd = app.add_subcommand("roots", "Roots of P_n");
  roots_cmd->add_option("--n", roots.n, "Degree (>= 1)")->required();
  roots_cmd->add_option("--tol", roots.tol, "Residual tolerance on |P_n|");
  add_common(roots_cmd, roots.common);

  QuadArgs quad;
  auto* quad_cmd = app.add_subcommand("quad", "Gauss-Legendre rule and integral over [a, b]");
  quad_cmd->add_option("--n", quad.n, "Number of points")->required();
  quad_cmd->add_option("--a", quad.a, "Left endpoint");
  quad_cmd->add_option("--b", quad.b, "Right endpoint");
  quad_cmd->add_option("--f", quad.f, "Builtin integrand");
  quad_cmd->add_option("--samples", quad.samples, "CSV table x,y used instead of --f");
  add_common(quad_cmd, quad.common);

  ExpandArgs expand;
  auto* expand_cmd = app.add_subcommand("expand", "Fourier-Legendre projection");
  expand_cmd->add_option("--f", expand.f, "Builtin function");
  expand_cmd->add_option("--samples", expand.samples, "CSV table x,y used instead of --f");
  expand_cmd->add_option("--N", expand.N, "Truncation degree")->required();
  expand_cmd->add_option("--a", expand.a, "Left endpoint");
  expand_cmd->add_option("--b", expand.b, "Right endpoint");
  expand_cmd->add_option("--basis", expand.basis, "legendre | shifted | mapped (default: from interval)");
  expand_cmd->add_option("--quad-n", expand.quad_n, "Quadrature points per piece");
  expand_cmd->add_option("--grid", expand.grid, "Curve sample count");
  expand_cmd->add_option("--curve", expand.curve, "Write the x,f,f_approx curve to this CSV file");
  add_common(expand_cmd, expand.common);

  BvpArgs bvp;
  auto* bvp_cmd = app.add_subcommand("bvp", "Exterior Laplace problem on a sphere");
  bvp_cmd->add_option("--boundary", bvp.boundary, "Builtin boundary potential");
  bvp_cmd->add_option("--samples", bvp.samples, "CSV table of the boundary potential");
  bvp_cmd->add_option("--boundary-variable", bvp.variable, "theta | x (x = cos theta)")
      ->check(CLI::IsMember({"theta", "x"}));
  bvp_cmd->add_option("--a", bvp.a, "Sphere radius");
  bvp_cmd->add_option("--N", bvp.N, "Truncation degree");
  bvp_cmd->add_option("--r-max", bvp.r_max, "Outer grid radius (default 4a)");
  bvp_cmd->add_option("--nr", bvp.nr, "Radial grid points");
  bvp_cmd->add_option("--ntheta", bvp.ntheta, "Polar grid points");
  bvp_cmd->add_option("--quad-n", bvp.quad_n, "Quadrature points");
  bvp_cmd->add_option("--grid-out", bvp.grid_out, "Write the r,theta,V grid to this CSV file");
  bvp_cmd->add_flag("--units-of-a", bvp.units_of_a, "Report r in units of a");
  add_common(bvp_cmd, bvp.common);

  BeukersArgs beukers;
  auto* beukers_cmd = app.add_subcommand("beukers", "Integration-by-parts experiment with P~_n");
  beukers_cmd->add_option("--n", beukers.n, "Degree")->required();
  beukers_cmd->add_option("--f", beukers.f, "Builtin smooth function");
  beukers_cmd->add_option("--quad-n", beukers.quad_n, "Quadrature points");
  add_common(beukers_cmd, beukers.common);

  std::vector<std::string> argv_store{"legkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) {
    argv.push_back(a.data());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (poly_cmd->parsed()) {
      emit(poly.common, out, cmd_poly(poly));
    } else if (shifted_cmd->parsed()) {
      emit(shifted.common, out, cmd_shifted(shifted));
    } else if (roots_cmd->parsed()) {
      emit(roots.common, out, cmd_roots(roots));
    } else if (quad_cmd->parsed()) {
      emit(quad.common, out, cmd_quad(quad));
    } else if (expand_cmd->parsed()) {
      emit(expand.common, out, cmd_expand(expand));
    } else if (bvp_cmd->parsed()) {
      emit(bvp.common, out, cmd_bvp(bvp));
    } else if (beukers_cmd->parsed()) {
      emit(beukers.common, out, cmd_beukers(beukers));
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputFileError;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kConvergenceError;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

} // namespace legkit::cli
