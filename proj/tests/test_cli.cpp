#include "cli.hpp"

#include "legkit/json_io.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

using legkit::Json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = legkit::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) {
    n += c == '\n';
  }
  return n;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("poly") {
  const Result p2 = run({"poly", "--n", "2"});
  REQUIRE(p2.code == 0);
  CHECK(p2.json()["coeffs"] == Json::parse(R"(["-1/2", "0", "3/2"])"));
  CHECK(run({"poly", "--n", "3", "--basis", "shifted"}).json()["coeffs"] ==
        Json::parse(R"(["1", "-12", "30", "-20"])"));
  CHECK(run({"poly", "--n", "0"}).json()["coeffs"] == Json::parse(R"(["1"])"));
  const Json scaled = run({"poly", "--n", "4", "--scale-2adic"}).json();
  CHECK(scaled["scale_exponent"] == 3);
  CHECK(scaled["coeffs"] == Json::parse(R"(["3", "0", "-30", "0", "35"])"));
  CHECK(run({"poly", "--n", "-1"}).code == 2);
  CHECK(run({"poly", "--n", "2", "--basis", "hermite"}).code == 2);
  CHECK(run({"poly", "--n", "2", "--format", "csv"}).out == "k,coeff\n0,-1/2\n1,0\n2,3/2\n");
}

TEST_CASE("shifted") {
  const Json j = run({"shifted", "--n", "4"}).json();
  CHECK(j["representations_agree"] == true);
  CHECK(j["value_at_half"] == "3/8");
  CHECK(j["norm_squared"] == "1/9");
}

TEST_CASE("roots") {
  const Json j = run({"roots", "--n", "3"}).json();
  REQUIRE(j["roots"].size() == 3);
  CHECK(j["roots"][1].get<double>() == 0.0);
  CHECK(run({"roots", "--n", "0"}).code == 2);
  ::setenv("LEGKIT_PRECISION_BITS", "113", 1);
  const Json hi = run({"roots", "--n", "3"}).json();
  ::setenv("LEGKIT_PRECISION_BITS", "many", 1);
  CHECK(run({"roots", "--n", "3"}).code == 2);
  ::unsetenv("LEGKIT_PRECISION_BITS");
  CHECK(std::abs(hi["roots"][2].get<double>() - std::sqrt(0.6)) <= 1e-16);
}

TEST_CASE("quad") {
  CHECK(std::abs(run({"quad", "--n", "5", "--a", "0", "--b", "1", "--f", "x^9"}).json()["integral"].get<double>() -
                 0.1) <= 1e-14);
  CHECK(run({"quad", "--n", "1", "--a", "2", "--b", "6", "--f", "1"}).json()["integral"].get<double>() == 4.0);
  const Json two = run({"quad", "--n", "2", "--a", "-1", "--b", "1", "--f", "x^2"}).json();
  CHECK(std::abs(two["integral"].get<double>() - 2.0 / 3.0) <= 1e-15);
  CHECK(two["nodes"].size() == 2);
  CHECK(two["weights"].size() == 2);
  CHECK(run({"quad", "--n", "3", "--a", "1", "--b", "0"}).code == 2);
  CHECK(run({"quad", "--n", "3", "--f", "nope"}).code == 2);
  CHECK(run({"quad", "--n", "3", "--format", "csv"}).out.rfind("node,weight", 0) == 0);
}

TEST_CASE("quad over sample files") {
  const std::string path = "legkit_cli_samples.csv";
  {
    std::ofstream f(path);
    f << "x,y\n0,0\n1,1\n2,0\n";
  }
  const Result ok = run({"quad", "--n", "4", "--a", "0", "--b", "1", "--samples", path});
  REQUIRE(ok.code == 0);
  CHECK(std::abs(ok.json()["integral"].get<double>() - 0.5) <= 1e-15);
  {
    std::ofstream f(path);
    f << "x,y\n0,0\n1,\n";
  }
  const Result bad = run({"quad", "--n", "4", "--samples", path});
  CHECK(bad.code == 3);
  CHECK(bad.err.find(":3") != std::string::npos);
  CHECK(run({"quad", "--n", "4", "--samples", "missing.csv"}).code == 3);
  std::remove(path.c_str());
}

TEST_CASE("expand") {
  const Json sign = run({"expand", "--f", "sign", "--N", "9"}).json();
  REQUIRE(sign["coeffs"].size() == 10);
  for (int n = 0; n <= 9; n += 2) {
    CHECK(std::abs(sign["coeffs"][n].get<double>()) <= 1e-14);
  }
  const Json x2 = run({"expand", "--f", "x^2", "--N", "4"}).json();
  const double want[] = {1.0 / 3.0, 0, 2.0 / 3.0, 0, 0};
  for (int n = 0; n <= 4; ++n) {
    CHECK(std::abs(x2["coeffs"][n].get<double>() - want[n]) <= 1e-13);
  }
  const Json p3 = run({"expand", "--f", "P3", "--N", "5"}).json();
  for (int n = 0; n <= 5; ++n) {
    CHECK(std::abs(p3["coeffs"][n].get<double>() - (n == 3 ? 1.0 : 0.0)) <= 1e-13);
  }
  const Result csv = run({"expand", "--f", "abs", "--N", "6", "--grid", "21", "--format", "csv"});
  CHECK(csv.out.rfind("x,f,f_approx\n", 0) == 0);
  CHECK(count_lines(csv.out) == 22);
  const Json shifted = run({"expand", "--f", "x", "--N", "1", "--a", "0", "--b", "1"}).json();
  CHECK(shifted["basis"] == "shifted");
  CHECK(run({"expand", "--f", "x", "--N", "3", "--quad-n", "2"}).code == 2);
}

TEST_CASE("bvp") {
  const Json dip = run({"bvp", "--boundary", "cos", "--a", "1", "--N", "4"}).json();
  REQUIRE(dip["coeffs"].size() == 5);
  for (int n = 0; n <= 4; ++n) {
    CHECK(std::abs(dip["coeffs"][n].get<double>() - (n == 1 ? 1.0 : 0.0)) <= 1e-12);
  }
  const Json mono = run({"bvp", "--boundary", "const:1", "--N", "3"}).json();
  CHECK(std::abs(mono["coeffs"][0].get<double>() - 1.0) <= 1e-14);
  const Result grid = run({"bvp", "--boundary", "cos", "--nr", "4", "--ntheta", "6", "--format", "csv"});
  CHECK(count_lines(grid.out) == 1 + 4 * 6);
  const Json xs = run({"bvp", "--boundary", "sign", "--boundary-variable", "x", "--N", "3"}).json();
  CHECK(std::abs(xs["coeffs"][1].get<double>() - 1.5) <= 1e-13);
  CHECK(run({"bvp", "--boundary", "cos", "--a", "2", "--r-max", "1"}).code == 2);
}

TEST_CASE("beukers") {
  const Json x2 = run({"beukers", "--n", "2", "--f", "x^2"}).json();
  CHECK(std::abs(x2["left"].get<double>() - 1.0 / 30.0) <= 1e-15);
  CHECK(std::abs(x2["right"].get<double>() - 1.0 / 30.0) <= 1e-15);
  const Json e0 = run({"beukers", "--n", "0", "--f", "exp"}).json();
  CHECK(std::abs(e0["left"].get<double>() - (std::numbers::e - 1.0)) <= 1e-14);
  CHECK(std::abs(e0["right"].get<double>() - (std::numbers::e - 1.0)) <= 1e-14);
  const Json e4 = run({"beukers", "--n", "4", "--f", "exp"}).json();
  CHECK(std::abs(e4["left"].get<double>()) <= std::pow(0.25, 4) / 24.0 * std::numbers::e);
  CHECK(run({"beukers", "--n", "3", "--f", "sign"}).code == 2);
}

TEST_CASE("usage and output plumbing") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"poly"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"poly", "--n", "2", "--format", "xml"}).code == 2);
  const std::string path = "legkit_cli_out.json";
  const Result r = run({"poly", "--n", "2", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["n"] == 2);
  std::remove(path.c_str());
  CHECK(run({"poly", "--n", "2", "--output", "/nonexistent-dir/x.json"}).code == 3);
}

TEST_CASE("byte-identical output") {
  const std::vector<std::string> args{"expand", "--f", "exp", "--N", "12", "--a", "0", "--b", "2"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> bvp{"bvp", "--boundary", "cos^3", "--N", "5", "--format", "csv"};
  CHECK(run(bvp).out == run(bvp).out);
}

}
