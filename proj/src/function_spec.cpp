#include "legkit/function_spec.hpp"

#include "legkit/errors.hpp"
#include "legkit/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace legkit {

namespace {

bool parse_double(const std::string& text, double& out) {
  std::size_t pos = 0;
  try {
    out = std::stod(text, &pos);
  } catch (const std::exception&) {
    return false;
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  return pos == text.size();
}

bool parse_nonneg_int(const std::string& text, int& out) {
  if (text.empty() || text.size() > 6) {
    return false;
  }
  for (const char c : text) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  out = std::stoi(text);
  return true;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

} // namespace

void FunctionSpec::validate_jumps(const std::vector<double>& jumps, double a, double b) {
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (!(jumps[i] > a && jumps[i] < b)) {
      throw InvalidArgument("jump point outside the open domain");
    }
    if (i > 0 && !(jumps[i] > jumps[i - 1])) {
      throw InvalidArgument("jump points must be strictly increasing");
    }
  }
}

FunctionSpec FunctionSpec::builtin(std::string name, std::function<double(double)> f, double a, double b,
                                   std::vector<double> jump_points) {
  if (!(b > a)) {
    throw InvalidArgument("function domain needs b > a");
  }
  validate_jumps(jump_points, a, b);
  FunctionSpec out;
  out.kind_ = Kind::Builtin;
  out.name_ = std::move(name);
  out.fn_ = std::move(f);
  out.a_ = a;
  out.b_ = b;
  out.jumps_ = std::move(jump_points);
  return out;
}

FunctionSpec FunctionSpec::polynomial(ExactPoly p, double a, double b) {
  if (!(b > a)) {
    throw InvalidArgument("function domain needs b > a");
  }
  FunctionSpec out;
  out.kind_ = Kind::Polynomial;
  out.name_ = "polynomial";
  out.a_ = a;
  out.b_ = b;
  out.poly_ = std::move(p);
  return out;
}

FunctionSpec FunctionSpec::sampled(std::vector<double> xs, std::vector<double> ys, std::vector<double> jump_points) {
  if (xs.size() < 2 || xs.size() != ys.size()) {
    throw InvalidArgument("sampled table needs >= 2 (x, y) pairs");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) {
      throw InvalidArgument("sampled abscissae must be strictly increasing");
    }
  }
  validate_jumps(jump_points, xs.front(), xs.back());
  FunctionSpec out;
  out.kind_ = Kind::Sampled;
  out.name_ = "samples";
  out.a_ = xs.front();
  out.b_ = xs.back();
  out.jumps_ = std::move(jump_points);
  out.xs_ = std::move(xs);
  out.ys_ = std::move(ys);
  return out;
}

FunctionSpec FunctionSpec::on_domain(double a, double b) const {
  if (!(b > a)) {
    throw InvalidArgument("function domain needs b > a");
  }
  FunctionSpec out = *this;
  out.a_ = a;
  out.b_ = b;
  out.jumps_.clear();
  for (const double j : jumps_) {
    if (j > a && j < b) {
      out.jumps_.push_back(j);
    }
  }
  return out;
}

FunctionSpec FunctionSpec::with_jumps(std::vector<double> jump_points) const {
  validate_jumps(jump_points, a_, b_);
  FunctionSpec out = *this;
  out.jumps_ = std::move(jump_points);
  return out;
}

double FunctionSpec::operator()(double x) const {
  switch (kind_) {
  case Kind::Builtin:
    return fn_(x);
  case Kind::Polynomial:
    return poly_->eval(x);
  case Kind::Sampled:
    break;
  }
  if (!(x >= xs_.front() && x <= xs_.back())) {
    throw DomainError("x = " + std::to_string(x) + " outside the sampled range");
  }
  auto hi = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (hi == xs_.end()) {
    return ys_.back();
  }
  const auto i = static_cast<std::size_t>(hi - xs_.begin());
  const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
  return ys_[i - 1] + t * (ys_[i] - ys_[i - 1]);
}

std::vector<std::pair<double, double>> FunctionSpec::pieces() const {
  std::vector<std::pair<double, double>> out;
  double left = a_;
  for (const double j : jumps_) {
    out.emplace_back(left, j);
    left = j;
  }
  out.emplace_back(left, b_);
  return out;
}

FunctionSpec make_builtin(const std::string& name, double a, double b) {
  const std::vector<double> origin_jump = (a < 0.0 && b > 0.0) ? std::vector<double>{0.0} : std::vector<double>{};
  int k = 0;
  if (name == "1") {
    return FunctionSpec::builtin(name, [](double) { return 1.0; }, a, b);
  }
  if (name == "x") {
    return FunctionSpec::builtin(name, [](double x) { return x; }, a, b);
  }
  if (name.rfind("x^", 0) == 0 && parse_nonneg_int(name.substr(2), k)) {
    return FunctionSpec::polynomial(ExactPoly::monomial(k), a, b);
  }
  if (name.rfind("cos^", 0) == 0 && parse_nonneg_int(name.substr(4), k)) {
    return FunctionSpec::builtin(name, [k](double x) { return std::pow(std::cos(x), k); }, a, b);
  }
  if (name.size() > 1 && name[0] == 'P' && parse_nonneg_int(name.substr(1), k)) {
    return FunctionSpec::builtin(name, [k](double x) { return eval_recurrence(k, x); }, a, b);
  }
  if (name.rfind("const:", 0) == 0) {
    double v = 0.0;
    if (!parse_double(name.substr(6), v)) {
      throw InvalidArgument("bad constant in '" + name + "'");
    }
    return FunctionSpec::builtin(name, [v](double) { return v; }, a, b);
  }
  if (name == "sign") {
    return FunctionSpec::builtin(
        name, [](double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }, a, b, origin_jump);
  }
  if (name == "abs") {
    return FunctionSpec::builtin(name, [](double x) { return std::abs(x); }, a, b, origin_jump);
  }
  if (name == "exp") {
    return FunctionSpec::builtin(name, [](double x) { return std::exp(x); }, a, b);
  }
  if (name == "sin") {
    return FunctionSpec::builtin(name, [](double x) { return std::sin(x); }, a, b);
  }
  if (name == "cos") {
    return FunctionSpec::builtin(name, [](double x) { return std::cos(x); }, a, b);
  }
  if (name == "inv1p") {
    if (a <= -1.0) {
      throw InvalidArgument("inv1p needs a domain right of -1");
    }
    return FunctionSpec::builtin(name, [](double x) { return 1.0 / (1.0 + x); }, a, b);
  }
  throw InvalidArgument("unknown builtin function '" + name + "'");
}

FunctionSpec load_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError(path, 0, "cannot open file");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') {
      continue;
    }
    const auto comma = text.find(',');
    double x = 0.0;
    double y = 0.0;
    const bool ok = comma != std::string::npos && parse_double(trim(text.substr(0, comma)), x) &&
                    parse_double(trim(text.substr(comma + 1)), y);
    if (!ok) {
      if (!seen_content) {
        seen_content = true; // header
        continue;
      }
      throw InputError(path, line_no, "expected 'x,y' with numeric fields");
    }
    seen_content = true;
    if (!xs.empty() && !(x > xs.back())) {
      throw InputError(path, line_no, "abscissae must be strictly increasing");
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  if (xs.size() < 2) {
    throw InputError(path, line_no, "need at least two samples");
  }
  return FunctionSpec::sampled(std::move(xs), std::move(ys));
}

} // namespace legkit
