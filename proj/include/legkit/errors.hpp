#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace legkit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (|x| >= 1 on the
/// derivative relation path, |t| >= 1 in the generating function, r < a, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed request: b <= a, degenerate grid sizes, negative degree.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Newton/bisection exceeded its iteration budget.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// Two independent routes to the same quantity disagreed, or a value that is
/// a theorem (integrality, say) failed to hold. Always a library bug.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// A SmoothFunction was asked for a derivative beyond its declared order.
class OrderTooLow : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

/// Evaluating an integrand failed at a quadrature node.
class EvaluationError : public Error {
public:
  EvaluationError(std::size_t node_index, const std::string& what);
  std::size_t node_index() const noexcept { return node_index_; }

private:
  std::size_t node_index_;
};

/// Unreadable or malformed input file. line() is 1-based, 0 when unknown.
class InputError : public Error {
public:
  InputError(std::string path, std::size_t line, const std::string& what);
  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

private:
  std::string path_;
  std::size_t line_;
};

} // namespace legkit
