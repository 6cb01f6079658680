#include "legkit/errors.hpp"

namespace legkit {

EvaluationError::EvaluationError(std::size_t node_index, const std::string& what)
    : Error("evaluation failed at node " + std::to_string(node_index) + ": " + what),
      node_index_(node_index) {}

InputError::InputError(std::string path, std::size_t line, const std::string& what)
    : Error(path + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
      path_(std::move(path)),
      line_(line) {}

} // namespace legkit
