#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ouroboros {

/// A precondition on user-supplied data was violated (bad dimension,
/// coefficient sum out of tolerance, invalid distribution, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Expression text did not match the grammar. `offset` is the byte offset
/// into the input where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("at offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        detail_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

/// Numerical evaluation failed (division by zero, point too short).
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ouroboros
