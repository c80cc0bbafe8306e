#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plscape {

/// Malformed or out-of-domain input (bad literal, birth >= death, eps <= 0, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A text file failed to parse; carries the 1-based offending line.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The input is well formed but violates the mathematical preconditions of
/// an operation (not a diagram landscape, family not independent, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace plscape
