#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cicy {

// Caller violated an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A result that valid input can never produce, e.g. chi not divisible by 3.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Input is well-formed but mathematically inconsistent (odd chi, Hodge/Euler mismatch).
class AnalysisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace cicy
