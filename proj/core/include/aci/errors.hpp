#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aci {

/// Malformed input text. Carries a 1-based line/column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A well-formed request that cannot be carried out on the given data:
/// colon by zero, dependent quadrics, a non-ACI passed to classification,
/// an exhausted retry budget.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algebraic invariant that must hold was found broken. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace aci
