#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lambday {

/// Base of every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceLocation {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceLocation where)
      : Error(message + " at " + std::to_string(where.line) + ":" +
              std::to_string(where.column)),
        where_(where) {}

  const SourceLocation& where() const { return where_; }

 private:
  SourceLocation where_;
};

/// Raised when a precondition on the shape or calculus of an input fails
/// (wrong type shape, Y where none is allowed, non-normal input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A finite domain would exceed the configured element limit.
class DomainTooLarge : public Error {
 public:
  DomainTooLarge(const std::string& type, std::size_t limit)
      : Error("domain of " + type + " exceeds the size limit of " +
              std::to_string(limit) + " elements"),
        type_(type),
        limit_(limit) {}

  const std::string& type_text() const { return type_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string type_;
  std::size_t limit_;
};

/// Reduction ran out of fuel where a normal form was required.
class FuelExhaustedError : public Error {
 public:
  FuelExhaustedError(std::size_t fuel)
      : Error("normalization did not finish within " + std::to_string(fuel) +
              " steps"),
        fuel_(fuel) {}

  std::size_t fuel() const { return fuel_; }

 private:
  std::size_t fuel_;
};

/// An internal consistency check failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace lambday
