#pragma once

#include <stdexcept>
#include <string>

namespace hilbsam {

/// Failure categories. Each maps to one CLI exit code (see cli.hpp).
enum class ErrorKind {
  parse,            // malformed input text
  precondition,     // e.g. ideal not m-primary, ring mismatch
  not_stabilized,   // Hilbert-Samuel function did not settle within the cap
  resource_limit,   // deadline, exponent or depth cap hit
  rationality,      // irrational singular direction in a blow-up
  invariant         // an internal consistency check failed: a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::precondition, what) {}
};

struct RingMismatch : PreconditionError {
  RingMismatch() : PreconditionError("operands belong to different rings") {}
};

/// Input curve has a repeated component.
struct NonReducedError : PreconditionError {
  explicit NonReducedError(const std::string& what) : PreconditionError(what) {}
};

struct NotStabilized : Error {
  explicit NotStabilized(const std::string& what)
      : Error(ErrorKind::not_stabilized, what) {}
};

struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& what)
      : Error(ErrorKind::resource_limit, what) {}
};

struct DepthExceeded : ResourceLimit {
  explicit DepthExceeded(const std::string& what) : ResourceLimit(what) {}
};

struct RationalityError : Error {
  explicit RationalityError(const std::string& what)
      : Error(ErrorKind::rationality, what) {}
};

struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& what)
      : Error(ErrorKind::invariant, what) {}
};

/// A proven inequality failed on computed data.
struct InequalityViolation : InvariantViolation {
  explicit InequalityViolation(const std::string& what)
      : InvariantViolation(what) {}
};

}  // namespace hilbsam
