#pragma once

#include <stdexcept>
#include <string>

namespace hwalg {

enum class ErrorKind {
  NotRegular,
  TooShort,
  EmptyWord,
  EmptyPattern,
  MalformedShape,
  OccurrenceNotFound,
  NotLiePolynomial,
  InternalNotLie,
  CapTooSmall,
  ParseError,
};

/// Thrown when an operation's precondition is violated or an input
/// cannot be parsed. CLI maps ParseError to exit 2, the rest to exit 3.
class DomainError : public std::runtime_error {
public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw DomainError(kind, what);
}

} // namespace hwalg
