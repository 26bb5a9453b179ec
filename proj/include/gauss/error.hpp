#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gauss {

enum class ErrorKind {
  DivByZeroInterval,
  NegativeRadicand,
  BadModulus,
  NotPrime,
  ModulusMismatch,
  BadLevel,
  NotFermatPrime,
  NoChildren,
  SqrtOfNegative,
  PrecisionCapExceeded,
  ParseError,
  ContextMismatch,
  ZeroDivisor,
  DivByZero,
  VerificationFailed,
  ZeroPolynomial,
  BadDegree,
  NotConstructible,
  Timeout,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so
// callers (and tests) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError,
              what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gauss
