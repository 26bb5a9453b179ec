#include "gauss/error.hpp"

namespace gauss {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivByZeroInterval: return "DivByZeroInterval";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::BadLevel: return "BadLevel";
    case ErrorKind::NotFermatPrime: return "NotFermatPrime";
    case ErrorKind::NoChildren: return "NoChildren";
    case ErrorKind::SqrtOfNegative: return "SqrtOfNegative";
    case ErrorKind::PrecisionCapExceeded: return "PrecisionCapExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::DivByZero: return "DivByZero";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::NotConstructible: return "NotConstructible";
    case ErrorKind::Timeout: return "Timeout";
  }
  return "Unknown";
}

}  // namespace gauss
