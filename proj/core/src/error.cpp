#include "gls/error.hpp"

namespace gls {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::NonPositivePsi: return "NonPositivePsi";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NonFiniteObjective: return "NonFiniteObjective";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::BadNorm: return "BadNorm";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::BadResolution: return "BadResolution";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

}  // namespace gls
