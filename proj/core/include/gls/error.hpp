#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gls {

/// Failure categories shared by every module. The name of each code is what
/// the command-line tool reports, so keep `error_name` in sync.
enum class ErrorCode {
  InvalidDomain,
  NonPositivePsi,
  BadParams,
  OutOfDomain,
  NonFiniteObjective,
  EmptyInterior,
  DomainMismatch,
  BadNorm,
  EmptyGrid,
  Overflow,
  OutOfRange,
  DomainViolation,
  BadResolution,
  NoConvergence,
  DegenerateInput,
  PreconditionViolation,
  ParseError,
  IoError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace gls
