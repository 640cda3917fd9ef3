#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jordan {

enum class ErrorCode {
  ModulusMismatch,
  NoRootsOfUnity,
  BadGenerator,
  NotPrime,
  GroupMismatch,
  BudgetExceeded,
  NotASubgroup,
  NotIsotropic,
  BadDelta,
  Singular,
  OffCurve,
  CurveMismatch,
  NotTorsion,
  EvalAtSupport,
  PrecisionLoss,
  DegenerateAfterRetries,
  NotAdmissible,
  ZeroScale,
  LevelMismatch,
  NonConstantCommutator,
  ScaleNotRootOfUnity,
  BasisMismatch,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; code() identifies the
// condition so callers (and tests) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jordan
