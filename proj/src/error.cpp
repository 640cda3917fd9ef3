#include "jordan/error.hpp"

namespace jordan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NoRootsOfUnity: return "NoRootsOfUnity";
    case ErrorCode::BadGenerator: return "BadGenerator";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::BadDelta: return "BadDelta";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::OffCurve: return "OffCurve";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::NotTorsion: return "NotTorsion";
    case ErrorCode::EvalAtSupport: return "EvalAtSupport";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::DegenerateAfterRetries: return "DegenerateAfterRetries";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::NonConstantCommutator: return "NonConstantCommutator";
    case ErrorCode::ScaleNotRootOfUnity: return "ScaleNotRootOfUnity";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace jordan
