#include "k3/error.hpp"

namespace k3 {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownLattice: return "UnknownLattice";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::BadGram: return "BadGram";
    case ErrorCode::BadSublattice: return "BadSublattice";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NonIntegralBalance: return "NonIntegralBalance";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::ForbiddenEvenSet: return "ForbiddenEvenSet";
    case ErrorCode::BadPolarization: return "BadPolarization";
    case ErrorCode::GlueNotFound: return "GlueNotFound";
    case ErrorCode::NoValence: return "NoValence";
    case ErrorCode::ValenceNotUnique: return "ValenceNotUnique";
    case ErrorCode::InconsistentValence: return "InconsistentValence";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace k3
