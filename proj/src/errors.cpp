#include "h2leader/errors.hpp"

namespace h2leader {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::DemotedReselected: return "DemotedReselected";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::PoleEvaluation: return "PoleEvaluation";
    case ErrorCode::MultipleZeroEigenvalues: return "MultipleZeroEigenvalues";
    case ErrorCode::CombinatorialBlowup: return "CombinatorialBlowup";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace h2leader
