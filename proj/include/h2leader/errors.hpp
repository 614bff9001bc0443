#pragma once

#include <stdexcept>
#include <string>

namespace h2leader {

/// Stable machine-readable error codes. CLI commands surface these verbatim
/// so harnesses can assert on codes instead of message prose.
enum class ErrorCode {
  DisconnectedGraph,
  DuplicateEdge,
  NonpositiveWeight,
  SelfLoop,
  GenerationFailed,
  SizeMismatch,
  DemotedReselected,
  NotASubset,
  ShapeMismatch,
  ZeroNorm,
  PoleEvaluation,
  MultipleZeroEigenvalues,
  CombinatorialBlowup,
  StepTooLarge,
  VerificationFailed,
  ParseError,
  InvalidArgument,
  UsageError,
};

const char* to_string(ErrorCode code) noexcept;

/// Domain error: code + human message + the offending datum, kept separate
/// so the CLI can emit structured JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace h2leader
