#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kneser {

enum class ErrorCode {
  Parse,
  NonInvolutiveGluing,
  SelfGluedFace,
  NonOrientable,
  NotClosed,
  Disconnected,
  EmptySupport,
  BudgetExceeded,
  InconsistentCrossings,
  EmptySurface,
  VertexLinkingRejected,
  InvalidAfterCrush,
  TerminationGuardTripped,
  CenterHit,
  CenterOnSurface,
  ZeroArea,
  SampleBudgetExhausted,
  InconsistentLabels,
  NotASphere,
  InvalidArgument,
  Overflow,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code in
/// addition to the human message, so the CLI can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kneser
