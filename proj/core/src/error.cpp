#include "kneser/error.hpp"

namespace kneser {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NonInvolutiveGluing: return "NonInvolutiveGluing";
    case ErrorCode::SelfGluedFace: return "SelfGluedFace";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InconsistentCrossings: return "InconsistentCrossings";
    case ErrorCode::EmptySurface: return "EmptySurface";
    case ErrorCode::VertexLinkingRejected: return "VertexLinkingRejected";
    case ErrorCode::InvalidAfterCrush: return "InvalidAfterCrush";
    case ErrorCode::TerminationGuardTripped: return "TerminationGuardTripped";
    case ErrorCode::CenterHit: return "CenterHit";
    case ErrorCode::CenterOnSurface: return "CenterOnSurface";
    case ErrorCode::ZeroArea: return "ZeroArea";
    case ErrorCode::SampleBudgetExhausted: return "SampleBudgetExhausted";
    case ErrorCode::InconsistentLabels: return "InconsistentLabels";
    case ErrorCode::NotASphere: return "NotASphere";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace kneser
