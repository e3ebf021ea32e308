#include "connectoid/errors.hpp"

namespace connectoid {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedInput: return "MalformedInput";
    case ErrorKind::kDepthExhausted: return "DepthExhausted";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kNotConnected: return "NotConnected";
    case ErrorKind::kUnsupportedSize: return "UnsupportedSize";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kNoSuchComponent: return "NoSuchComponent";
    case ErrorKind::kConstructionFailed: return "ConstructionFailed";
    case ErrorKind::kCycleDetected: return "CycleDetected";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

void StepBudget::exhaust() const {
  fail(on_exhaust_, "step budget of " + std::to_string(limit_) + " exhausted");
}

}  // namespace connectoid
