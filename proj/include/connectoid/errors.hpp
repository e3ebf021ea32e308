#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace connectoid {

enum class ErrorKind {
  kMalformedInput,
  kDepthExhausted,
  kBudgetExceeded,
  kNotConnected,
  kUnsupportedSize,
  kPreconditionViolated,
  kNoSuchComponent,
  kConstructionFailed,
  kCycleDetected,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
/// DepthExhausted and BudgetExceeded are inconclusive: they mean the
/// bounded search ran out, not that the answer is negative.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  bool inconclusive() const noexcept {
    return kind_ == ErrorKind::kDepthExhausted || kind_ == ErrorKind::kBudgetExceeded;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline constexpr std::size_t kDefaultBudget = 2'000'000;

/// Step counter for enumerations. Charging past the limit throws.
class StepBudget {
 public:
  explicit StepBudget(std::size_t limit, ErrorKind on_exhaust = ErrorKind::kBudgetExceeded)
      : limit_(limit), on_exhaust_(on_exhaust) {}

  void charge(std::size_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) exhaust();
  }
  std::size_t used() const noexcept { return used_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  [[noreturn]] void exhaust() const;

  std::size_t limit_;
  std::size_t used_ = 0;
  ErrorKind on_exhaust_;
};

}  // namespace connectoid
