#pragma once

#include <stdexcept>
#include <string>

namespace refl {

/// Raised when an enumeration would exceed the configured element budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computed object violates a mathematical invariant that
/// should hold unconditionally. Seeing one means there is a bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

inline constexpr std::size_t kDefaultOrderBudget = 1'000'000;

}  // namespace refl
