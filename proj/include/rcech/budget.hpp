#pragma once

#include <stdexcept>
#include <string>

namespace rcech {

// Thrown when an enumeration would exceed its configured size budget.
// Callers surface this as an explicit refusal, never as a wrong answer.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rcech
