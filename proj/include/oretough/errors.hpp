#pragma once

#include <stdexcept>
#include <string>

namespace oretough {

// Raised when an operation is asked to exceed its documented size budget.
// Distinct from std::invalid_argument so sweeps can record the trip and move on.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oretough
