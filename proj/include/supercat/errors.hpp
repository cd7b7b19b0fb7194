#pragma once

#include <stdexcept>
#include <string>

namespace supercat {

// A computation that must be exact was not (non-zero remainder, negative
// result of a sum that is a count). Always indicates a bug.
class ArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exhaustive enumeration would exceed the configured path budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace supercat
