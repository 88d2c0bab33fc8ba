#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// Malformed or out-of-range input. The CLI maps this to exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search exceeded its operator-set node budget. The CLI maps this to exit status 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ramsey
