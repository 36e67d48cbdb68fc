#pragma once

#include <stdexcept>

namespace cdc {

/// Invalid parameters: wrong ranges, non-prime characteristic, malformed input.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested computation exceeds the configured desk-scale budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cdc
