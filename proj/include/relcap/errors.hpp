#ifndef RELCAP_ERRORS_HPP
#define RELCAP_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace relcap {

// Malformed inputs: bad constraint shapes, values outside a permutation's
// carrier, arity mismatches, unknown catalog names.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An inverse was applied to something outside the forward image.
struct RecoveryError : UsageError {
  using UsageError::UsageError;
};

// An enumeration would exceed the configured candidate budget.
struct ResourceError : std::runtime_error {
  std::uint64_t estimate;
  std::uint64_t budget;
  ResourceError(std::uint64_t estimate_, std::uint64_t budget_)
      : std::runtime_error("enumeration budget exceeded: estimated " +
                           std::to_string(estimate_) + " candidates against budget " +
                           std::to_string(budget_)),
        estimate(estimate_), budget(budget_) {}
};

// Collected evidence contradicts itself (e.g. both directions of a strict
// order provable).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace relcap

#endif
