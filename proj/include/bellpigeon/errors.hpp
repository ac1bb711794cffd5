#pragma once

#include <stdexcept>

namespace bellpigeon {

// One exception type per failure condition. All derive from
// std::runtime_error so callers can catch broadly; names say what went
// wrong, not where it was detected.

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HermitianityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroProbabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ArityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DistributionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Violation of a value-type invariant (normalization, trace, positivity,
// finiteness) detected at construction time.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bellpigeon
