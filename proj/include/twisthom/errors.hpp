#pragma once

#include <stdexcept>
#include <string>

namespace twisthom {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Scalars from distinct field extensions were combined.
struct FieldMismatchError : Error {
  using Error::Error;
};

/// Malformed input data (bad simplex lists, non-invertible transports,
/// inconsistent dimensions, unparsable scalars, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// A request that is well-formed but mathematically infeasible
/// (parity obstructions, general-position failures, ...).
struct InfeasibleError : Error {
  using Error::Error;
};

/// No theta-stable parabolic is compatible with the given weight
/// (odd ambient rank with full support).
struct NoCompatibleParabolic : InfeasibleError {
  using InfeasibleError::InfeasibleError;
};

/// The seed vector of a decomposable cycle is not fixed by the
/// monodromy of the subcomplex.
struct MonodromyObstruction : InfeasibleError {
  using InfeasibleError::InfeasibleError;
};

/// Two cycles are not in general position (or the intersection is
/// positive-dimensional where a point was required).
struct GeneralPositionViolation : InfeasibleError {
  using InfeasibleError::InfeasibleError;
};

/// A randomized search ran out of trials without finding a witness.
struct TrialsExhaustedError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

}  // namespace twisthom
