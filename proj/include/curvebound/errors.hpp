#pragma once

#include <stdexcept>

namespace curvebound {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input points are too few, collinear, non-finite, or otherwise unusable.
struct DegenerateInput : Error {
  using Error::Error;
};

/// A shape violates an invariant a construction relies on (should not happen
/// for validated shapes; indicates a bug upstream).
struct DegenerateShape : Error {
  using Error::Error;
};

/// Triangle operation on (near-)collinear or coincident points.
struct DegenerateTriangle : Error {
  using Error::Error;
};

/// Shape description of an unknown or unusable kind.
struct UnsupportedSpec : Error {
  using Error::Error;
};

/// Exact path search asked for more points than the enumeration cap.
struct TooManyPoints : Error {
  using Error::Error;
};

/// Points are not in the required order along an arc.
struct OrderViolation : Error {
  using Error::Error;
};

/// Lens does not satisfy the requested thin-regime apex-angle condition.
struct NotThin : Error {
  using Error::Error;
};

/// A curve-dependent check was invoked without (or with an unusable) curve.
struct MissingAux : Error {
  using Error::Error;
};

/// Integration grid too coarse to see a closed convex curve.
struct GridTooCoarse : Error {
  using Error::Error;
};

/// Bad run configuration (CLI flags, malformed files, invalid grid).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace curvebound
