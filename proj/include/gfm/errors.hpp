#pragma once

#include <stdexcept>
#include <string>

namespace gfm {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A value or document violates a stated invariant (bad parameter file,
/// non-positive physical constant, malformed schedule, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// An iterative solver failed to converge (scalar root, Newton, integrator).
struct SolverError : Error {
    using Error::Error;
};

/// A matrix operation hit a singular or near-defective case.
struct NumericalError : Error {
    using Error::Error;
};

/// File or JSON input could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

} // namespace gfm
