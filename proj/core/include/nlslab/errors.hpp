#pragma once

#include <stdexcept>
#include <string>

namespace nlslab {

// Base class for failures of the numerical machinery (as opposed to misuse,
// which throws std::invalid_argument).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureError : NumericalError {
    using NumericalError::NumericalError;
};

struct DegenerateFrameError : NumericalError {
    using NumericalError::NumericalError;
};

struct NoConvergenceError : NumericalError {
    using NumericalError::NumericalError;
};

// Newton iteration wandered off the two-soliton chart (mu <= 0 or overlap).
struct LeftManifoldError : NumericalError {
    using NumericalError::NumericalError;
};

struct CollisionTimeError : NumericalError {
    using NumericalError::NumericalError;
};

struct IllPosedSourceError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace nlslab
