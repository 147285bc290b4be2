#pragma once
#include <stdexcept>
#include <string>

namespace dyneval {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Incompatible matrix/vector shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Matrix is singular or too ill-conditioned to invert reliably.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, double condition_estimate)
        : Error(what), condition_(condition_estimate) {}
    double condition_estimate() const { return condition_; }

private:
    double condition_;
};

// Caller violated a stated precondition (argument range, degenerate input).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A linear parameter step was requested for a basis that is not closed
// under linear reparametrization (anything with trig/hyperbolic entries).
class UnsupportedStepError : public Error {
public:
    using Error::Error;
};

// No acceptable square augmentation of the coefficient matrix was found.
class LiftingError : public Error {
public:
    using Error::Error;
};

// Homogeneous point with a (near-)zero weight coordinate at emit time.
class ZeroWeightError : public Error {
public:
    using Error::Error;
};

// Scene file failed to parse or validate.
class SceneError : public Error {
public:
    using Error::Error;
};

}  // namespace dyneval
