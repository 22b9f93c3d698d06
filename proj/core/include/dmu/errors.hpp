#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace dmu {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad JSON, unknown fields, out-of-range parameters.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// A claimed root does not annihilate the polynomial within tolerance.
class NotARoot : public Error {
public:
    NotARoot(std::complex<double> root, double residual_)
        : Error("not a root: |p(" + std::to_string(root.real()) + (root.imag() < 0 ? "-" : "+") +
                std::to_string(std::abs(root.imag())) + "i)| = " + std::to_string(residual_)),
          root_value(root), residual(residual_) {}
    std::complex<double> root_value;
    double residual;
};

/// Two interpolation nodes (or measure atoms) coincide within tolerance.
class DuplicateNodes : public Error {
public:
    explicit DuplicateNodes(const std::string& what) : Error(what) {}
};

/// An evaluation point that must lie in the open unit disk does not.
class OutsideDisk : public Error {
public:
    explicit OutsideDisk(std::complex<double> z)
        : Error("point outside the open unit disk: |z| = " + std::to_string(std::abs(z))) {}
};

/// Iterative quadrature refinement stalled above the requested tolerance.
class QuadratureNotConverged : public Error {
public:
    QuadratureNotConverged(double estimate_, double error_)
        : Error("quadrature did not converge: estimate " + std::to_string(estimate_) +
                ", error " + std::to_string(error_)),
          estimate(estimate_), error(error_) {}
    double estimate;
    double error;
};

/// A linear solve that should be positive definite failed to factor.
class SolveFailed : public Error {
public:
    explicit SolveFailed(const std::string& what) : Error(what) {}
};

/// A boundary direction coincides with a measure atom where it must not.
class AtomDirection : public Error {
public:
    explicit AtomDirection(double angle)
        : Error("direction coincides with a measure atom: angle = " + std::to_string(angle)) {}
};

/// The one-atom kernel model requires a strictly positive mass.
class NonPositiveAlpha : public Error {
public:
    explicit NonPositiveAlpha(double alpha)
        : Error("atom mass must be positive, got " + std::to_string(alpha)) {}
};

} // namespace dmu
