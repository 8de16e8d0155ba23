#pragma once

#include <stdexcept>
#include <string>

namespace grunwald {

/// Caller violated a documented precondition (CLI maps these to exit code 2).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to converge or broke down (CLI exit code 3).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonIntegerShift : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct GridMisalignment : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct UnsupportedOrder : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct BranchCut : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct DegenerateSymbol : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct InsufficientDecay : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct StabilityViolation : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct SingularSystem : NumericalError {
    using NumericalError::NumericalError;
};

struct NonConvergent : NumericalError {
    using NumericalError::NumericalError;
};

struct QuadratureFailure : NumericalError {
    using NumericalError::NumericalError;
};

struct SingularFactorization : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace grunwald
