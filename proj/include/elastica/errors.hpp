#pragma once

#include <stdexcept>
#include <string>

namespace elastica {

// Base for all recoverable domain errors (as opposed to input/parse errors,
// which surface as std::invalid_argument from the io layer).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvexityViolation : DomainError {
    using DomainError::DomainError;
};

struct DegenerateShape : DomainError {
    using DomainError::DomainError;
};

struct PointOutside : DomainError {
    using DomainError::DomainError;
};

struct ContainmentUnverified : DomainError {
    using DomainError::DomainError;
};

struct QuadratureUnderflow : DomainError {
    using DomainError::DomainError;
};

struct NonpositiveRadius : DomainError {
    using DomainError::DomainError;
};

struct DegenerateFrame : DomainError {
    using DomainError::DomainError;
};

struct TangentNotFound : DomainError {
    using DomainError::DomainError;
};

struct OutOfRange : DomainError {
    using DomainError::DomainError;
};

struct HypothesisUnmet : DomainError {
    using DomainError::DomainError;
};

struct EpsilonTooLarge : DomainError {
    using DomainError::DomainError;
};

struct FrameMissing : DomainError {
    using DomainError::DomainError;
};

struct FitUnstable : DomainError {
    using DomainError::DomainError;
};

struct ProjectionFailed : DomainError {
    using DomainError::DomainError;
};

struct LineSearchFailed : DomainError {
    using DomainError::DomainError;
};

}  // namespace elastica
