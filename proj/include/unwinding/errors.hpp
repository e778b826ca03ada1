#pragma once

#include <stdexcept>

namespace unwinding {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : Error { using Error::Error; };
struct DegreeZero : Error { using Error::Error; };
struct NonPositiveLambda : Error { using Error::Error; };
struct ZeroRoot : Error { using Error::Error; };
struct RootOnOrOutsideBoundary : Error { using Error::Error; };
struct RootOnBoundary : Error { using Error::Error; };
struct NonPositiveRadius : Error { using Error::Error; };
struct PoleEvaluation : Error { using Error::Error; };
struct RootOutsideDisk : Error { using Error::Error; };
struct RootFindingFailed : Error { using Error::Error; };
struct RadiusSelectionFailed : Error { using Error::Error; };
struct QuadratureNonConvergence : Error { using Error::Error; };
struct LambdaTooSmall : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct RootNotCaptured : Error { using Error::Error; };
struct BracketInvalid : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

}  // namespace unwinding
