#pragma once

#include <stdexcept>
#include <string>

namespace bayesbound {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// probability vectors
struct EmptyDistribution : Error { using Error::Error; };
struct NegativeWeight : Error { using Error::Error; };
struct SumOutOfTolerance : Error { using Error::Error; };
struct ZeroEvidence : Error { using Error::Error; };

// numerics
struct DimensionTooLarge : Error { using Error::Error; };

/// Thrown when adaptive quadrature cannot certify the requested tolerance.
/// Carries the best available estimate and its error bound.
struct MaxDepthExceeded : Error {
    MaxDepthExceeded(const std::string& msg, double estimate_, double error_bound_)
        : Error(msg), estimate(estimate_), error_bound(error_bound_) {}
    double estimate;
    double error_bound;
};

// bounds
struct BetaNotNegative : Error { using Error::Error; };
struct NotBinary : Error { using Error::Error; };
struct NegativeEquivocation : Error { using Error::Error; };

// channels & generic argument validation
struct DimensionMismatch : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// random coding
struct BudgetExceeded : Error { using Error::Error; };

}  // namespace bayesbound
