#pragma once

#include <stdexcept>
#include <string>

namespace wd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// finite_field
struct NotPrime : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct BadSubfield : Error { using Error::Error; };
struct NotInPrimeField : Error { using Error::Error; };

// cyclotomy
struct NonIntegralPeriod : Error { using Error::Error; };

// diophantine
struct NoSolution : Error { using Error::Error; };
struct AmbiguousOrbit : Error { using Error::Error; };
struct IrrationalResidue : Error { using Error::Error; };

// period_poly
struct UnsupportedOrder : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct IntegralityFailure : Error { using Error::Error; };

// weights
struct NotDividing : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct UndefinedExponent : Error { using Error::Error; };

}  // namespace wd
