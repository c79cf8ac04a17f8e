#pragma once

#include <stdexcept>
#include <string>

namespace knotform {

// Common base so callers can catch everything the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Braid word input.
struct NonPositiveLetter : Error { using Error::Error; };
struct EmptyWord : Error { using Error::Error; };
struct NotAKnot : Error { using Error::Error; };

// Matrix / form domain.
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidSeifertMatrix : Error { using Error::Error; };
struct InvalidPower : Error { using Error::Error; };
struct DegenerateForm : Error { using Error::Error; };
struct DefiniteForm : Error { using Error::Error; };

// Framed classes and the stabilization construction.
struct NotPrimitive : Error { using Error::Error; };
struct NotUnitFraming : Error { using Error::Error; };
struct UnreachableFraming : Error { using Error::Error; };
struct NoAttestation : Error { using Error::Error; };

// Census.
struct NotCoprime : Error { using Error::Error; };

// Serialization.
struct ParseError : Error { using Error::Error; };

}  // namespace knotform
