#pragma once

#include <stdexcept>
#include <string>

namespace wcurve {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// field construction and arithmetic
struct NonPrimeModulus : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };
struct InvalidFieldSpec : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct InfiniteField : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };

// polynomial division
struct NonMonicDivisor : Error { using Error::Error; };

// points
struct SingularPoint : Error { using Error::Error; };
struct DegenerateTangent : Error { using Error::Error; };

// coordinate-ring linear algebra
struct SingularMatrix : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };

// randomized identity checking
struct SamplingExhausted : Error { using Error::Error; };

// literal and grammar errors (CLI exit code 2)
struct ParseError : Error { using Error::Error; };

}  // namespace wcurve
