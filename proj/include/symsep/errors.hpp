#pragma once

#include <stdexcept>
#include <string>

namespace symsep {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSquareError : Error { using Error::Error; };
struct NonHermitianError : Error { using Error::Error; };
struct ShapeMismatchError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct BasisSizeMismatchError : Error { using Error::Error; };
struct NotSymmetricError : Error { using Error::Error; };
struct NotPermutationallyInvariantError : Error { using Error::Error; };
struct NotPptError : Error { using Error::Error; };
struct NotPsdError : Error { using Error::Error; };
struct NotSymmetricOperatorError : Error { using Error::Error; };
struct BadPartitionError : Error { using Error::Error; };
struct BadDecompositionError : Error { using Error::Error; };
struct DimensionTooLargeError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct NonHermitianGeneratorError : Error { using Error::Error; };
struct UnknownBuiltinError : Error { using Error::Error; };
struct UnsupportedError : Error { using Error::Error; };

}  // namespace symsep
