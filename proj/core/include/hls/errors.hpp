#pragma once

#include <stdexcept>
#include <string>

namespace hls {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable text, unknown labels, duplicate bracket
/// entries, dimension mismatches.
struct InputError : Error {
  using Error::Error;
};

/// An algebra description that fails its axioms (skew-supersymmetry or the
/// twisted Jacobi identity). The message names the first failing tuple.
struct ValidationError : Error {
  using Error::Error;
};

/// A map or tensor entry that violates the declared Z/2 grading.
struct GradingError : ValidationError {
  using ValidationError::ValidationError;
};

/// An operation was invoked outside its stated hypotheses (e.g. a singular
/// twist map where an invertible one is required).
struct PreconditionError : Error {
  using Error::Error;
};

/// A structural identity that is expected to hold mechanically failed on a
/// concrete input. This is a reportable finding, not a usage error.
struct TheoremViolation : Error {
  using Error::Error;
};

}  // namespace hls
