#pragma once

#include <stdexcept>
#include <string>

namespace coincider {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameters or malformed input files; maps to CLI exit code 2.
struct InvalidInputError : Error {
  using Error::Error;
};

// Float clustering could not decide a pattern: some inter-cluster distance
// falls inside the ambiguity band.
struct AmbiguousPatternError : Error {
  using Error::Error;
};

// Tuple has its maximum attained at >= k coordinates, so it lies in the
// k-wise maximum diagonal and cannot be cover-classified.
struct NotInWError : Error {
  using Error::Error;
};

// majority_block requires k > q/2.
struct KTooSmallError : Error {
  using Error::Error;
};

// Tuple is not in the expected coincidence stratum.
struct NotInStratumError : Error {
  using Error::Error;
};

// 1-d rotation scan found no sign change at the configured grid.
struct ResolutionTooCoarseError : Error {
  using Error::Error;
};

// A verified mathematical claim failed to hold on computed data.
struct AssertionFailureError : Error {
  using Error::Error;
};

// Expression is not evaluable in exact rational arithmetic.
struct NonRationalError : Error {
  using Error::Error;
};

// Map evaluation failed (division by zero, bad arity, ...).
struct EvaluationError : Error {
  using Error::Error;
};

/// No solver start converged; the best-found residual is in the message.
struct BudgetExhaustedError : Error {
  using Error::Error;
};

}  // namespace coincider
