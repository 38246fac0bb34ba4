#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

// A written ordinal sum that cannot be normalized (increasing exponents).
struct CanonicalityError : Error {
  using Error::Error;
};

// make_sum received parts whose concatenation is not in CNF order.
struct NotCnfOrder : Error {
  using Error::Error;
};

// A coefficient, exponent, digit count or step count exceeded its cap.
struct ResourceLimit : Error {
  using Error::Error;
};

// Exact enumeration space larger than the configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A stated operation precondition does not hold for the given input.
struct PreconditionError : Error {
  using Error::Error;
};

struct NotSubset : Error {
  using Error::Error;
};

struct GroundMismatch : Error {
  using Error::Error;
};

struct ColorOutOfRange : Error {
  using Error::Error;
};

struct WindowOutOfRange : Error {
  using Error::Error;
};

struct BoxTooSmall : Error {
  using Error::Error;
};

// Input set is not large enough for the requested decomposition/sparsification.
struct InsufficientLargeness : Error {
  using Error::Error;
};

// Strict-mode cardinality demand of the base extractor fails.
struct InsufficientInput : Error {
  using Error::Error;
};

// Greedy chain ran out of elements in non-strict mode.
struct ChainStalled : Error {
  using Error::Error;
};

// A post-condition the cited theorem guarantees failed to hold. Loud: a
// confirmed instance would falsify the theorem, not just the run.
struct VerificationFailed : Error {
  using Error::Error;
};

// Neither side of a stabilization round met its largeness demand.
struct SplitFailed : Error {
  SplitFailed(std::size_t round_index, const std::string& what)
      : Error(what), round(round_index) {}
  std::size_t round;
};

}  // namespace emlab
