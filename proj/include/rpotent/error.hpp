#pragma once

#include <stdexcept>
#include <string>

namespace rpotent {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not match (non-square, differing dimensions, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed or invalid input: bad rational text, negative entry, bad file.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An operation was called on a matrix that violates the hypothesis it
// analyses (e.g. a non-r-potent matrix passed to an r-potent-only check).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused because the input is too large.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A generator was asked for a rank it cannot realise.
class UnreachableRank : public Error {
 public:
  using Error::Error;
};

// Floating-point iteration did not reach the tolerance.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double last_estimate)
      : Error(what), last_estimate_(last_estimate) {}
  double last_estimate() const noexcept { return last_estimate_; }

 private:
  double last_estimate_;
};

// Semigroup closure hit its member cap; no verdict can be given.
class TruncatedClosure : public Error {
 public:
  using Error::Error;
};

}  // namespace rpotent
