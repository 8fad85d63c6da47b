#pragma once

#include <cstddef>
#include <optional>

#include "rpotent/matrix.hpp"

namespace rpotent {

struct PerronOptions {
  double tolerance = 1e-9;
  unsigned max_iterations = 10000;
};

// gcd of all cycle lengths of an indecomposable nonzero matrix.
// Throws HypothesisError for decomposable or zero input.
std::size_t period(const RMatrix& a);

// Indecomposable with period 1.
bool is_primitive(const RMatrix& a);

// Whether a^(n^2 - 2n + 2) is entrywise positive, computed exactly.
// Throws HypothesisError unless a is primitive.
bool wielandt_check(const RMatrix& a);

// n^2 - 2n + 2.
unsigned wielandt_exponent(std::size_t n);

// Spectral radius estimate: the largest Perron value over the cyclic
// strongly connected components, each found by power iteration on a
// primitive cyclic class of its p-th power (p the period) until the
// Collatz-Wielandt bounds agree to `tolerance`, then a p-th root. 0 when
// there is no cycle. Throws InvalidInput for the zero matrix and
// NonConvergence when the bounds have not met within the iteration budget.
double perron_value(const RMatrix& a, const PerronOptions& options = {});

// trace(a) == 0 for an indecomposable r-potent of rank r - 1, r >= 3. Throws
// HypothesisError when any of those hypotheses fail.
bool trace_zero_check(const RMatrix& a, unsigned r);

struct SpectralReport {
  std::optional<std::size_t> period;
  bool is_primitive = false;
  std::optional<double> perron_value;
  std::optional<bool> wielandt_positive;
  bool trace_zero_applicable = false;
  std::optional<bool> trace_zero;
  // Number of eigenvalues on the spectral circle (the period).
  std::optional<std::size_t> expected_peripheral_count;
};

// r = 0 skips the r-potent specific checks.
SpectralReport spectral_report(const RMatrix& a, unsigned r, const PerronOptions& options = {});

}  // namespace rpotent
