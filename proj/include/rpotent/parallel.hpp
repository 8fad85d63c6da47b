#pragma once

// Data-parallel kernels. Each kernel has an OpenMP version in
// rpotent::parallel and a plain loop in rpotent::serial; the serial copies
// are the reference the tests and benchmarks compare against.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <vector>

#include "rpotent/matrix.hpp"
#include "rpotent/pattern.hpp"

namespace rpotent {

// Outcome of comparing the SCC decomposability test with the subset oracle
// over a family of patterns.
struct SweepResult {
  std::uint64_t checked = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t decomposable = 0;
  // Lowest-indexed pattern where the two routes disagree.
  std::optional<PatternMatrix> first_disagreement;
};

namespace serial {

RMatrix multiply(const RMatrix& a, const RMatrix& b);

// Every one of the 2^(n*n) patterns, n <= 4.
SweepResult exhaustive_oracle_sweep(std::size_t n);
// `count` patterns drawn from seed, pattern i from derive_seed(seed, i).
SweepResult random_oracle_sweep(std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace serial

namespace parallel {

RMatrix multiply(const RMatrix& a, const RMatrix& b);

SweepResult exhaustive_oracle_sweep(std::size_t n);
SweepResult random_oracle_sweep(std::size_t n, std::size_t count, std::uint64_t seed);

int thread_count();

// Runs fn(0) ... fn(count - 1) across threads; results come back in index
// order. If any call throws, the exception of the smallest index is
// rethrown after the loop.
template <class Fn>
auto run_trials(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    try {
      slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Result> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace parallel

// Pattern with index `code`: bit (i * n + j) of code is entry (i, j).
PatternMatrix pattern_from_code(std::size_t n, std::uint64_t code);

}  // namespace rpotent
