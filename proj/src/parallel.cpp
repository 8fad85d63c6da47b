#include "rpotent/parallel.hpp"

#include <omp.h>

#include "rpotent/decomposition.hpp"
#include "rpotent/random.hpp"

namespace rpotent {

PatternMatrix pattern_from_code(std::size_t n, std::uint64_t code) {
  PatternMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((code >> (i * n + j)) & 1U) p.set(i, j);
    }
  }
  return p;
}

namespace {

void require_same_size(const RMatrix& a, const RMatrix& b) {
  if (a.size() != b.size()) {
    throw DimensionError("multiply: dimension mismatch " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

PatternMatrix random_pattern(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  // Vary the density so sparse (often reducible) and dense (often
  // irreducible) patterns both show up.
  const auto density = rng.uniform(1, 9);
  PatternMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.uniform(0, 9) < density) p.set(i, j);
    }
  }
  return p;
}

// 0 when both routes agree, else 1; bit 1 carries the SCC verdict.
unsigned compare_routes(const PatternMatrix& p) {
  const bool scc = is_decomposable(p);
  const bool oracle = brute_force_decomposable(p).has_value();
  return (scc != oracle ? 1U : 0U) | (scc ? 2U : 0U);
}

void check_exhaustive_size(std::size_t n) {
  if (n == 0 || n > 4) throw CapacityError("exhaustive pattern sweep supports 1 <= n <= 4");
}

void record(SweepResult& out, unsigned verdict, const PatternMatrix& p) {
  ++out.checked;
  if (verdict & 2U) ++out.decomposable;
  if (verdict & 1U) {
    ++out.disagreements;
    if (!out.first_disagreement) out.first_disagreement = p;
  }
}

}  // namespace

namespace serial {

RMatrix multiply(const RMatrix& a, const RMatrix& b) {
  require_same_size(a, b);
  const auto n = a.size();
  std::vector<Rational> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(b(k, j)) != 0) out[i * n + j] += aik * b(k, j);
      }
    }
  }
  return RMatrix(n, std::move(out));
}

SweepResult exhaustive_oracle_sweep(std::size_t n) {
  check_exhaustive_size(n);
  SweepResult out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const auto p = pattern_from_code(n, code);
    record(out, compare_routes(p), p);
  }
  return out;
}

SweepResult random_oracle_sweep(std::size_t n, std::size_t count, std::uint64_t seed) {
  SweepResult out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto p = random_pattern(n, derive_seed(seed, i));
    record(out, compare_routes(p), p);
  }
  return out;
}

}  // namespace serial

namespace parallel {

int thread_count() { return omp_get_max_threads(); }

RMatrix multiply(const RMatrix& a, const RMatrix& b) {
  require_same_size(a, b);
  const auto n = a.size();
  std::vector<Rational> out(n * n);
#pragma omp parallel for schedule(static) if (n >= 16)
  for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(b(k, j)) != 0) out[i * n + j] += aik * b(k, j);
      }
    }
  }
  return RMatrix(n, std::move(out));
}

namespace {

// Verdicts are computed in parallel into a flat buffer and folded in index
// order, so the reported first disagreement matches the serial kernel.
template <class MakePattern>
SweepResult sweep(std::uint64_t count, MakePattern make) {
  std::vector<unsigned char> verdicts(count);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    verdicts[static_cast<std::size_t>(i)] =
        static_cast<unsigned char>(compare_routes(make(static_cast<std::uint64_t>(i))));
  }
  SweepResult out;
  for (std::uint64_t i = 0; i < count; ++i) {
    ++out.checked;
    if (verdicts[i] & 2U) ++out.decomposable;
    if (verdicts[i] & 1U) {
      ++out.disagreements;
      if (!out.first_disagreement) out.first_disagreement = make(i);
    }
  }
  return out;
}

}  // namespace

SweepResult exhaustive_oracle_sweep(std::size_t n) {
  check_exhaustive_size(n);
  return sweep(std::uint64_t{1} << (n * n), [n](std::uint64_t code) { return pattern_from_code(n, code); });
}

SweepResult random_oracle_sweep(std::size_t n, std::size_t count, std::uint64_t seed) {
  return sweep(count, [n, seed](std::uint64_t i) { return random_pattern(n, derive_seed(seed, i)); });
}

}  // namespace parallel

}  // namespace rpotent
