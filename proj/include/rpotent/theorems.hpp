#pragma once

// Property suites: seeded samplers for each family of matrices the results
// talk about, one check per result, and a runner that aggregates trials in
// index order. Used by `rpotent verify` and by the acceptance tests.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rpotent/generators.hpp"
#include "rpotent/matrix.hpp"

namespace rpotent::suites {

struct TrialOutcome {
  bool passed = true;
  // Sample did not meet the hypothesis; not counted.
  bool skipped = false;
  std::string detail;
  // Offending input (matrix JSON, or an array of generator matrices).
  std::string input_json;
};

struct Counterexample {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string detail;
  std::string input_json;
};

struct SuiteResult {
  std::string id;
  std::string title;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::optional<Counterexample> first_failure;
  std::vector<std::string> notes;

  std::size_t failed() const { return trials - passed - skipped; }
  bool ok() const { return failed() == 0 && passed > 0; }
};

struct SuiteOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  // Dimension for the symmetric group and Wielandt suites; all defaults
  // when absent.
  std::optional<std::size_t> n;
};

// ---- samplers (deterministic per seed) ------------------------------------

// r in {2, 3, 4, 5}, any rank, n <= 36.
GeneratedMatrix sample_r_potent(std::uint64_t seed);
// rank > r - 1.
GeneratedMatrix sample_rank_exceeds(std::uint64_t seed, std::size_t max_size = generator_max_size);
// r in {3, 4, 5}, rank <= r - 1, singular, powers 2..r-1 with a zero on the
// diagonal.
GeneratedMatrix sample_singular_zero_diagonal(std::uint64_t seed);
// Indecomposable of rank exactly r - 1.
GeneratedMatrix sample_indecomposable_top_rank(std::uint64_t seed);
// Alternates positive and zero-padded rank-one idempotents.
RMatrix sample_rank_one_idempotent(std::uint64_t seed, bool zero_padded);
// Primitive nonnegative matrix with random positions of value 1..3.
RMatrix sample_primitive(std::size_t n, std::uint64_t seed);
// 1-3 r-potent generators of rank > r - 1, small dimension, drawn from the
// random generators or from permutation matrices, and resampled until every
// member of the generated semigroup is r-potent of rank > r - 1.
std::vector<RMatrix> sample_rank_exceeds_generators(std::uint64_t seed, unsigned* r_out = nullptr);

// Exact closure stays within `cap` members, all r-potent of rank > r - 1.
// Stops at the first member that is not.
bool closure_meets_rank_hypothesis(const std::vector<RMatrix>& generators, unsigned r, std::size_t cap);

// ---- checks ----------------------------------------------------------------

TrialOutcome check_rank_trace(const GeneratedMatrix& g);
TrialOutcome check_predicted_decomposable(const GeneratedMatrix& g);
// Block classification, rank sum, nonzero-count bounds, a linear extension
// without adjacent zero blocks and total <= 2k + 1.
TrialOutcome check_structure(const GeneratedMatrix& g);
TrialOutcome check_rank_one_idempotent(const RMatrix& a);
TrialOutcome check_zero_diagonal_powers(const GeneratedMatrix& g);
TrialOutcome check_kronecker(const GeneratedMatrix& a, const GeneratedMatrix& b);
TrialOutcome check_cyclic_semigroup(const GeneratedMatrix& g);
TrialOutcome check_wielandt(const RMatrix& a);
TrialOutcome check_perron_value(const GeneratedMatrix& g);
TrialOutcome check_trace_zero(const GeneratedMatrix& g);
// Closure completes, a common zero entry exists, and the three equivalent
// decomposability routes agree.
TrialOutcome check_semigroup_common_zero(const std::vector<RMatrix>& generators, unsigned r);
// Three-way agreement only.
TrialOutcome check_semigroup_equivalences(const std::vector<RMatrix>& generators);
TrialOutcome check_rank_floor(const std::vector<RMatrix>& generators, unsigned r);

// ---- runner ----------------------------------------------------------------

struct TheoremInfo {
  std::string id;
  std::string title;
};

const std::vector<TheoremInfo>& theorem_catalog();

// Throws InvalidInput for an unknown id.
SuiteResult run_theorem(const std::string& id, const SuiteOptions& options);

// Runs `count` trials, trial i seeded with derive_seed(seed, i).
template <class Trial>
SuiteResult run_trials(const std::string& id, const std::string& title, std::size_t count,
                       std::uint64_t seed, Trial trial);

// JSON array of matrices.
std::string matrices_json(const std::vector<RMatrix>& ms);

}  // namespace rpotent::suites

#include "rpotent/parallel.hpp"
#include "rpotent/random.hpp"

namespace rpotent::suites {

template <class Trial>
SuiteResult run_trials(const std::string& id, const std::string& title, std::size_t count,
                       std::uint64_t seed, Trial trial) {
  const auto outcomes = parallel::run_trials(count, [&](std::size_t i) { return trial(derive_seed(seed, i)); });
  SuiteResult result{id, title, count, 0, 0, std::nullopt, {}};
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.skipped) {
      ++result.skipped;
    } else if (o.passed) {
      ++result.passed;
    } else if (!result.first_failure) {
      result.first_failure = Counterexample{i, derive_seed(seed, i), o.detail, o.input_json};
    }
  }
  return result;
}

}  // namespace rpotent::suites
