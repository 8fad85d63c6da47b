#pragma once

// Finite semigroups of nonnegative matrices: boolean pattern closure, the
// equivalent decomposability tests (invariant subset of the union pattern,
// common zero entry, zero in the sum of all members), cyclic semigroups of
// r-potents, the rank floor on diagonal blocks, and the symmetric group.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rpotent/decomposition.hpp"
#include "rpotent/matrix.hpp"
#include "rpotent/pattern.hpp"

namespace rpotent {

inline constexpr std::size_t default_closure_cap = 10000;

// Closure cap from RPOTENT_CLOSURE_CAP when set to a positive integer,
// default_closure_cap otherwise.
std::size_t closure_cap_from_env();

struct PatternSemigroup {
  std::size_t n = 0;
  // Distinct members in discovery order.
  std::vector<PatternMatrix> members;
  std::size_t generator_count = 0;
  bool truncated = false;
};

// Breadth-first closure under boolean product. Stops and sets `truncated`
// once more than `cap` members would be needed.
PatternSemigroup pattern_closure(const std::vector<PatternMatrix>& generators,
                                 std::size_t cap = default_closure_cap);

// Entrywise OR of every member.
PatternMatrix union_pattern(const PatternSemigroup& s);

// First position (row-major) that is zero in every member.
std::optional<std::pair<std::size_t, std::size_t>> common_zero_entry(const PatternSemigroup& s);

// Invariant subset shared by every member, found from the SCCs of the union
// pattern.
std::optional<InvariantSubsetWitness> semigroup_decomposable(const PatternSemigroup& s);

// Whether the sum of all members has a zero entry (counted per position).
bool sum_has_zero(const PatternSemigroup& s);

// Concrete witnesses for the equivalent forms of decomposability, all built
// from one common zero entry (i, j): the functional M -> M_ij vanishes on S,
// and with L = E_ii, R = E_jj one has L S R = {0}.
struct ZeroEntryWitness {
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t left_selector = 0;   // L = E_{row,row}
  std::size_t right_selector = 0;  // R = E_{col,col}
  // A common zero off the diagonal, when one exists.
  std::optional<std::pair<std::size_t, std::size_t>> off_diagonal;
};

std::optional<ZeroEntryWitness> zero_entry_witness(const PatternSemigroup& s);

struct RationalSemigroup {
  std::vector<RMatrix> members;
  bool truncated = false;
};

// Closure under exact products, deduplicated by serialized form.
RationalSemigroup rational_closure(const std::vector<RMatrix>& generators,
                                   std::size_t cap = default_closure_cap);

// {a, a^2, ..., a^(r-1)} with duplicates removed. HypothesisError unless
// a is r-potent.
RationalSemigroup cyclic_semigroup(const RMatrix& a, unsigned r);

struct CyclicDecompositionReport {
  DecompositionReport decomposition;
  // a itself is decomposable, so a common permutation can be tested.
  bool applicable = false;
  std::optional<Permutation> permutation;
  std::vector<std::size_t> block_sizes;
  // Entry k - 1: a^k is block upper triangular under the permutation.
  std::vector<bool> power_triangular;
  bool all_triangular = false;
};

CyclicDecompositionReport cyclic_semigroup_decomposable_check(const RMatrix& a, unsigned r);

struct BlockFloorRecord {
  std::vector<std::size_t> indices;
  bool nonzero = false;
  std::size_t min_rank = 0;
  bool floor_ok = true;
};

struct RankFloorReport {
  std::size_t closure_size = 0;
  bool truncated = false;
  bool decomposable = false;
  std::vector<BlockFloorRecord> blocks;
  bool floor_ok = true;
};

// Closes the rational semigroup, triangularizes it with the SCC blocks of
// its union pattern and checks that every nonzero diagonal block position
// has a compression of exact rank <= r - 1. Throws TruncatedClosure when
// the cap is hit and HypothesisError for non-r-potent generators.
RankFloorReport semigroup_rank_floor_check(const std::vector<RMatrix>& generators, unsigned r,
                                           std::size_t cap = default_closure_cap);

struct SymmetricGroupReport {
  std::size_t n = 0;
  std::size_t order = 0;  // n!
  // minimal potency -> number of permutation matrices with it.
  std::map<unsigned, std::size_t> potency_counts;
  // Every element's minimal potency equals lcm(cycle lengths) + 1.
  bool potency_matches_cycle_type = true;
  unsigned max_potency = 0;
  // Every class 2, ..., n + 1 occurs.
  bool all_classes_present = true;
  bool sum_positive = false;
  bool decomposable = false;
  // Cycle type of the first element reaching max_potency.
  std::vector<std::size_t> max_potency_cycle_type;
};

// Enumerates S_n (1 <= n <= 8; CapacityError otherwise).
SymmetricGroupReport symmetric_group_analysis(std::size_t n);

inline constexpr std::size_t symmetric_group_max_n = 8;

}  // namespace rpotent
