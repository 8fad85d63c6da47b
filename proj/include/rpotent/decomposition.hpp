#pragma once

// Decomposability (reducibility) of nonnegative matrices.
//
// Orientation convention, shared by the SCC route and the subset oracle:
// the digraph of A has an edge j -> i whenever a_ij > 0. A set of indices
// S spans an A-invariant standard subspace exactly when every column j in S
// has its support inside S, i.e. when S is closed under out-edges. A
// proper nonempty closed set exists iff the digraph is not strongly
// connected.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "rpotent/matrix.hpp"
#include "rpotent/pattern.hpp"
#include "rpotent/permutation.hpp"

namespace rpotent {

struct Digraph {
  std::size_t n = 0;
  // out[j] lists every i with an edge j -> i, ascending.
  std::vector<std::vector<std::size_t>> out;

  bool has_edge(std::size_t from, std::size_t to) const;
};

Digraph build_digraph(const RMatrix& a);
Digraph build_digraph(const PatternMatrix& p);

struct Components {
  // Each component's indices, ascending.
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> component_of;
};

// Tarjan's algorithm. Component numbering is Tarjan's completion order.
Components strongly_connected_components(const Digraph& g);

bool is_decomposable(const RMatrix& a);
bool is_decomposable(const PatternMatrix& p);

struct InvariantSubsetWitness {
  // Proper nonempty index set, ascending; every column indexed by it has
  // support inside it.
  std::vector<std::size_t> subset;
};

// Re-checks a witness directly against the matrix entries.
bool verify_witness(const RMatrix& a, const InvariantSubsetWitness& w);
bool verify_witness(const PatternMatrix& p, const InvariantSubsetWitness& w);

// Enumerates all proper nonempty subsets in increasing bitmask order and
// returns the first closed one. n <= 20, otherwise CapacityError.
std::optional<InvariantSubsetWitness> brute_force_decomposable(const RMatrix& a);
std::optional<InvariantSubsetWitness> brute_force_decomposable(const PatternMatrix& p);

inline constexpr std::size_t brute_force_max_size = 20;

struct BlockTriangularization {
  Permutation permutation;
  std::vector<std::size_t> block_sizes;
  // Original indices of each block, ascending within the block.
  std::vector<std::vector<std::size_t>> block_indices;
  std::vector<RMatrix> diagonal_blocks;
  // conjugate(A, permutation); block upper triangular.
  RMatrix form;
  bool is_trivial = true;

  std::size_t block_count() const { return block_sizes.size(); }
  // Offset of the first row/column of block b inside `form`.
  std::size_t block_offset(std::size_t b) const;
};

// SCC blocks in a reverse topological order of the condensation: every
// block comes after all blocks its columns reach. Ties go to the component
// holding the smallest original index.
BlockTriangularization block_triangularize(const RMatrix& a);

// Same ordering rules, pattern only (used for common triangularizations of
// semigroups).
Permutation triangularizing_permutation(const PatternMatrix& p,
                                        std::vector<std::vector<std::size_t>>* blocks = nullptr);

// Rank-one idempotent criterion: returns whether a has a zero diagonal
// entry. Throws HypothesisError unless a^2 = a and rank(a) = 1.
bool rank_one_idempotent_diag_test(const RMatrix& a);

enum class DecompositionCase {
  // rank(A) > r - 1.
  rank_exceeds,
  // rank(A) <= r - 1, A singular, powers 2 .. r-1 each with a zero on the
  // diagonal.
  singular_zero_diagonal_powers,
  no_prediction,
};

const char* to_string(DecompositionCase c);

struct DecompositionReport {
  unsigned r = 0;
  std::size_t rank = 0;
  bool singular = false;
  std::set<unsigned> zero_diagonal_powers;
  DecompositionCase prediction_case = DecompositionCase::no_prediction;
  std::optional<bool> predicted_decomposable;
  bool actually_decomposable = false;
  // False only when a prediction exists and contradicts the SCC verdict.
  bool agrees = true;
};

// Classifies an r-potent matrix by the hypotheses of the main
// decomposability criterion and compares the prediction with the SCC test.
// Throws HypothesisError for non-r-potent input.
DecompositionReport main_decomposability_test(const RMatrix& a, unsigned r);

}  // namespace rpotent
