#pragma once

// Structure of maximal standard block triangularizations of decomposable
// r-potent matrices: per-block classification and the block-count bounds.

#include <cstddef>
#include <optional>
#include <vector>

#include "rpotent/decomposition.hpp"

namespace rpotent {

struct BlockRecord {
  std::size_t size = 0;
  bool is_zero = false;
  std::size_t block_rank = 0;
  bool block_is_r_potent = false;
  bool block_is_indecomposable = false;
};

struct StructureReport {
  std::size_t k = 0;  // rank of A
  unsigned r = 0;
  std::vector<BlockRecord> blocks;
  std::size_t nonzero_count = 0;
  std::size_t total_count = 0;
  std::size_t consecutive_zero_pairs = 0;
  // False for indecomposable input, where the bounds do not apply.
  bool applicable = false;
  std::size_t lower_bound = 0;  // ceil(k / (r - 1))
  bool bounds_ok = false;
  // Every nonzero block is r-potent, indecomposable and of rank <= r - 1,
  // every zero block really is zero, and block ranks sum to k.
  bool blocks_ok = false;
  std::size_t block_rank_sum = 0;
  // The triangularization the report describes (after reordering).
  std::optional<BlockTriangularization> triangularization;
};

// Linear extensions of the block dependency order are searched for one with
// the fewest adjacent zero/zero diagonal block pairs. The search is exact;
// CapacityError if it outgrows its state budget.
BlockTriangularization reorder_to_avoid_consecutive_zeros(const BlockTriangularization& t);

std::size_t consecutive_zero_pairs(const BlockTriangularization& t);

// Throws HypothesisError for non-r-potent input.
StructureReport analyze_structure(const RMatrix& a, unsigned r);

}  // namespace rpotent
