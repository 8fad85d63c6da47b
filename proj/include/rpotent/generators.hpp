#pragma once

// Deterministic and seeded constructions of nonnegative r-potent matrices.
// Every generated matrix is checked to be r-potent for its tagged r before
// it is returned; a failed check is a bug and throws std::logic_error.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rpotent/matrix.hpp"
#include "rpotent/permutation.hpp"

namespace rpotent {

class Rng;

// Permutation matrix of one len-cycle: column j has its 1 in row j+1 mod len.
RMatrix cycle_matrix(std::size_t len);

// u v^T; requires v . u = 1 exactly (InvalidInput otherwise).
RMatrix rank_one_idempotent(const std::vector<Rational>& u, const std::vector<Rational>& v);

// Direct sum.
RMatrix block_diagonal(const std::vector<RMatrix>& blocks);

// [[B, B^(r-1) X], [0, 0]]. Throws HypothesisError unless b is r-potent.
RMatrix triangular_family(const RMatrix& b, const RectMatrix& x, unsigned r);

// Uniformly random permutation on n points (seeded Fisher-Yates).
Permutation random_permutation(std::size_t n, Rng& rng);

enum class GeneratorKind {
  cycle,
  rank_one_idempotent,
  block_diagonal,
  kronecker,
  triangular_family,
  permutation,
  conjugated,
};

const char* to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(const std::string& name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::conjugated;
  unsigned r = 2;
  std::size_t rank = 1;
  std::size_t len = 1;        // cycle
  std::size_t n = 2;          // permutation, rank_one_idempotent
  bool zero_padded = false;   // rank_one_idempotent: allow zero coordinates
  std::uint64_t seed = 0;
};

struct GeneratedMatrix {
  RMatrix matrix;
  unsigned r = 2;      // verified: matrix^r == matrix
  std::size_t rank = 0;
  GeneratorSpec spec;
};

// Dimension ceiling for seeded constructions.
inline constexpr std::size_t generator_max_size = 36;

struct RandomPotentOptions {
  std::size_t max_size = generator_max_size;
  // Always wrap in triangular_family, which leaves zero rows (singular).
  bool force_zero_block = false;
  // Never wrap in triangular_family.
  bool forbid_zero_block = false;
  bool conjugate = true;
};

// Random r-potent of exact rank target_rank assembled from cycles, positive
// rank-one idempotents, Kronecker products, direct sums, an optional
// triangular wrapper, and a random conjugation. Deterministic per seed.
// Throws UnreachableRank when target_rank is 0 or does not fit max_size.
GeneratedMatrix random_r_potent(unsigned r, std::size_t target_rank, std::uint64_t seed,
                                const RandomPotentOptions& options = {});

// Positive (or zero-padded) rank-one idempotent of dimension n.
RMatrix random_rank_one_idempotent(std::size_t n, bool zero_padded, Rng& rng);

GeneratedMatrix generate(const GeneratorSpec& spec);

}  // namespace rpotent
