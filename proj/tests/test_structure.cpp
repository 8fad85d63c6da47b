#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "rpotent/decomposition.hpp"
#include "rpotent/error.hpp"
#include "rpotent/generators.hpp"
#include "rpotent/potency.hpp"
#include "rpotent/structure.hpp"

using namespace rpotent;

namespace {

// Fewest adjacent zero pairs over every block order that keeps the form
// upper triangular, by enumerating all orders.
std::size_t brute_force_min_pairs(const BlockTriangularization& t) {
  const auto count = t.block_count();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = count;
  do {
    bool valid = true;
    for (std::size_t x = 0; x < count && valid; ++x) {
      for (std::size_t y = x + 1; y < count && valid; ++y) {
        // order[y] placed after order[x]: no coupling from order[y] into order[x].
        const auto later = order[y];
        const auto earlier = order[x];
        for (std::size_t i = 0; i < t.block_sizes[later] && valid; ++i) {
          for (std::size_t j = 0; j < t.block_sizes[earlier] && valid; ++j) {
            if (t.form(t.block_offset(later) + i, t.block_offset(earlier) + j) != 0) valid = false;
          }
        }
      }
    }
    if (!valid) continue;
    std::size_t pairs = 0;
    for (std::size_t k = 1; k < count; ++k) {
      if (t.diagonal_blocks[order[k - 1]].is_zero() && t.diagonal_blocks[order[k]].is_zero()) ++pairs;
    }
    best = std::min(best, pairs);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

RMatrix half(std::size_t n) { return RMatrix::filled(n, Rational(1, static_cast<long>(n))); }

}  // namespace

TEST_CASE("block-diagonal example", "[structure]") {
  const auto f = oracle::frozen();
  const auto a = block_diagonal({RMatrix::identity(1), half(2), half(3)});
  const auto rep = analyze_structure(a, 4);
  CHECK(rep.k == f["block_diagonal_r4"]["rank"].get<std::size_t>());
  CHECK(rep.nonzero_count == 3);
  CHECK(rep.total_count == 3);
  CHECK(rep.lower_bound == 1);
  CHECK(rep.blocks_ok);
  CHECK(rep.bounds_ok);
  for (const auto& b : rep.blocks) {
    CHECK_FALSE(b.is_zero);
    CHECK(b.block_rank == 1);
    CHECK(b.block_is_indecomposable);
  }
}

TEST_CASE("kron(cycle(2), cycle(2)) at r = 3", "[structure]") {
  const auto rep = analyze_structure(kron(cycle_matrix(2), cycle_matrix(2)), 3);
  CHECK(rep.k == 4);
  CHECK(rep.blocks_ok);
  CHECK(rep.bounds_ok);
  CHECK(rep.nonzero_count >= 2);
  CHECK(rep.nonzero_count <= 4);
  for (const auto& b : rep.blocks) CHECK(b.block_rank <= 2);
}

TEST_CASE("zero blocks separated by a nonzero component", "[structure]") {
  // Two zero 1x1 components and one idempotent component, none coupled.
  const auto a = block_diagonal({RMatrix(1), RMatrix(1), half(2)});
  const auto rep = analyze_structure(a, 2);
  CHECK(rep.total_count == 3);
  CHECK(rep.consecutive_zero_pairs == 0);
  REQUIRE(rep.blocks.size() == 3);
  CHECK(rep.blocks[0].is_zero);
  CHECK_FALSE(rep.blocks[1].is_zero);
  CHECK(rep.blocks[2].is_zero);
  const auto& t = *rep.triangularization;
  CHECK(t.form == conjugate(a, t.permutation));
}

TEST_CASE("idempotent forcing adjacent zero blocks", "[structure]") {
  // e1 (1,1,1,1): k = 1 and every maximal triangularization has 4 blocks,
  // three of them zero and all coupled to the first.
  const auto f = oracle::frozen();
  const auto a = RMatrix::from_rows({{1, 1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  REQUIRE(is_r_potent(a, 2));
  const auto rep = analyze_structure(a, 2);
  CHECK(rep.k == f["corner_idempotent"]["rank"].get<std::size_t>());
  CHECK(rep.total_count == f["corner_idempotent"]["scc_sizes"].size());
  CHECK(rep.blocks_ok);
  CHECK(rep.consecutive_zero_pairs == 2);
  CHECK(rep.total_count > 2 * rep.k + 1);
  CHECK_FALSE(rep.bounds_ok);
  CHECK(brute_force_min_pairs(*rep.triangularization) == 2);
}

TEST_CASE("block order search is exact", "[structure]") {
  Rng rng(101);
  int nontrivial = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = rng.uniform(3, 8);
    RMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool diagonal_ok = rng.coin(1, 3);
        if ((i < j && rng.coin(1, 4)) || (i == j && diagonal_ok)) a.set(i, j, 1);
      }
    }
    const auto t = block_triangularize(a);
    if (t.block_count() < 2) continue;
    const auto reordered = reorder_to_avoid_consecutive_zeros(t);
    CHECK(reordered.form == conjugate(a, reordered.permutation));
    CHECK(is_block_upper_triangular(reordered.form, reordered.block_sizes));
    const auto expected = brute_force_min_pairs(t);
    CHECK(consecutive_zero_pairs(reordered) == expected);
    nontrivial += expected > 0 ? 1 : 0;
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("structure of generated decomposable r-potents", "[structure]") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const auto r = static_cast<unsigned>(rng.uniform(2, 5));
    const auto g = random_r_potent(r, rng.uniform(r, r + 3), rng.next());
    const auto rep = analyze_structure(g.matrix, g.r);
    REQUIRE(rep.applicable);
    CHECK(rep.blocks_ok);
    CHECK(rep.block_rank_sum == rep.k);
    CHECK(rep.lower_bound <= rep.nonzero_count);
    CHECK(rep.nonzero_count <= rep.k);
    ++checked;
  }
  CHECK(checked == 60);
  CHECK_THROWS_AS(analyze_structure(RMatrix::from_rows({{1, 1}, {0, 1}}), 2), HypothesisError);
}
