#include "rpotent/structure.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <unordered_map>
#include <utility>

#include "rpotent/potency.hpp"

namespace rpotent {

namespace {

struct BlockOrderProblem {
  std::size_t count = 0;
  std::vector<bool> zero;
  // requires[s] holds every block that must precede block s.
  std::vector<std::vector<std::size_t>> requires_before;
};

BlockOrderProblem make_problem(const BlockTriangularization& t) {
  BlockOrderProblem p;
  p.count = t.block_count();
  p.zero.resize(p.count);
  p.requires_before.resize(p.count);
  std::vector<std::size_t> offset(p.count + 1, 0);
  for (std::size_t b = 0; b < p.count; ++b) {
    p.zero[b] = t.diagonal_blocks[b].is_zero();
    offset[b + 1] = offset[b] + t.block_sizes[b];
  }
  for (std::size_t s = 0; s < p.count; ++s) {
    for (std::size_t u = 0; u < s; ++u) {
      bool coupled = false;
      for (auto i = offset[u]; i < offset[u + 1] && !coupled; ++i) {
        for (auto j = offset[s]; j < offset[s + 1] && !coupled; ++j) {
          coupled = sgn(t.form(i, j)) != 0;
        }
      }
      if (coupled) p.requires_before[s].push_back(u);
    }
  }
  return p;
}

std::size_t pairs_in(const BlockOrderProblem& p, const std::vector<std::size_t>& order) {
  std::size_t pairs = 0;
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (p.zero[order[k - 1]] && p.zero[order[k]]) ++pairs;
  }
  return pairs;
}

// Minimum number of adjacent zero pairs over all linear extensions, by
// memoized search over placed sets. Blocks with the same zero flag and the
// same direct neighbours are interchangeable and are placed in index order.
class OrderSearch {
 public:
  explicit OrderSearch(const BlockOrderProblem& p) : p_(p), twin_before_(p.count, p.count) {
    std::vector<std::vector<std::size_t>> after(p.count);
    for (std::size_t s = 0; s < p.count; ++s) {
      for (auto u : p.requires_before[s]) after[u].push_back(s);
    }
    for (std::size_t b = 0; b < p.count; ++b) {
      need_[b] = 0;
      for (auto u : p.requires_before[b]) need_[b] |= bit(u);
      for (std::size_t c = b; c-- > 0;) {
        if (p.zero[c] == p.zero[b] && p.requires_before[c] == p.requires_before[b] && after[c] == after[b]) {
          twin_before_[b] = c;
          break;
        }
      }
    }
  }

  std::vector<std::size_t> run() {
    const auto full = p_.count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p_.count) - 1;
    solve(0, false, full);
    std::vector<std::size_t> order;
    std::uint64_t mask = 0;
    bool last_zero = false;
    while (mask != full) {
      const auto b = choice_.at(key(mask, last_zero));
      order.push_back(b);
      mask |= bit(b);
      last_zero = p_.zero[b];
    }
    return order;
  }

 private:
  static std::uint64_t bit(std::size_t b) { return std::uint64_t{1} << b; }
  static std::pair<std::uint64_t, bool> key(std::uint64_t mask, bool last) { return {mask, last}; }

  std::size_t solve(std::uint64_t mask, bool last_zero, std::uint64_t full) {
    if (mask == full) return 0;
    const auto k = key(mask, last_zero);
    if (const auto it = best_.find(k); it != best_.end()) return it->second;
    if (best_.size() >= max_states) throw CapacityError("block order search exceeded its state budget");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t pick = p_.count;
    for (std::size_t b = 0; b < p_.count && best > 0; ++b) {
      if ((mask & bit(b)) || (need_[b] & ~mask)) continue;
      if (twin_before_[b] != p_.count && !(mask & bit(twin_before_[b]))) continue;
      const std::size_t extra = (mask != 0 && last_zero && p_.zero[b]) ? 1 : 0;
      const auto value = extra + solve(mask | bit(b), p_.zero[b], full);
      if (value < best) {
        best = value;
        pick = b;
      }
    }
    best_.emplace(k, best);
    choice_.emplace(k, pick);
    return best;
  }

  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, bool>& k) const {
      return std::hash<std::uint64_t>{}(k.first * 2 + (k.second ? 1 : 0));
    }
  };

  static constexpr std::size_t max_states = std::size_t{1} << 22;
  const BlockOrderProblem& p_;
  std::array<std::uint64_t, 64> need_{};
  std::vector<std::size_t> twin_before_;
  std::unordered_map<std::pair<std::uint64_t, bool>, std::size_t, KeyHash> best_;
  std::unordered_map<std::pair<std::uint64_t, bool>, std::size_t, KeyHash> choice_;
};

BlockTriangularization apply_block_order(const BlockTriangularization& t,
                                         const std::vector<std::size_t>& order) {
  std::vector<std::size_t> q;
  q.reserve(t.permutation.size());
  BlockTriangularization out{t.permutation, {}, {}, {}, t.form, t.is_trivial};
  for (auto b : order) {
    const auto offset = t.block_offset(b);
    for (std::size_t s = 0; s < t.block_sizes[b]; ++s) q.push_back(offset + s);
    out.block_sizes.push_back(t.block_sizes[b]);
    out.block_indices.push_back(t.block_indices[b]);
    out.diagonal_blocks.push_back(t.diagonal_blocks[b]);
  }
  const Permutation within(std::move(q));
  out.permutation = t.permutation.compose(within);
  out.form = conjugate(t.form, within);
  return out;
}

}  // namespace

std::size_t consecutive_zero_pairs(const BlockTriangularization& t) {
  std::size_t pairs = 0;
  for (std::size_t b = 1; b < t.block_count(); ++b) {
    if (t.diagonal_blocks[b - 1].is_zero() && t.diagonal_blocks[b].is_zero()) ++pairs;
  }
  return pairs;
}

BlockTriangularization reorder_to_avoid_consecutive_zeros(const BlockTriangularization& t) {
  if (t.block_count() < 2 || consecutive_zero_pairs(t) == 0) return t;
  const auto problem = make_problem(t);
  std::vector<std::size_t> identity(problem.count);
  for (std::size_t b = 0; b < problem.count; ++b) identity[b] = b;
  const auto order = OrderSearch(problem).run();
  if (order == identity || pairs_in(problem, order) >= pairs_in(problem, identity)) return t;
  return apply_block_order(t, order);
}

StructureReport analyze_structure(const RMatrix& a, unsigned r) {
  require_r_potent(a, r, "structure analysis");
  StructureReport rep;
  rep.r = r;
  rep.k = exact_rank(a);
  auto t = block_triangularize(a);
  rep.applicable = !t.is_trivial;
  if (rep.applicable) t = reorder_to_avoid_consecutive_zeros(t);

  rep.blocks_ok = true;
  for (const auto& block : t.diagonal_blocks) {
    BlockRecord rec;
    rec.size = block.size();
    rec.is_zero = block.is_zero();
    rec.block_rank = exact_rank(block);
    rec.block_is_r_potent = is_r_potent(block, r);
    rec.block_is_indecomposable = !is_decomposable(block);
    if (!rec.is_zero) {
      ++rep.nonzero_count;
      if (!rec.block_is_r_potent || !rec.block_is_indecomposable || rec.block_rank + 1 > r) {
        rep.blocks_ok = false;
      }
    }
    rep.block_rank_sum += rec.block_rank;
    rep.blocks.push_back(rec);
  }
  if (rep.block_rank_sum != rep.k) rep.blocks_ok = false;

  rep.total_count = rep.blocks.size();
  rep.consecutive_zero_pairs = consecutive_zero_pairs(t);
  rep.lower_bound = (rep.k + (r - 1) - 1) / (r - 1);
  rep.bounds_ok = rep.lower_bound <= rep.nonzero_count && rep.nonzero_count <= rep.k &&
                  rep.total_count <= 2 * rep.k + 1;
  rep.triangularization = std::move(t);
  return rep;
}

}  // namespace rpotent
