#include "rpotent/semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_set>

#include "rpotent/parallel.hpp"
#include "rpotent/permutation.hpp"
#include "rpotent/potency.hpp"

namespace rpotent {

namespace {

std::string canonical_key(const RMatrix& m) {
  std::string key = std::to_string(m.size());
  for (const auto& e : m.entries()) {
    key += ',';
    key += to_string(e);
  }
  return key;
}

void require_closed(const PatternSemigroup& s, const char* what) {
  if (s.truncated) {
    throw TruncatedClosure(std::string(what) + ": closure was truncated, no verdict");
  }
  if (s.members.empty()) throw InvalidInput(std::string(what) + ": empty semigroup");
}

}  // namespace

std::size_t closure_cap_from_env() {
  if (const char* raw = std::getenv("RPOTENT_CLOSURE_CAP"); raw != nullptr) {
    char* end = nullptr;
    const auto value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return default_closure_cap;
}

PatternSemigroup pattern_closure(const std::vector<PatternMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw InvalidInput("pattern_closure needs at least one generator");
  if (cap == 0) throw InvalidInput("closure cap must be positive");
  PatternSemigroup s;
  s.n = generators.front().size();
  s.generator_count = generators.size();
  std::unordered_set<PatternMatrix, PatternHash> seen;

  auto admit = [&](const PatternMatrix& p) {
    if (seen.contains(p)) return true;
    if (s.members.size() == cap) {
      s.truncated = true;
      return false;
    }
    seen.insert(p);
    s.members.push_back(p);
    return true;
  };

  for (const auto& g : generators) {
    if (g.size() != s.n) throw DimensionError("pattern_closure: generators differ in dimension");
    if (!admit(g)) return s;
  }
  for (std::size_t head = 0; head < s.members.size(); ++head) {
    for (const auto& g : generators) {
      if (!admit(boolean_product(s.members[head], g))) return s;
    }
  }
  return s;
}

PatternMatrix union_pattern(const PatternSemigroup& s) {
  if (s.members.empty()) throw InvalidInput("union of an empty semigroup");
  auto u = s.members.front();
  for (const auto& m : s.members) u = pattern_union(u, m);
  return u;
}

std::optional<std::pair<std::size_t, std::size_t>> common_zero_entry(const PatternSemigroup& s) {
  require_closed(s, "common_zero_entry");
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = 0; j < s.n; ++j) {
      const bool all_zero =
          std::none_of(s.members.begin(), s.members.end(), [&](const PatternMatrix& m) { return m.test(i, j); });
      if (all_zero) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::optional<InvariantSubsetWitness> semigroup_decomposable(const PatternSemigroup& s) {
  require_closed(s, "semigroup_decomposable");
  const auto u = union_pattern(s);
  std::vector<std::vector<std::size_t>> blocks;
  triangularizing_permutation(u, &blocks);
  if (blocks.size() < 2) return std::nullopt;
  return InvariantSubsetWitness{blocks.front()};
}

bool sum_has_zero(const PatternSemigroup& s) {
  require_closed(s, "sum_has_zero");
  std::vector<std::size_t> counts(s.n * s.n, 0);
  for (const auto& m : s.members) {
    for (std::size_t i = 0; i < s.n; ++i) {
      for (std::size_t j = 0; j < s.n; ++j) counts[i * s.n + j] += m.test(i, j) ? 1 : 0;
    }
  }
  return std::find(counts.begin(), counts.end(), std::size_t{0}) != counts.end();
}

std::optional<ZeroEntryWitness> zero_entry_witness(const PatternSemigroup& s) {
  const auto zero = common_zero_entry(s);
  if (!zero) return std::nullopt;
  ZeroEntryWitness w;
  w.row = zero->first;
  w.col = zero->second;
  w.left_selector = w.row;
  w.right_selector = w.col;
  const auto u = union_pattern(s);
  for (std::size_t i = 0; i < s.n && !w.off_diagonal; ++i) {
    for (std::size_t j = 0; j < s.n; ++j) {
      if (i != j && !u.test(i, j)) {
        w.off_diagonal = std::make_pair(i, j);
        break;
      }
    }
  }
  return w;
}

RationalSemigroup rational_closure(const std::vector<RMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw InvalidInput("rational_closure needs at least one generator");
  if (cap == 0) throw InvalidInput("closure cap must be positive");
  RationalSemigroup s;
  std::unordered_set<std::string> seen;
  auto admit = [&](RMatrix m) {
    auto key = canonical_key(m);
    if (seen.contains(key)) return true;
    if (s.members.size() == cap) {
      s.truncated = true;
      return false;
    }
    seen.insert(std::move(key));
    s.members.push_back(std::move(m));
    return true;
  };
  for (const auto& g : generators) {
    if (g.size() != generators.front().size()) {
      throw DimensionError("rational_closure: generators differ in dimension");
    }
    if (!admit(g)) return s;
  }
  for (std::size_t head = 0; head < s.members.size(); ++head) {
    for (const auto& g : generators) {
      if (!admit(multiply(s.members[head], g))) return s;
    }
  }
  return s;
}

RationalSemigroup cyclic_semigroup(const RMatrix& a, unsigned r) {
  require_r_potent(a, r, "cyclic semigroup");
  RationalSemigroup s;
  std::unordered_set<std::string> seen;
  auto p = a;
  for (unsigned k = 1; k < r; ++k) {
    if (seen.insert(canonical_key(p)).second) s.members.push_back(p);
    if (k + 1 < r) p = multiply(p, a);
  }
  return s;
}

CyclicDecompositionReport cyclic_semigroup_decomposable_check(const RMatrix& a, unsigned r) {
  CyclicDecompositionReport rep;
  rep.decomposition = main_decomposability_test(a, r);
  rep.applicable = rep.decomposition.actually_decomposable;
  if (!rep.applicable) return rep;
  const auto t = block_triangularize(a);
  rep.permutation = t.permutation;
  rep.block_sizes = t.block_sizes;
  auto p = a;
  rep.all_triangular = true;
  for (unsigned k = 1; k < r; ++k) {
    const bool ok = is_block_upper_triangular(conjugate(p, t.permutation), t.block_sizes);
    rep.power_triangular.push_back(ok);
    rep.all_triangular = rep.all_triangular && ok;
    if (k + 1 < r) p = multiply(p, a);
  }
  return rep;
}

RankFloorReport semigroup_rank_floor_check(const std::vector<RMatrix>& generators, unsigned r,
                                           std::size_t cap) {
  if (generators.empty()) throw InvalidInput("rank floor check needs at least one generator");
  for (const auto& g : generators) {
    if (g.size() != generators.front().size()) throw DimensionError("generators differ in dimension");
    require_r_potent(g, r, "rank floor check");
  }
  const auto closure = rational_closure(generators, cap);
  if (closure.truncated) throw TruncatedClosure("rank floor check: closure exceeded the cap");

  RankFloorReport rep;
  rep.closure_size = closure.members.size();
  auto u = pattern(closure.members.front());
  for (const auto& m : closure.members) u = pattern_union(u, pattern(m));
  std::vector<std::vector<std::size_t>> blocks;
  triangularizing_permutation(u, &blocks);
  rep.decomposable = blocks.size() > 1;

  for (auto& indices : blocks) {
    BlockFloorRecord rec;
    rec.indices = indices;
    rec.min_rank = indices.size();
    for (const auto& m : closure.members) {
      const auto compression = principal_submatrix(m, indices);
      if (!compression.is_zero()) rec.nonzero = true;
      rec.min_rank = std::min(rec.min_rank, exact_rank(compression));
    }
    rec.floor_ok = !rec.nonzero || rec.min_rank + 1 <= r;
    rep.floor_ok = rep.floor_ok && rec.floor_ok;
    rep.blocks.push_back(std::move(rec));
  }
  return rep;
}

SymmetricGroupReport symmetric_group_analysis(std::size_t n) {
  if (n == 0 || n > symmetric_group_max_n) {
    throw CapacityError("symmetric group enumeration needs 1 <= n <= 8, got " + std::to_string(n));
  }
  std::vector<std::vector<std::size_t>> elements;
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  do {
    elements.push_back(map);
  } while (std::next_permutation(map.begin(), map.end()));

  struct ElementResult {
    std::optional<unsigned> potency;
    std::size_t lcm_plus_one = 0;
    std::vector<std::size_t> cycle_type;
  };
  const auto results = parallel::run_trials(elements.size(), [&](std::size_t i) {
    const Permutation p(elements[i]);
    ElementResult res;
    res.potency = minimal_potency(p.to_matrix(), static_cast<unsigned>(p.order() + 2));
    res.lcm_plus_one = p.order() + 1;
    res.cycle_type = p.cycle_lengths();
    std::sort(res.cycle_type.rbegin(), res.cycle_type.rend());
    return res;
  });

  SymmetricGroupReport rep;
  rep.n = n;
  rep.order = elements.size();
  std::vector<std::size_t> counts(n * n, 0);
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const auto& res = results[e];
    if (!res.potency || *res.potency != res.lcm_plus_one) rep.potency_matches_cycle_type = false;
    const auto potency = res.potency.value_or(0);
    ++rep.potency_counts[potency];
    if (potency > rep.max_potency) {
      rep.max_potency = potency;
      rep.max_potency_cycle_type = res.cycle_type;
    }
    for (std::size_t k = 0; k < n; ++k) ++counts[elements[e][k] * n + k];
  }
  for (unsigned cls = 2; cls <= n + 1; ++cls) {
    if (!rep.potency_counts.contains(cls)) rep.all_classes_present = false;
  }
  rep.sum_positive = std::find(counts.begin(), counts.end(), std::size_t{0}) == counts.end();
  PatternMatrix sum_pattern(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sum_pattern.set(i, j, counts[i * n + j] > 0);
  }
  rep.decomposable = is_decomposable(sum_pattern);
  return rep;
}

}  // namespace rpotent
