#include "rpotent/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "rpotent/potency.hpp"

namespace rpotent {

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
  const auto& targets = out.at(from);
  return std::binary_search(targets.begin(), targets.end(), to);
}

Digraph build_digraph(const RMatrix& a) {
  Digraph g{a.size(), std::vector<std::vector<std::size_t>>(a.size())};
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sgn(a(i, j)) > 0) g.out[j].push_back(i);
    }
  }
  return g;
}

Digraph build_digraph(const PatternMatrix& p) {
  Digraph g{p.size(), std::vector<std::vector<std::size_t>>(p.size())};
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.test(i, j)) g.out[j].push_back(i);
    }
  }
  return g;
}

Components strongly_connected_components(const Digraph& g) {
  constexpr auto unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(g.n, unvisited), low(g.n, 0);
  std::vector<bool> on_stack(g.n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  Components result;
  result.component_of.assign(g.n, 0);

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : g.out[v]) {
      if (index[w] == unvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w = 0;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        result.component_of[w] = result.members.size();
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      result.members.push_back(std::move(comp));
    }
  };

  for (std::size_t v = 0; v < g.n; ++v) {
    if (index[v] == unvisited) visit(v);
  }
  return result;
}

bool is_decomposable(const RMatrix& a) {
  return strongly_connected_components(build_digraph(a)).members.size() > 1;
}

bool is_decomposable(const PatternMatrix& p) {
  return strongly_connected_components(build_digraph(p)).members.size() > 1;
}

namespace {

std::optional<InvariantSubsetWitness> brute_force_columns(const std::vector<std::uint64_t>& column_support) {
  const auto n = column_support.size();
  if (n > brute_force_max_size) {
    throw CapacityError("subset enumeration is limited to n <= 20, got n = " + std::to_string(n));
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    bool closed = true;
    for (std::size_t j = 0; j < n && closed; ++j) {
      if (((mask >> j) & 1U) != 0 && (column_support[j] & ~mask) != 0) closed = false;
    }
    if (closed) {
      InvariantSubsetWitness w;
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> j) & 1U) w.subset.push_back(j);
      }
      return w;
    }
  }
  return std::nullopt;
}

// Orders the condensation so that every component comes after the
// components its columns reach; among available components the one with
// the smallest original index goes first.
std::vector<std::size_t> condensation_order(const Digraph& g, const Components& comps) {
  const auto m = comps.members.size();
  std::vector<std::set<std::size_t>> reaches(m);
  std::vector<std::vector<std::size_t>> reached_by(m);
  for (std::size_t v = 0; v < g.n; ++v) {
    const auto cv = comps.component_of[v];
    for (auto w : g.out[v]) {
      const auto cw = comps.component_of[w];
      if (cw != cv && reaches[cv].insert(cw).second) reached_by[cw].push_back(cv);
    }
  }
  std::vector<std::size_t> pending(m);
  using Entry = std::pair<std::size_t, std::size_t>;  // (smallest index, component)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t c = 0; c < m; ++c) {
    pending[c] = reaches[c].size();
    if (pending[c] == 0) ready.emplace(comps.members[c].front(), c);
  }
  std::vector<std::size_t> order;
  order.reserve(m);
  while (!ready.empty()) {
    const auto c = ready.top().second;
    ready.pop();
    order.push_back(c);
    for (auto d : reached_by[c]) {
      if (--pending[d] == 0) ready.emplace(comps.members[d].front(), d);
    }
  }
  return order;
}

}  // namespace

std::optional<InvariantSubsetWitness> brute_force_decomposable(const PatternMatrix& p) {
  std::vector<std::uint64_t> cols(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) cols[j] = p.column_bits(j);
  return brute_force_columns(cols);
}

std::optional<InvariantSubsetWitness> brute_force_decomposable(const RMatrix& a) {
  if (a.size() > brute_force_max_size) {
    throw CapacityError("subset enumeration is limited to n <= 20, got n = " + std::to_string(a.size()));
  }
  return brute_force_decomposable(pattern(a));
}

bool verify_witness(const PatternMatrix& p, const InvariantSubsetWitness& w) {
  if (w.subset.empty() || w.subset.size() >= p.size()) return false;
  std::vector<bool> inside(p.size(), false);
  for (auto i : w.subset) {
    if (i >= p.size()) return false;
    inside[i] = true;
  }
  for (auto j : w.subset) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.test(i, j) && !inside[i]) return false;
    }
  }
  return true;
}

bool verify_witness(const RMatrix& a, const InvariantSubsetWitness& w) {
  if (w.subset.empty() || w.subset.size() >= a.size()) return false;
  std::vector<bool> inside(a.size(), false);
  for (auto i : w.subset) {
    if (i >= a.size()) return false;
    inside[i] = true;
  }
  for (auto j : w.subset) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sgn(a(i, j)) != 0 && !inside[i]) return false;
    }
  }
  return true;
}

std::size_t BlockTriangularization::block_offset(std::size_t b) const {
  std::size_t offset = 0;
  for (std::size_t k = 0; k < b; ++k) offset += block_sizes[k];
  return offset;
}

Permutation triangularizing_permutation(const PatternMatrix& p,
                                        std::vector<std::vector<std::size_t>>* blocks) {
  const auto g = build_digraph(p);
  const auto comps = strongly_connected_components(g);
  std::vector<std::size_t> map;
  map.reserve(p.size());
  if (blocks != nullptr) blocks->clear();
  for (auto c : condensation_order(g, comps)) {
    map.insert(map.end(), comps.members[c].begin(), comps.members[c].end());
    if (blocks != nullptr) blocks->push_back(comps.members[c]);
  }
  return Permutation(std::move(map));
}

BlockTriangularization block_triangularize(const RMatrix& a) {
  const auto g = build_digraph(a);
  const auto comps = strongly_connected_components(g);
  std::vector<std::size_t> map;
  map.reserve(a.size());
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::size_t>> indices;
  std::vector<RMatrix> diagonal;
  for (auto c : condensation_order(g, comps)) {
    const auto& members = comps.members[c];
    map.insert(map.end(), members.begin(), members.end());
    sizes.push_back(members.size());
    indices.push_back(members);
    diagonal.push_back(principal_submatrix(a, members));
  }
  Permutation perm(std::move(map));
  auto form = conjugate(a, perm);
  const bool trivial = sizes.size() == 1;
  return BlockTriangularization{std::move(perm), std::move(sizes), std::move(indices),
                                std::move(diagonal), std::move(form), trivial};
}

bool rank_one_idempotent_diag_test(const RMatrix& a) {
  if (!(multiply(a, a) == a)) throw HypothesisError("rank-one idempotent test: matrix is not idempotent");
  if (exact_rank(a) != 1) throw HypothesisError("rank-one idempotent test: rank is not one");
  return a.has_zero_diagonal_entry();
}

const char* to_string(DecompositionCase c) {
  switch (c) {
    case DecompositionCase::rank_exceeds:
      return "rank_exceeds";
    case DecompositionCase::singular_zero_diagonal_powers:
      return "singular_zero_diagonal_powers";
    case DecompositionCase::no_prediction:
      return "no_prediction";
  }
  return "unknown";
}

DecompositionReport main_decomposability_test(const RMatrix& a, unsigned r) {
  require_r_potent(a, r, "main decomposability test");
  DecompositionReport rep;
  rep.r = r;
  rep.rank = exact_rank(a);
  rep.singular = rep.rank < a.size();
  rep.zero_diagonal_powers = zero_diagonal_powers(a, r);
  rep.actually_decomposable = is_decomposable(a);

  bool all_later_powers_zero_diag = true;
  for (unsigned j = 2; j + 1 <= r; ++j) {
    if (!rep.zero_diagonal_powers.contains(j)) all_later_powers_zero_diag = false;
  }
  if (rep.rank + 1 > r) {
    rep.prediction_case = DecompositionCase::rank_exceeds;
  } else if (r >= 3 && a.size() >= 2 && rep.singular && all_later_powers_zero_diag) {
    // r = 2 leaves the power condition empty, and the positive rank-one
    // idempotent J/2 then contradicts the prediction; a 1x1 block has no
    // proper subspace at all.
    rep.prediction_case = DecompositionCase::singular_zero_diagonal_powers;
  }
  if (rep.prediction_case != DecompositionCase::no_prediction) {
    rep.predicted_decomposable = true;
    rep.agrees = rep.actually_decomposable;
  }
  return rep;
}

}  // namespace rpotent
