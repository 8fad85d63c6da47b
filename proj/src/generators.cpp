#include "rpotent/generators.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "rpotent/potency.hpp"
#include "rpotent/random.hpp"

namespace rpotent {

namespace {

const std::vector<Rational>& small_values() {
  static const std::vector<Rational> values{Rational(1), Rational(1, 2), Rational(1, 3), Rational(2),
                                            Rational(3)};
  return values;
}

std::vector<std::size_t> nontrivial_divisors(unsigned m) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

// Random r-potent of exact rank `rank` and dimension at most `budget`
// (budget >= rank is required).
RMatrix build_component(std::size_t rank, std::size_t budget, unsigned r, Rng& rng) {
  const auto divisors = nontrivial_divisors(r - 1);
  const bool is_divisor = std::find(divisors.begin(), divisors.end(), rank) != divisors.end();
  std::vector<std::function<RMatrix()>> options;

  if (rank == 1) {
    options.emplace_back([&] { return random_rank_one_idempotent(rng.uniform(1, std::min<std::size_t>(3, budget)), false, rng); });
  }
  if (is_divisor) {
    options.emplace_back([&] { return cycle_matrix(rank); });
    if (budget >= 2 * rank) {
      options.emplace_back([&] {
        const auto d = rng.uniform(2, std::min<std::size_t>(3, budget / rank));
        return kron(cycle_matrix(rank), random_rank_one_idempotent(d, false, rng));
      });
    }
  }
  for (auto a : divisors) {
    if (a < rank && rank % a == 0) {
      options.emplace_back([&, a] { return kron(cycle_matrix(a), build_component(rank / a, budget / a, r, rng)); });
    }
  }
  if (rank >= 2) {
    options.emplace_back([&] {
      const auto first = rng.uniform(1, rank - 1);
      const auto second = rank - first;
      const auto first_budget = first + rng.uniform(0, budget - rank);
      auto x = build_component(first, first_budget, r, rng);
      auto y = build_component(second, budget - x.size(), r, rng);
      return block_diagonal({std::move(x), std::move(y)});
    });
  }
  return options[rng.uniform(0, options.size() - 1)]();
}

RectMatrix random_coupling(std::size_t rows, std::size_t cols, Rng& rng) {
  static const std::vector<Rational> values{Rational(0), Rational(1), Rational(1, 2), Rational(2)};
  RectMatrix x(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) x.set(i, j, rng.pick(values));
  }
  return x;
}

void check_emission(const RMatrix& m, unsigned r, std::size_t rank) {
  if (!is_r_potent(m, r)) throw std::logic_error("generator emitted a matrix that is not r-potent");
  if (exact_rank(m) != rank) throw std::logic_error("generator emitted a matrix of the wrong rank");
}

void check_rank_target(std::size_t rank, std::size_t max_size) {
  if (rank == 0) throw UnreachableRank("target rank must be at least 1");
  if (rank > max_size) {
    throw UnreachableRank("target rank " + std::to_string(rank) + " exceeds the dimension limit " +
                          std::to_string(max_size));
  }
}

}  // namespace

RMatrix cycle_matrix(std::size_t len) {
  RMatrix m(len);
  for (std::size_t j = 0; j < len; ++j) m.set((j + 1) % len, j, 1);
  return m;
}

RMatrix rank_one_idempotent(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  if (u.size() != v.size() || u.empty()) throw DimensionError("rank_one_idempotent: vector sizes differ");
  Rational dot = 0;
  for (std::size_t i = 0; i < u.size(); ++i) dot += v[i] * u[i];
  if (dot != 1) throw InvalidInput("rank_one_idempotent: v . u must equal 1, got " + to_string(dot));
  RMatrix m(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) m.set(i, j, u[i] * v[j]);
  }
  return m;
}

RMatrix block_diagonal(const std::vector<RMatrix>& blocks) {
  if (blocks.empty()) throw DimensionError("block_diagonal needs at least one block");
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  RMatrix m(n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (sgn(b(i, j)) != 0) m.set(offset + i, offset + j, b(i, j));
      }
    }
    offset += b.size();
  }
  return m;
}

RMatrix triangular_family(const RMatrix& b, const RectMatrix& x, unsigned r) {
  require_r_potent(b, r, "triangular_family");
  if (x.rows() != b.size()) throw DimensionError("triangular_family: coupling rows must match B");
  const auto k = b.size();
  const auto c = multiply(power(b, r - 1), x);
  RMatrix m(k + x.cols());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(b(i, j)) != 0) m.set(i, j, b(i, j));
    }
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (sgn(c(i, j)) != 0) m.set(i, k + j, c(i, j));
    }
  }
  if (!is_r_potent(m, r)) throw std::logic_error("triangular_family produced a non-r-potent matrix");
  return m;
}

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  rng.shuffle(map);
  return Permutation(std::move(map));
}

RMatrix random_rank_one_idempotent(std::size_t n, bool zero_padded, Rng& rng) {
  std::vector<Rational> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = rng.pick(small_values());
    v[i] = rng.pick(small_values());
    if (zero_padded) {
      if (rng.coin(1, 3)) u[i] = 0;
      if (rng.coin(1, 3)) v[i] = 0;
    }
  }
  // Keep at least one coordinate where both vectors are positive.
  const auto anchor = rng.uniform(0, n - 1);
  if (sgn(u[anchor]) == 0) u[anchor] = 1;
  if (sgn(v[anchor]) == 0) v[anchor] = 1;
  Rational dot = 0;
  for (std::size_t i = 0; i < n; ++i) dot += v[i] * u[i];
  for (auto& e : v) e /= dot;
  return rank_one_idempotent(u, v);
}

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::cycle:
      return "cycle";
    case GeneratorKind::rank_one_idempotent:
      return "rank_one_idempotent";
    case GeneratorKind::block_diagonal:
      return "block_diagonal";
    case GeneratorKind::kronecker:
      return "kron";
    case GeneratorKind::triangular_family:
      return "triangular_family";
    case GeneratorKind::permutation:
      return "permutation";
    case GeneratorKind::conjugated:
      return "conjugated";
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(const std::string& name) {
  for (auto kind : {GeneratorKind::cycle, GeneratorKind::rank_one_idempotent, GeneratorKind::block_diagonal,
                    GeneratorKind::kronecker, GeneratorKind::triangular_family, GeneratorKind::permutation,
                    GeneratorKind::conjugated}) {
    if (name == to_string(kind)) return kind;
  }
  if (name == "kronecker") return GeneratorKind::kronecker;
  return std::nullopt;
}

GeneratedMatrix random_r_potent(unsigned r, std::size_t target_rank, std::uint64_t seed,
                                const RandomPotentOptions& options) {
  if (r < 2) throw InvalidInput("r must be at least 2");
  check_rank_target(target_rank, options.max_size);
  Rng rng(seed);
  std::size_t zero_dims = 0;
  if (options.force_zero_block || (!options.forbid_zero_block && rng.coin(1, 3))) {
    zero_dims = std::min<std::size_t>(rng.uniform(1, 2), options.max_size - target_rank);
    if (zero_dims == 0 && options.force_zero_block) {
      throw UnreachableRank("no room for a zero block at rank " + std::to_string(target_rank));
    }
  }
  auto m = build_component(target_rank, options.max_size - zero_dims, r, rng);
  if (zero_dims > 0) m = triangular_family(m, random_coupling(m.size(), zero_dims, rng), r);
  if (options.conjugate) m = conjugate(m, random_permutation(m.size(), rng));
  check_emission(m, r, target_rank);
  GeneratorSpec spec;
  spec.kind = options.force_zero_block ? GeneratorKind::triangular_family : GeneratorKind::conjugated;
  spec.r = r;
  spec.rank = target_rank;
  spec.seed = seed;
  return GeneratedMatrix{std::move(m), r, target_rank, spec};
}

GeneratedMatrix generate(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::cycle: {
      if (spec.len == 0) throw InvalidInput("cycle length must be at least 1");
      auto m = cycle_matrix(spec.len);
      const auto r = static_cast<unsigned>(spec.len + 1);
      check_emission(m, r, spec.len);
      return GeneratedMatrix{std::move(m), r, spec.len, spec};
    }
    case GeneratorKind::rank_one_idempotent: {
      if (spec.n == 0) throw InvalidInput("dimension must be at least 1");
      auto m = random_rank_one_idempotent(spec.n, spec.zero_padded, rng);
      check_emission(m, 2, 1);
      return GeneratedMatrix{std::move(m), 2, 1, spec};
    }
    case GeneratorKind::block_diagonal: {
      if (spec.r < 2) throw InvalidInput("r must be at least 2");
      check_rank_target(spec.rank, generator_max_size);
      std::vector<RMatrix> blocks;
      std::size_t remaining = spec.rank;
      std::size_t budget = generator_max_size;
      while (remaining > 0) {
        const auto part = remaining == 1 ? 1 : rng.uniform(1, remaining - 1);
        const auto part_budget = part + rng.uniform(0, std::min<std::size_t>(2, budget - remaining));
        blocks.push_back(build_component(part, part_budget, spec.r, rng));
        budget -= blocks.back().size();
        remaining -= part;
      }
      auto m = block_diagonal(blocks);
      check_emission(m, spec.r, spec.rank);
      return GeneratedMatrix{std::move(m), spec.r, spec.rank, spec};
    }
    case GeneratorKind::kronecker: {
      if (spec.r < 2) throw InvalidInput("r must be at least 2");
      check_rank_target(spec.rank, generator_max_size);
      std::vector<std::pair<std::size_t, std::size_t>> factorizations;
      for (std::size_t a = 1; a <= spec.rank; ++a) {
        if (spec.rank % a == 0) factorizations.emplace_back(a, spec.rank / a);
      }
      const auto [a, b] = rng.pick(factorizations);
      const auto budget_a = rng.uniform(a, std::max(a, generator_max_size / b));
      auto left = build_component(a, budget_a, spec.r, rng);
      auto right = build_component(b, generator_max_size / left.size(), spec.r, rng);
      auto m = kron(left, right);
      m = conjugate(m, random_permutation(m.size(), rng));
      check_emission(m, spec.r, spec.rank);
      return GeneratedMatrix{std::move(m), spec.r, spec.rank, spec};
    }
    case GeneratorKind::triangular_family:
    case GeneratorKind::conjugated: {
      RandomPotentOptions options;
      options.force_zero_block = spec.kind == GeneratorKind::triangular_family;
      auto g = random_r_potent(spec.r, spec.rank, spec.seed, options);
      g.spec = spec;
      return g;
    }
    case GeneratorKind::permutation: {
      if (spec.n == 0) throw InvalidInput("dimension must be at least 1");
      const auto p = random_permutation(spec.n, rng);
      auto m = p.to_matrix();
      const auto r = static_cast<unsigned>(p.order() + 1);
      check_emission(m, r, spec.n);
      return GeneratedMatrix{std::move(m), r, spec.n, spec};
    }
  }
  throw InvalidInput("unknown generator kind");
}

}  // namespace rpotent
