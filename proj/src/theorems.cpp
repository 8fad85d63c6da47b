#include "rpotent/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "rpotent/decomposition.hpp"
#include "rpotent/io.hpp"
#include "rpotent/potency.hpp"
#include "rpotent/semigroup.hpp"
#include "rpotent/spectral.hpp"
#include "rpotent/structure.hpp"

namespace rpotent::suites {

namespace {

TrialOutcome fail(std::string detail, std::string input) {
  return TrialOutcome{false, false, std::move(detail), std::move(input)};
}

TrialOutcome skip(std::string detail) { return TrialOutcome{true, true, std::move(detail), {}}; }

TrialOutcome pass() { return TrialOutcome{}; }

std::string describe(const GeneratedMatrix& g) {
  return "r=" + std::to_string(g.r) + " rank=" + std::to_string(g.rank) + " n=" + std::to_string(g.matrix.size());
}

RMatrix zero_padded(const RMatrix& b, std::size_t n) {
  if (b.size() == n) return b;
  return block_diagonal({b, RMatrix(n - b.size())});
}

PatternMatrix random_pattern(std::size_t n, Rng& rng) {
  const auto density = rng.uniform(2, 9);
  PatternMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.uniform(0, 9) < density) p.set(i, j);
    }
  }
  return p;
}

std::vector<PatternMatrix> patterns_of(const std::vector<RMatrix>& ms) {
  std::vector<PatternMatrix> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(pattern(m));
  return out;
}

std::string key_of(const RMatrix& m) {
  std::string key;
  for (const auto& e : m.entries()) key += to_string(e) + ',';
  return key;
}

}  // namespace

bool closure_meets_rank_hypothesis(const std::vector<RMatrix>& generators, unsigned r, std::size_t cap) {
  std::vector<RMatrix> members;
  std::unordered_set<std::string> seen;
  auto admit = [&](RMatrix m) {
    if (!seen.insert(key_of(m)).second) return true;
    if (members.size() == cap || !is_r_potent(m, r) || exact_rank(m) + 1 <= r) return false;
    members.push_back(std::move(m));
    return true;
  };
  for (const auto& g : generators) {
    if (!admit(g)) return false;
  }
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& g : generators) {
      if (!admit(multiply(members[head], g))) return false;
    }
  }
  return true;
}

namespace {

}  // namespace

std::string matrices_json(const std::vector<RMatrix>& ms) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(matrix_to_json(m));
  return arr.dump();
}

// ---- samplers ---------------------------------------------------------------

GeneratedMatrix sample_r_potent(std::uint64_t seed) {
  Rng rng(seed);
  const auto r = static_cast<unsigned>(rng.uniform(2, 5));
  const auto rank = rng.uniform(1, 8);
  return random_r_potent(r, rank, rng.next());
}

GeneratedMatrix sample_rank_exceeds(std::uint64_t seed, std::size_t max_size) {
  Rng rng(seed);
  const auto r = static_cast<unsigned>(rng.uniform(2, 5));
  const auto rank = rng.uniform(r, std::min<std::size_t>(r + 4, max_size));
  RandomPotentOptions options;
  options.max_size = max_size;
  return random_r_potent(r, rank, rng.next(), options);
}

GeneratedMatrix sample_singular_zero_diagonal(std::uint64_t seed) {
  Rng rng(seed);
  const auto r = static_cast<unsigned>(rng.uniform(3, 5));
  const auto rank = rng.uniform(1, r - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    RandomPotentOptions options;
    options.force_zero_block = rng.coin(3, 4);
    auto g = random_r_potent(r, rank, rng.next(), options);
    if (main_decomposability_test(g.matrix, r).prediction_case ==
        DecompositionCase::singular_zero_diagonal_powers) {
      return g;
    }
  }
  throw std::logic_error("no singular zero-diagonal sample found");
}

GeneratedMatrix sample_indecomposable_top_rank(std::uint64_t seed) {
  Rng rng(seed);
  const auto r = static_cast<unsigned>(rng.uniform(3, 6));
  const std::size_t h = r - 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    RMatrix m = cycle_matrix(h);
    switch (rng.uniform(0, 2)) {
      case 0:
        break;
      case 1:
        m = kron(m, random_rank_one_idempotent(rng.uniform(2, 3), false, rng));
        break;
      default:
        m = kron(random_rank_one_idempotent(rng.uniform(2, 3), false, rng), m);
        break;
    }
    m = conjugate(m, random_permutation(m.size(), rng));
    if (!is_decomposable(m) && exact_rank(m) == h && is_r_potent(m, r)) {
      GeneratorSpec spec;
      spec.r = r;
      spec.rank = h;
      spec.seed = seed;
      return GeneratedMatrix{std::move(m), r, h, spec};
    }
  }
  throw std::logic_error("no indecomposable top-rank sample found");
}

RMatrix sample_rank_one_idempotent(std::uint64_t seed, bool zero_padded) {
  Rng rng(seed);
  return random_rank_one_idempotent(rng.uniform(1, 6), zero_padded, rng);
}

RMatrix sample_primitive(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  static const std::vector<Rational> values{Rational(1), Rational(2), Rational(3), Rational(1, 2)};
  for (;;) {
    const auto p = random_pattern(n, rng);
    RMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (p.test(i, j)) m.set(i, j, rng.pick(values));
      }
    }
    if (is_primitive(m)) return m;
  }
}

std::vector<RMatrix> sample_rank_exceeds_generators(std::uint64_t seed, unsigned* r_out) {
  Rng rng(seed);
  for (int attempt = 0;; ++attempt) {
    const auto r = static_cast<unsigned>(rng.uniform(2, 4));
    const auto count = attempt < 200 ? rng.uniform(1, 3) : 1;
    std::vector<RMatrix> gens;
    if (rng.coin(1, 4)) {
      // Permutation matrices whose order divides r - 1.
      const auto n = rng.uniform(r, 6);
      while (gens.size() < count) {
        const auto p = random_permutation(n, rng);
        if ((r - 1) % p.order() == 0) gens.push_back(p.to_matrix());
      }
    } else {
      RandomPotentOptions options;
      options.max_size = 10;
      gens.push_back(random_r_potent(r, rng.uniform(r, r + 2), rng.next(), options).matrix);
      const auto n = gens.front().size();
      while (gens.size() < count) {
        RandomPotentOptions sub;
        sub.max_size = n;
        const auto rank = rng.uniform(r, std::max<std::size_t>(r, std::min<std::size_t>(r + 2, n)));
        auto b = random_r_potent(r, rank, rng.next(), sub).matrix;
        gens.push_back(conjugate(zero_padded(b, n), random_permutation(n, rng)));
      }
    }
    if (closure_meets_rank_hypothesis(gens, r, 500)) {
      if (r_out != nullptr) *r_out = r;
      return gens;
    }
  }
}

// ---- checks -----------------------------------------------------------------

TrialOutcome check_rank_trace(const GeneratedMatrix& g) {
  if (rank_trace_check(g.matrix, g.r)) return pass();
  return fail("rank != trace(A^(r-1)) for " + describe(g), to_json_text(g.matrix));
}

TrialOutcome check_predicted_decomposable(const GeneratedMatrix& g) {
  const auto rep = main_decomposability_test(g.matrix, g.r);
  if (rep.prediction_case == DecompositionCase::no_prediction) return skip("no prediction");
  if (rep.actually_decomposable) return pass();
  return fail(std::string("predicted decomposable (") + to_string(rep.prediction_case) +
                  ") but indecomposable: " + describe(g),
              to_json_text(g.matrix));
}

TrialOutcome check_structure(const GeneratedMatrix& g) {
  if (!is_decomposable(g.matrix)) return skip("indecomposable");
  const auto rep = analyze_structure(g.matrix, g.r);
  std::vector<std::string> problems;
  if (!rep.blocks_ok) {
    problems.push_back(rep.block_rank_sum != rep.k ? "block ranks do not sum to k"
                                                   : "a nonzero block is not an indecomposable r-potent of rank <= r-1");
  }
  if (rep.nonzero_count < rep.lower_bound || rep.nonzero_count > rep.k) {
    problems.push_back("nonzero block count " + std::to_string(rep.nonzero_count) + " outside [" +
                       std::to_string(rep.lower_bound) + ", " + std::to_string(rep.k) + "]");
  }
  if (rep.consecutive_zero_pairs > 0) {
    problems.push_back("every linear extension has adjacent zero blocks (best: " +
                       std::to_string(rep.consecutive_zero_pairs) + " pairs)");
  }
  if (rep.total_count > 2 * rep.k + 1) {
    problems.push_back("total blocks " + std::to_string(rep.total_count) + " > 2k+1 = " +
                       std::to_string(2 * rep.k + 1));
  }
  if (problems.empty()) return pass();
  std::string detail = describe(g) + " k=" + std::to_string(rep.k) + ":";
  for (const auto& p : problems) detail += " " + p + ";";
  return fail(detail, to_json_text(g.matrix));
}

TrialOutcome check_rank_one_idempotent(const RMatrix& a) {
  const bool zero_diag = rank_one_idempotent_diag_test(a);
  if (zero_diag == is_decomposable(a)) return pass();
  return fail("zero-diagonal test disagrees with decomposability", to_json_text(a));
}

TrialOutcome check_zero_diagonal_powers(const GeneratedMatrix& g) {
  const auto n = g.matrix.size();
  const auto upto = std::max<std::size_t>(n, g.r - 1);
  auto p = g.matrix;
  for (std::size_t k = 1; k <= upto; ++k) {
    if (!p.has_zero_diagonal_entry()) return skip("a power has a positive diagonal");
    if (k < upto) p = multiply(p, g.matrix);
  }
  const bool decomposable = is_decomposable(g.matrix);
  const bool singular = exact_rank(g.matrix) < n;
  if (decomposable && singular) return pass();
  return fail(std::string("zero-diagonal powers but ") + (decomposable ? "" : "indecomposable ") +
                  (singular ? "" : "invertible ") + describe(g),
              to_json_text(g.matrix));
}

TrialOutcome check_kronecker(const GeneratedMatrix& a, const GeneratedMatrix& b) {
  const auto k = kron(a.matrix, b.matrix);
  const auto r = a.r;
  const auto rank = exact_rank(k);
  std::vector<std::string> problems;
  if (!is_r_potent(k, r)) problems.push_back("product is not r-potent");
  if (rank != a.rank * b.rank) problems.push_back("rank is not multiplicative");
  if (rank + 1 <= r) problems.push_back("rank <= r-1");
  if (!is_decomposable(k)) problems.push_back("product is indecomposable");
  if (problems.empty()) return pass();
  std::string detail = "A: " + describe(a) + ", B: " + describe(b) + ":";
  for (const auto& p : problems) detail += " " + p + ";";
  return fail(detail, matrices_json({a.matrix, b.matrix}));
}

TrialOutcome check_cyclic_semigroup(const GeneratedMatrix& g) {
  const auto rep = cyclic_semigroup_decomposable_check(g.matrix, g.r);
  if (rep.decomposition.prediction_case == DecompositionCase::no_prediction) return skip("no prediction");
  const auto s = cyclic_semigroup(g.matrix, g.r);
  for (const auto& x : s.members) {
    for (const auto& y : s.members) {
      const auto xy = multiply(x, y);
      if (std::none_of(s.members.begin(), s.members.end(), [&](const RMatrix& m) { return m == xy; })) {
        return fail("cyclic semigroup not closed under products: " + describe(g), to_json_text(g.matrix));
      }
    }
  }
  if (rep.applicable && rep.all_triangular) return pass();
  return fail("powers are not triangularized by a common permutation: " + describe(g), to_json_text(g.matrix));
}

TrialOutcome check_wielandt(const RMatrix& a) {
  if (wielandt_check(a)) return pass();
  return fail("A^(n^2-2n+2) has a zero entry", to_json_text(a));
}

TrialOutcome check_perron_value(const GeneratedMatrix& g) {
  const double rho = perron_value(g.matrix);
  if (std::abs(rho - 1.0) <= 1e-9) return pass();
  std::ostringstream out;
  out.precision(17);
  out << "Perron value " << rho << " for " << describe(g);
  return fail(out.str(), to_json_text(g.matrix));
}

TrialOutcome check_trace_zero(const GeneratedMatrix& g) {
  if (trace_zero_check(g.matrix, g.r)) return pass();
  return fail("nonzero trace: " + describe(g), to_json_text(g.matrix));
}

TrialOutcome check_semigroup_equivalences(const std::vector<RMatrix>& generators) {
  const auto s = pattern_closure(patterns_of(generators), default_closure_cap);
  if (s.truncated) return skip("closure truncated");
  if (s.n < 2) return skip("dimension 1");
  const auto witness = semigroup_decomposable(s);
  const auto zero = common_zero_entry(s);
  const bool sum_zero = sum_has_zero(s);
  if (witness) {
    for (const auto& m : s.members) {
      if (!verify_witness(m, *witness)) return fail("witness not invariant for a member", matrices_json(generators));
    }
  }
  if (witness.has_value() == zero.has_value() && zero.has_value() == sum_zero) return pass();
  return fail("decomposability routes disagree (witness " + std::to_string(witness.has_value()) +
                  ", common zero " + std::to_string(zero.has_value()) + ", sum zero " +
                  std::to_string(sum_zero) + ")",
              matrices_json(generators));
}

TrialOutcome check_semigroup_common_zero(const std::vector<RMatrix>& generators, unsigned r) {
  const auto s = pattern_closure(patterns_of(generators), default_closure_cap);
  if (s.truncated) return fail("closure truncated at the cap", matrices_json(generators));
  if (s.n >= 2) {
    auto agreement = check_semigroup_equivalences(generators);
    if (!agreement.passed) return agreement;
  }
  if (common_zero_entry(s)) return pass();
  std::string detail = "no common zero entry; " + std::to_string(generators.size()) + " generator(s), r=" +
                       std::to_string(r) + ", n=" + std::to_string(s.n) + ", closure size " +
                       std::to_string(s.members.size());
  if (closure_meets_rank_hypothesis(generators, r, 2000)) {
    detail += "; every member of the closure is r-potent of rank > r-1";
  }
  return fail(detail, matrices_json(generators));
}

TrialOutcome check_rank_floor(const std::vector<RMatrix>& generators, unsigned r) {
  RankFloorReport rep;
  try {
    rep = semigroup_rank_floor_check(generators, r, 2000);
  } catch (const TruncatedClosure&) {
    return skip("closure truncated");
  }
  if (rep.floor_ok) return pass();
  return fail("a nonzero diagonal block has no compression of rank <= r-1", matrices_json(generators));
}

// ---- runner -----------------------------------------------------------------

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> catalog{
      {"2.4", "Wielandt power of a primitive matrix is positive"},
      {"2.5", "zero diagonals in every power force decomposability and singularity"},
      {"2.6", "rank(A) = trace(A^(r-1))"},
      {"3.1", "rank-one idempotent: decomposable iff a zero diagonal entry"},
      {"3.2", "rank > r-1, or singular with zero-diagonal powers, forces decomposability"},
      {"3.2.1", "rank > r-1 forces decomposability"},
      {"3.2.2", "singular, rank <= r-1, zero-diagonal powers forces decomposability"},
      {"4.1", "structure of maximal standard block triangularizations"},
      {"5.1", "A (x) B with rank(A) > r-1 and B r-potent is a decomposable r-potent"},
      {"5.2", "A (x) B with rank(A) > r-1 and B idempotent is a decomposable r-potent"},
      {"6.1", "cyclic semigroup shares the decomposing permutation"},
      {"6.2", "semigroup decomposability equivalences"},
      {"6.3", "semigroups generated by r-potents of rank > r-1 have a common zero"},
      {"6.4", "nonzero diagonal blocks of a semigroup contain rank <= r-1"},
      {"7.1", "semigroup decomposable iff the sum of members has a zero"},
      {"7.2", "permutation matrices: potency classes and indecomposability"},
      {"perron", "spectral radius of nonzero r-potents is 1; trace zero at rank r-1"},
  };
  return catalog;
}

SuiteResult run_theorem(const std::string& id, const SuiteOptions& options) {
  const auto& catalog = theorem_catalog();
  const auto found = std::find_if(catalog.begin(), catalog.end(), [&](const TheoremInfo& t) { return t.id == id; });
  if (found == catalog.end()) throw InvalidInput("unknown theorem id '" + id + "'");
  const auto& title = found->title;
  const auto trials = options.trials;
  const auto seed = options.seed;

  if (id == "2.4") {
    return run_trials(id, title, trials, seed, [&](std::uint64_t s) {
      Rng rng(s);
      const auto n = options.n.value_or(rng.uniform(2, 6));
      return check_wielandt(sample_primitive(n, rng.next()));
    });
  }
  if (id == "2.5") {
    return run_trials(id, title, trials, seed,
                      [](std::uint64_t s) { return check_zero_diagonal_powers(sample_singular_zero_diagonal(s)); });
  }
  if (id == "2.6") {
    return run_trials(id, title, trials, seed, [](std::uint64_t s) { return check_rank_trace(sample_r_potent(s)); });
  }
  if (id == "3.1") {
    return run_trials(id, title, trials, seed, [](std::uint64_t s) {
      Rng rng(s);
      const bool padded = rng.coin();
      return check_rank_one_idempotent(sample_rank_one_idempotent(rng.next(), padded));
    });
  }
  if (id == "3.2" || id == "3.2.1" || id == "3.2.2" || id == "4.1" || id == "6.1") {
    const auto sample = [id](std::uint64_t s) {
      if (id == "3.2.1") return sample_rank_exceeds(s);
      if (id == "3.2.2") return sample_singular_zero_diagonal(s);
      Rng rng(s);
      const bool first_part = rng.coin();
      return first_part ? sample_rank_exceeds(rng.next()) : sample_singular_zero_diagonal(rng.next());
    };
    return run_trials(id, title, trials, seed, [&](std::uint64_t s) {
      const auto g = sample(s);
      if (id == "4.1") return check_structure(g);
      if (id == "6.1") return check_cyclic_semigroup(g);
      return check_predicted_decomposable(g);
    });
  }
  if (id == "5.1" || id == "5.2") {
    const bool idempotent = id == "5.2";
    return run_trials(id, title, trials, seed, [idempotent](std::uint64_t s) {
      Rng rng(s);
      const auto a = sample_rank_exceeds(rng.next(), 8);
      RandomPotentOptions options;
      options.max_size = 4;
      const auto b = random_r_potent(idempotent ? 2 : a.r, rng.uniform(1, 2), rng.next(), options);
      return check_kronecker(a, b);
    });
  }
  if (id == "6.2" || id == "7.1") {
    return run_trials(id, title, trials, seed, [](std::uint64_t s) {
      Rng rng(s);
      if (rng.coin()) return check_semigroup_equivalences(sample_rank_exceeds_generators(rng.next()));
      const auto n = rng.uniform(2, 6);
      const auto count = rng.uniform(1, 3);
      std::vector<RMatrix> gens;
      for (std::size_t g = 0; g < count; ++g) {
        const auto p = random_pattern(n, rng);
        RMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (p.test(i, j)) m.set(i, j, 1);
          }
        }
        gens.push_back(std::move(m));
      }
      return check_semigroup_equivalences(gens);
    });
  }
  if (id == "6.3" || id == "6.4") {
    const bool floor = id == "6.4";
    return run_trials(id, title, trials, seed, [floor](std::uint64_t s) {
      unsigned r = 2;
      const auto gens = sample_rank_exceeds_generators(s, &r);
      return floor ? check_rank_floor(gens, r) : check_semigroup_common_zero(gens, r);
    });
  }
  if (id == "7.2") {
    std::vector<std::size_t> sizes;
    if (options.n) {
      sizes.push_back(*options.n);
    } else {
      for (std::size_t n = 2; n <= 6; ++n) sizes.push_back(n);
    }
    SuiteResult result{id, title, sizes.size(), 0, 0, std::nullopt, {}};
    for (std::size_t t = 0; t < sizes.size(); ++t) {
      const auto rep = symmetric_group_analysis(sizes[t]);
      std::ostringstream note;
      note << "n=" << rep.n << ": " << rep.order << " elements, sum positive " << rep.sum_positive
           << ", classes";
      for (const auto& [potency, count] : rep.potency_counts) note << ' ' << potency << "-potent:" << count;
      note << ", max potency " << rep.max_potency;
      result.notes.push_back(note.str());
      const bool ok = rep.sum_positive && !rep.decomposable && rep.potency_matches_cycle_type &&
                      rep.all_classes_present;
      if (ok) {
        ++result.passed;
      } else if (!result.first_failure) {
        result.first_failure = Counterexample{t, 0, "symmetric group check failed for n=" + std::to_string(rep.n), {}};
      }
    }
    return result;
  }
  // perron
  return run_trials(id, title, trials, seed, [](std::uint64_t s) {
    Rng rng(s);
    if (rng.coin()) return check_perron_value(sample_r_potent(rng.next()));
    const auto g = sample_indecomposable_top_rank(rng.next());
    auto outcome = check_trace_zero(g);
    if (!outcome.passed) return outcome;
    return check_perron_value(g);
  });
}

}  // namespace rpotent::suites
