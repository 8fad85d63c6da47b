// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance <path to rpotent cli>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rpotent/decomposition.hpp"
#include "rpotent/io.hpp"
#include "rpotent/parallel.hpp"
#include "rpotent/potency.hpp"
#include "rpotent/semigroup.hpp"
#include "rpotent/spectral.hpp"
#include "rpotent/structure.hpp"
#include "rpotent/theorems.hpp"

using namespace rpotent;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int criterion, bool ok, const std::string& summary) {
  if (!ok) ++failures;
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << "  " << summary << std::endl;
}

std::string fixed(double x, int digits = 2) {
  std::ostringstream out;
  out.precision(digits);
  out << std::fixed << x;
  return out.str();
}

// Seeds per criterion; trial i uses derive_seed(base, i).
constexpr std::uint64_t seed_r_potent = 2001;
constexpr std::uint64_t seed_rank_exceeds = 2003;
constexpr std::uint64_t seed_singular = 2004;
constexpr std::uint64_t seed_idempotent = 2005;
constexpr std::uint64_t seed_kron = 2007;
constexpr std::uint64_t seed_primitive = 2008;
constexpr std::uint64_t seed_top_rank = 2009;
constexpr std::uint64_t seed_semigroup = 2010;

struct Sampled {
  std::uint64_t seed;
  GeneratedMatrix g;
};

std::vector<Sampled> sample(std::size_t count, std::uint64_t base, GeneratedMatrix (*fn)(std::uint64_t)) {
  return parallel::run_trials(count, [&](std::size_t i) {
    const auto s = derive_seed(base, i);
    return Sampled{s, fn(s)};
  });
}

GeneratedMatrix rank_exceeds(std::uint64_t s) { return suites::sample_rank_exceeds(s); }

void criterion_1() {
  const auto start = Clock::now();
  std::uint64_t checked = 0;
  std::uint64_t disagreements = 0;
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto sweep = parallel::exhaustive_oracle_sweep(n);
    checked += sweep.checked;
    disagreements += sweep.disagreements;
  }
  for (std::size_t n = 5; n <= 8; ++n) {
    const auto sweep = parallel::random_oracle_sweep(n, 1000, 1000 + n);
    checked += sweep.checked;
    disagreements += sweep.disagreements;
  }
  const auto elapsed = seconds_since(start);
  const bool ok = checked == 512 + 65536 + 4000 && disagreements == 0 && elapsed < 60;
  report(1, ok,
         std::to_string(checked) + " patterns, " + std::to_string(disagreements) + " disagreements, " +
             fixed(elapsed) + " s");
}

void criterion_2(const std::vector<Sampled>& samples) {
  std::size_t bad = 0;
  std::array<std::size_t, 6> per_r{};
  std::size_t max_n = 0;
  for (const auto& s : samples) {
    const auto& g = s.g;
    ++per_r[g.r];
    max_n = std::max(max_n, g.matrix.size());
    const bool ok = is_r_potent(g.matrix, g.r) && g.matrix.size() <= 36 &&
                    Rational(static_cast<long>(exact_rank(g.matrix))) == trace(power(g.matrix, g.r - 1));
    if (!ok) {
      ++bad;
      std::cout << "  criterion 2 failure, seed " << s.seed << ": " << to_json_text(g.matrix);
    }
  }
  const bool all_r = per_r[2] && per_r[3] && per_r[4] && per_r[5];
  report(2, bad == 0 && all_r && samples.size() == 500,
         std::to_string(samples.size()) + " r-potents (r=2:" + std::to_string(per_r[2]) + " r=3:" +
             std::to_string(per_r[3]) + " r=4:" + std::to_string(per_r[4]) + " r=5:" + std::to_string(per_r[5]) +
             "), max n " + std::to_string(max_n) + ", " + std::to_string(bad) + " failures");
}

void criterion_3(const std::vector<Sampled>& samples, double elapsed) {
  std::size_t bad = 0;
  for (const auto& s : samples) {
    const auto& g = s.g;
    const auto rank = exact_rank(g.matrix);
    const bool ok = is_r_potent(g.matrix, g.r) && rank + 1 > g.r && is_decomposable(g.matrix);
    if (!ok) {
      ++bad;
      std::cout << "  criterion 3 failure, seed " << s.seed << ": " << to_json_text(g.matrix);
    }
  }
  report(3, bad == 0 && elapsed < 30,
         std::to_string(samples.size()) + " r-potents of rank > r-1, " + std::to_string(bad) + " exceptions, " +
             fixed(elapsed) + " s");
}

bool powers_have_zero_diagonal(const RMatrix& a, unsigned r) {
  auto p = a;
  for (unsigned e = 2; e + 1 <= r; ++e) {
    p = multiply(p, a);
    bool zero = false;
    for (std::size_t i = 0; i < p.size() && !zero; ++i) zero = p(i, i) == 0;
    if (!zero) return false;
  }
  return true;
}

void criterion_4(const std::vector<Sampled>& samples) {
  std::size_t bad = 0;
  for (const auto& s : samples) {
    const auto& g = s.g;
    const auto rank = exact_rank(g.matrix);
    const bool hypothesis = is_r_potent(g.matrix, g.r) && rank < g.matrix.size() && rank + 1 <= g.r &&
                            powers_have_zero_diagonal(g.matrix, g.r);
    if (!hypothesis || !is_decomposable(g.matrix)) {
      ++bad;
      std::cout << "  criterion 4 failure, seed " << s.seed << (hypothesis ? "" : " (hypothesis not met)") << ": "
                << to_json_text(g.matrix);
    }
  }
  report(4, bad == 0,
         std::to_string(samples.size()) + " singular r-potents with zero-diagonal powers, " + std::to_string(bad) +
             " exceptions");
}

void criterion_5() {
  std::size_t bad = 0;
  std::size_t decomposable = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const auto s = derive_seed(seed_idempotent, i);
    const auto a = suites::sample_rank_one_idempotent(s, i % 2 == 1);
    bool zero_diagonal = false;
    for (std::size_t d = 0; d < a.size(); ++d) zero_diagonal = zero_diagonal || a(d, d) == 0;
    const bool dec = is_decomposable(a);
    decomposable += dec ? 1 : 0;
    const bool ok = multiply(a, a) == a && exact_rank(a) == 1 && dec == zero_diagonal;
    if (!ok) {
      ++bad;
      std::cout << "  criterion 5 failure, seed " << s << ": " << to_json_text(a);
    }
  }
  report(5, bad == 0,
         "100 rank-one idempotents, " + std::to_string(decomposable) + " decomposable, " + std::to_string(bad) +
             " mismatches");
}

void criterion_6(const std::vector<Sampled>& rank_samples, const std::vector<Sampled>& singular_samples) {
  std::vector<const Sampled*> inputs;
  for (const auto* set : {&rank_samples, &singular_samples}) {
    for (const auto& s : *set) {
      if (is_decomposable(s.g.matrix)) inputs.push_back(&s);
    }
  }
  std::size_t bad_blocks = 0, bad_sum = 0, bad_count = 0, bad_order = 0, bad_total = 0, bad = 0;
  std::ofstream dump("criterion6_failures.jsonl");
  std::size_t printed = 0;
  for (const auto* s : inputs) {
    const auto rep = analyze_structure(s->g.matrix, s->g.r);
    std::vector<std::string> problems;
    if (!rep.blocks_ok) problems.push_back("block classification"), ++bad_blocks;
    if (rep.block_rank_sum != rep.k) problems.push_back("block ranks do not sum to k"), ++bad_sum;
    if (rep.lower_bound > rep.nonzero_count || rep.nonzero_count > rep.k) {
      problems.push_back("nonzero block count out of range"), ++bad_count;
    }
    if (rep.consecutive_zero_pairs != 0) {
      problems.push_back("every order has adjacent zero blocks (" + std::to_string(rep.consecutive_zero_pairs) +
                         " pairs)");
      ++bad_order;
    }
    if (rep.total_count > 2 * rep.k + 1) problems.push_back("more than 2k+1 blocks"), ++bad_total;
    if (problems.empty()) continue;
    ++bad;
    std::string line = "seed " + std::to_string(s->seed) + ", r=" + std::to_string(s->g.r) +
                       ", k=" + std::to_string(rep.k) + ", blocks " + std::to_string(rep.total_count) + ":";
    for (const auto& p : problems) line += " " + p + ";";
    Json entry;
    entry["seed"] = s->seed;
    entry["r"] = s->g.r;
    entry["problems"] = problems;
    entry["matrix"] = matrix_to_json(s->g.matrix);
    dump << entry.dump() << "\n";
    if (printed < 3) {
      std::cout << "  criterion 6 failure, " << line << "\n";
      if (printed == 0) std::cout << "    " << to_json_text(s->g.matrix);
      ++printed;
    }
  }
  report(6, bad == 0,
         std::to_string(inputs.size()) + " decomposable inputs, " + std::to_string(bad) + " violations (blocks " +
             std::to_string(bad_blocks) + ", rank sum " + std::to_string(bad_sum) + ", nonzero count " +
             std::to_string(bad_count) + ", adjacent zero blocks " + std::to_string(bad_order) + ", 2k+1 bound " +
             std::to_string(bad_total) + "); all violations in criterion6_failures.jsonl");
}

void criterion_7() {
  suites::SuiteOptions options;
  options.trials = 100;
  options.seed = seed_kron;
  std::string summary;
  bool ok = true;
  for (const char* id : {"5.1", "5.2"}) {
    const auto r = suites::run_theorem(id, options);
    ok = ok && r.ok() && r.passed == 100;
    summary += std::string(summary.empty() ? "" : ", ") + id + " " + std::to_string(r.passed) + "/100";
    if (r.first_failure) std::cout << "  criterion 7 failure: " << r.first_failure->detail << "\n";
  }
  report(7, ok, "Kronecker trials " + summary);
}

void criterion_8() {
  std::size_t bad = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto results = parallel::run_trials(100, [n](std::size_t i) {
      const auto a = suites::sample_primitive(n, derive_seed(seed_primitive + n, i));
      return is_primitive(a) && power(a, wielandt_exponent(n)).is_positive();
    });
    bad += static_cast<std::size_t>(std::count(results.begin(), results.end(), false));
  }
  report(8, bad == 0, "500 primitive matrices, n=2..6, " + std::to_string(bad) + " non-positive Wielandt powers");
}

void criterion_9(const std::vector<const std::vector<Sampled>*>& sets) {
  std::size_t checked = 0, bad = 0;
  double worst = 0;
  for (const auto* set : sets) {
    for (const auto& s : *set) {
      if (s.g.matrix.is_zero()) continue;
      ++checked;
      const auto value = perron_value(s.g.matrix);
      worst = std::max(worst, std::abs(value - 1.0));
      if (std::abs(value - 1.0) > 1e-9) {
        ++bad;
        std::cout << "  criterion 9 failure, seed " << s.seed << ": perron " << value << "\n";
      }
    }
  }
  const auto top = sample(100, seed_top_rank, suites::sample_indecomposable_top_rank);
  std::size_t trace_bad = 0;
  for (const auto& s : top) {
    const auto& g = s.g;
    const bool hypothesis = !is_decomposable(g.matrix) && exact_rank(g.matrix) + 1 == g.r && is_r_potent(g.matrix, g.r);
    if (!hypothesis || trace(g.matrix) != 0) {
      ++trace_bad;
      std::cout << "  criterion 9 trace failure, seed " << s.seed << ": " << to_json_text(g.matrix);
    }
    ++checked;
    const auto value = perron_value(g.matrix);
    worst = std::max(worst, std::abs(value - 1.0));
    if (std::abs(value - 1.0) > 1e-9) ++bad;
  }
  std::ostringstream w;
  w << worst;
  report(9, bad == 0 && trace_bad == 0,
         std::to_string(checked) + " Perron values, max |value - 1| " + w.str() + ", " + std::to_string(bad) +
             " off; 100 indecomposable rank-(r-1) traces, " + std::to_string(trace_bad) + " nonzero");
}

void criterion_10() {
  const auto outcomes = parallel::run_trials(100, [](std::size_t i) {
    const auto s = derive_seed(seed_semigroup, i);
    unsigned r = 2;
    const auto gens = suites::sample_rank_exceeds_generators(s, &r);
    return std::make_pair(suites::check_semigroup_common_zero(gens, r), suites::check_semigroup_equivalences(gens));
  });
  std::size_t bad = 0, disagreements = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& [common, agree] = outcomes[i];
    if (!agree.passed && !agree.skipped) ++disagreements;
    if (!common.passed) {
      ++bad;
      std::cout << "  criterion 10 failure, seed " << derive_seed(seed_semigroup, i) << ": " << common.detail
                << "\n    generators " << common.input_json << "\n";
    }
  }
  report(10, bad == 0 && disagreements == 0,
         "100 semigroups, " + std::to_string(bad) + " without a common zero entry, " +
             std::to_string(disagreements) + " disagreements between witness, common zero and sum");
}

void criterion_11() {
  bool ok = true;
  std::string summary;
  double s6_time = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto start = Clock::now();
    const auto rep = symmetric_group_analysis(n);
    if (n == 6) s6_time = seconds_since(start);
    const bool n_ok = rep.sum_positive && !rep.decomposable && rep.potency_matches_cycle_type &&
                      rep.max_potency == n + 1;
    ok = ok && n_ok;
    summary += "n=" + std::to_string(n) + " max " + std::to_string(rep.max_potency);
    if (!n_ok) {
      summary += " (expected " + std::to_string(n + 1) + ", cycle type";
      for (auto c : rep.max_potency_cycle_type) summary += " " + std::to_string(c);
      summary += ")";
    }
    summary += ", ";
  }
  ok = ok && s6_time < 5;
  report(11, ok, summary + "S6 in " + fixed(s6_time, 3) + " s");
}

std::string run_capture(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  const int status = ::pclose(pipe);
  return out + "\n<status " + std::to_string(status) + ">";
}

void criterion_12(const std::string& cli) {
  const std::vector<std::string> commands{
      "generate --kind kron --r 3 --rank 4 --seed 7",
      "generate --kind conjugated --r 4 --rank 5 --seed 11",
      "generate --kind rank_one_idempotent --n 6 --zero-padded --seed 3",
      "verify --theorem 3.2 --trials 50 --seed 5",
      "verify --theorem 6.3 --trials 20 --seed 9",
  };
  std::size_t differing = 0;
  for (const auto& c : commands) {
    const auto full = "'" + cli + "' " + c + " 2>&1";
    const auto first = run_capture(full);
    const auto second = run_capture(full);
    if (first != second || first.size() < 20) {
      ++differing;
      std::cout << "  criterion 12 difference: " << c << "\n";
    }
  }
  report(12, differing == 0,
         std::to_string(commands.size()) + " commands run twice, " + std::to_string(differing) + " differ");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <rpotent cli>\n";
    return 2;
  }
  criterion_1();
  const auto r_potents = sample(500, seed_r_potent, suites::sample_r_potent);
  criterion_2(r_potents);
  const auto start = Clock::now();
  const auto exceeds = sample(200, seed_rank_exceeds, rank_exceeds);
  criterion_3(exceeds, seconds_since(start));
  const auto singular = sample(100, seed_singular, suites::sample_singular_zero_diagonal);
  criterion_4(singular);
  criterion_5();
  criterion_6(exceeds, singular);
  criterion_7();
  criterion_8();
  criterion_9({&r_potents, &exceeds, &singular});
  criterion_10();
  criterion_11();
  criterion_12(argv[1]);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
