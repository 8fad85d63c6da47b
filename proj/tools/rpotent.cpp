#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rpotent/decomposition.hpp"
#include "rpotent/error.hpp"
#include "rpotent/generators.hpp"
#include "rpotent/io.hpp"
#include "rpotent/potency.hpp"
#include "rpotent/semigroup.hpp"
#include "rpotent/spectral.hpp"
#include "rpotent/structure.hpp"
#include "rpotent/theorems.hpp"

using namespace rpotent;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json index_list(const std::vector<std::size_t>& v) { return Json(v); }

Json permutation_json(const Permutation& p) {
  std::vector<std::size_t> map(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) map[k] = p[k];
  return Json(map);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

// ---- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string path;
  std::optional<unsigned> r;
  bool json = false;
  double tolerance = 1e-9;
  unsigned max_iterations = 10000;
};

int cmd_analyze(const AnalyzeArgs& args) {
  RMatrix a(1);
  try {
    a = load_matrix(args.path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  if (args.r && *args.r < 2) {
    std::cerr << "error: --r must be at least 2\n";
    return exit_input;
  }
  const auto n = a.size();
  const auto minimal = minimal_potency(a);
  const std::optional<unsigned> r = args.r ? args.r : minimal;
  const bool potent = r && is_r_potent(a, *r);
  std::vector<std::string> violations;

  Json out;
  out["n"] = n;
  out["matrix"] = matrix_to_json(a);
  out["r"] = optional_json(r);

  Json potency;
  potency["is_r_potent"] = potent;
  potency["minimal_r"] = optional_json(minimal);
  potency["rank"] = exact_rank(a);
  if (potent) {
    const auto rep = potency_report(a, *r);
    potency["trace_of_projection"] = rational_to_json(rep.trace_of_projection);
    potency["rank_equals_trace"] = Rational(rep.rank) == rep.trace_of_projection;
    if (Rational(rep.rank) != rep.trace_of_projection) violations.push_back("rank differs from trace(A^(r-1))");
  } else {
    potency["trace_of_projection"] = nullptr;
    potency["rank_equals_trace"] = nullptr;
  }
  out["potency"] = potency;

  const auto t = block_triangularize(a);
  Json decomposition;
  decomposition["decomposable"] = !t.is_trivial;
  if (!t.is_trivial) {
    const InvariantSubsetWitness w{t.block_indices.front()};
    decomposition["witness"] = index_list(w.subset);
    if (!verify_witness(a, w)) violations.push_back("invariant subset witness failed verification");
  } else {
    decomposition["witness"] = nullptr;
  }
  if (potent) {
    const auto rep = main_decomposability_test(a, *r);
    Json pred;
    pred["case"] = to_string(rep.prediction_case);
    pred["singular"] = rep.singular;
    pred["zero_diagonal_powers"] = Json(std::vector<unsigned>(rep.zero_diagonal_powers.begin(),
                                                              rep.zero_diagonal_powers.end()));
    pred["predicted_decomposable"] = optional_json(rep.predicted_decomposable);
    pred["agrees"] = rep.agrees;
    decomposition["prediction"] = pred;
    if (!rep.agrees) violations.push_back("predicted decomposable but indecomposable");
  } else {
    decomposition["prediction"] = nullptr;
  }
  out["decomposition"] = decomposition;

  Json tri;
  tri["permutation"] = permutation_json(t.permutation);
  tri["block_sizes"] = index_list(t.block_sizes);
  Json blocks = Json::array();
  for (const auto& b : t.block_indices) blocks.push_back(index_list(b));
  tri["blocks"] = blocks;
  tri["form"] = matrix_to_json(t.form);
  out["triangularization"] = tri;

  std::optional<StructureReport> structure;
  if (potent && !t.is_trivial) structure = analyze_structure(a, *r);
  if (structure) {
    Json s;
    s["k"] = structure->k;
    s["r"] = structure->r;
    Json recs = Json::array();
    for (const auto& b : structure->blocks) {
      Json rec;
      rec["size"] = b.size;
      rec["is_zero"] = b.is_zero;
      rec["rank"] = b.block_rank;
      rec["is_r_potent"] = b.block_is_r_potent;
      rec["is_indecomposable"] = b.block_is_indecomposable;
      recs.push_back(rec);
    }
    s["blocks"] = recs;
    s["permutation"] = permutation_json(structure->triangularization->permutation);
    s["nonzero_count"] = structure->nonzero_count;
    s["total_count"] = structure->total_count;
    s["lower_bound"] = structure->lower_bound;
    s["consecutive_zero_pairs"] = structure->consecutive_zero_pairs;
    s["blocks_ok"] = structure->blocks_ok;
    s["bounds_ok"] = structure->bounds_ok;
    out["structure"] = s;
    if (!structure->blocks_ok) violations.push_back("diagonal block classification failed");
    if (structure->consecutive_zero_pairs > 0) violations.push_back("no block order avoids adjacent zero blocks");
    if (!structure->bounds_ok) violations.push_back("block count bounds failed");
  } else {
    out["structure"] = nullptr;
  }

  PerronOptions options{args.tolerance, args.max_iterations};
  Json spectral;
  std::optional<SpectralReport> sr;
  std::string perron_error;
  try {
    sr = spectral_report(a, r.value_or(0), options);
  } catch (const NonConvergence& e) {
    perron_error = e.what();
  }
  if (sr) {
    spectral["period"] = optional_json(sr->period);
    spectral["is_primitive"] = sr->is_primitive;
    spectral["perron_value"] = optional_json(sr->perron_value);
    spectral["wielandt_positive"] = optional_json(sr->wielandt_positive);
    spectral["trace_zero_applicable"] = sr->trace_zero_applicable;
    spectral["trace_zero"] = optional_json(sr->trace_zero);
    spectral["expected_peripheral_count"] = optional_json(sr->expected_peripheral_count);
    if (sr->wielandt_positive == false) violations.push_back("Wielandt power has a zero entry");
    if (sr->trace_zero == false) violations.push_back("nonzero trace at rank r - 1");
    if (potent && sr->perron_value && std::abs(*sr->perron_value - 1.0) > args.tolerance) {
      violations.push_back("Perron value differs from 1");
    }
  } else {
    spectral["error"] = perron_error;
  }
  out["spectral"] = spectral;
  out["violations"] = violations;

  if (args.json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "n: " << n << '\n';
    std::cout << "r: " << (r ? std::to_string(*r) : "none") << (potent ? "" : " (not r-potent)") << '\n';
    std::cout << "minimal potency: " << (minimal ? std::to_string(*minimal) : "none up to 64") << '\n';
    std::cout << "rank: " << exact_rank(a) << '\n';
    std::cout << "trace: " << to_string(trace(a)) << '\n';
    if (potent) std::cout << "trace(A^(r-1)): " << to_string(trace(power(a, *r - 1))) << '\n';
    std::cout << "decomposable: " << (t.is_trivial ? "no" : "yes") << '\n';
    if (!t.is_trivial) std::cout << "invariant subset: " << join(t.block_indices.front()) << '\n';
    if (potent) std::cout << "prediction: " << out["decomposition"]["prediction"]["case"].get<std::string>() << '\n';
    std::cout << "blocks: " << t.block_count() << " (sizes " << join(t.block_sizes) << ")\n";
    std::cout << "permutation: " << join(tri["permutation"].get<std::vector<std::size_t>>()) << '\n';
    std::cout << "triangular form:\n";
    for (std::size_t i = 0; i < n; ++i) {
      std::cout << ' ';
      for (std::size_t j = 0; j < n; ++j) std::cout << ' ' << to_string(t.form(i, j));
      std::cout << '\n';
    }
    if (structure) {
      std::cout << "structure: k=" << structure->k << " nonzero blocks " << structure->nonzero_count << " of "
                << structure->total_count << ", lower bound " << structure->lower_bound << '\n';
    }
    if (sr) {
      if (sr->period) std::cout << "period: " << *sr->period << '\n';
      if (sr->perron_value) {
        std::ostringstream value;
        value.precision(12);
        value << *sr->perron_value;
        std::cout << "perron value: " << value.str() << '\n';
      }
      if (sr->trace_zero) std::cout << "trace zero: " << (*sr->trace_zero ? "yes" : "no") << '\n';
    } else {
      std::cout << "perron value: " << perron_error << '\n';
    }
    for (const auto& v : violations) std::cout << "violation: " << v << '\n';
  }
  return violations.empty() ? exit_ok : exit_violation;
}

// ---- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  GeneratorSpec spec;
  std::string output;
};

int cmd_generate(GenerateArgs args) {
  const auto kind = parse_generator_kind(args.kind);
  if (!kind) {
    std::cerr << "error: unknown generator kind '" << args.kind << "'\n";
    return exit_input;
  }
  args.spec.kind = *kind;
  GeneratedMatrix g{RMatrix(1), 2, 0, {}};
  try {
    g = generate(args.spec);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  auto doc = matrix_to_json(g.matrix);
  Json provenance;
  provenance["kind"] = to_string(g.spec.kind);
  provenance["seed"] = g.spec.seed;
  provenance["r"] = g.r;
  provenance["rank"] = g.rank;
  doc["provenance"] = provenance;
  const auto text = doc.dump() + "\n";
  if (args.output.empty()) {
    std::cout << text;
    return exit_ok;
  }
  std::ofstream file(args.output, std::ios::binary);
  if (!(file << text)) {
    std::cerr << "error: cannot write " << args.output << '\n';
    return exit_input;
  }
  return exit_ok;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const std::string& id, const suites::SuiteOptions& options) {
  suites::SuiteResult result;
  try {
    result = suites::run_theorem(id, options);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  std::cout << "theorem " << result.id << ": " << result.title << '\n';
  std::cout << "seed " << options.seed << '\n';
  std::cout << "trials " << result.trials << ", passed " << result.passed << ", failed " << result.failed()
            << ", skipped " << result.skipped << '\n';
  for (const auto& note : result.notes) std::cout << note << '\n';
  if (result.first_failure) {
    const auto& c = *result.first_failure;
    std::cout << "first counterexample: trial " << c.trial << ", seed " << c.seed << '\n';
    std::cout << c.detail << '\n';
    if (!c.input_json.empty()) std::cout << c.input_json << (c.input_json.back() == '\n' ? "" : "\n");
  }
  std::cout << (result.ok() ? "PASS" : "FAIL") << '\n';
  return result.ok() ? exit_ok : exit_violation;
}

// ---- semigroup --------------------------------------------------------------

int cmd_semigroup(const std::vector<std::string>& paths, unsigned r, std::optional<std::size_t> cap_flag) {
  std::vector<RMatrix> gens;
  try {
    for (const auto& p : paths) gens.push_back(load_matrix(p));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  if (r < 2) {
    std::cerr << "error: --r must be at least 2\n";
    return exit_input;
  }
  for (const auto& g : gens) {
    if (g.size() != gens.front().size()) {
      std::cerr << "error: generators differ in dimension\n";
      return exit_input;
    }
    if (g.size() > PatternMatrix::max_size) {
      std::cerr << "error: dimension exceeds " << PatternMatrix::max_size << '\n';
      return exit_input;
    }
  }
  const auto cap = cap_flag.value_or(closure_cap_from_env());
  std::vector<PatternMatrix> patterns;
  for (const auto& g : gens) patterns.push_back(pattern(g));
  const auto s = pattern_closure(patterns, cap);

  Json out;
  out["n"] = s.n;
  out["generators"] = gens.size();
  out["r"] = r;
  out["cap"] = cap;
  out["closure_size"] = s.members.size();
  out["truncated"] = s.truncated;
  if (s.truncated) {
    out["decomposable"] = nullptr;
    std::cout << out.dump(2) << '\n';
    std::cerr << "closure exceeded the cap of " << cap << " members; verdict withheld\n";
    return exit_violation;
  }
  int code = exit_ok;
  const auto witness = semigroup_decomposable(s);
  const auto zero = zero_entry_witness(s);
  const bool sum_zero = sum_has_zero(s);
  out["decomposable"] = witness.has_value();
  out["witness"] = witness ? index_list(witness->subset) : Json(nullptr);
  if (zero) {
    Json z;
    z["row"] = zero->row;
    z["col"] = zero->col;
    z["off_diagonal"] = zero->off_diagonal ? Json::array({zero->off_diagonal->first, zero->off_diagonal->second})
                                           : Json(nullptr);
    out["common_zero"] = z;
  } else {
    out["common_zero"] = nullptr;
  }
  out["sum_has_zero"] = sum_zero;
  const bool agree = s.n < 2 || (witness.has_value() == zero.has_value() && zero.has_value() == sum_zero);
  out["routes_agree"] = agree;
  if (!agree) code = exit_violation;

  bool all_potent = true;
  bool all_rank_exceeds = true;
  for (const auto& g : gens) {
    all_potent = all_potent && is_r_potent(g, r);
    all_rank_exceeds = all_rank_exceeds && exact_rank(g) + 1 > r;
  }
  out["generators_r_potent"] = all_potent;
  out["generators_rank_exceeds"] = all_potent && all_rank_exceeds;
  if (all_potent && all_rank_exceeds && !witness) code = exit_violation;

  if (!all_potent) {
    out["rank_floor"] = nullptr;
  } else {
    try {
      const auto rep = semigroup_rank_floor_check(gens, r, cap);
      Json floor;
      floor["closure_size"] = rep.closure_size;
      floor["truncated"] = false;
      Json blocks = Json::array();
      for (const auto& b : rep.blocks) {
        Json rec;
        rec["indices"] = index_list(b.indices);
        rec["nonzero"] = b.nonzero;
        rec["min_rank"] = b.min_rank;
        rec["floor_ok"] = b.floor_ok;
        blocks.push_back(rec);
      }
      floor["blocks"] = blocks;
      floor["floor_ok"] = rep.floor_ok;
      out["rank_floor"] = floor;
      if (!rep.floor_ok) code = exit_violation;
    } catch (const TruncatedClosure&) {
      Json floor;
      floor["truncated"] = true;
      out["rank_floor"] = floor;
      code = exit_violation;
    }
  }
  std::cout << out.dump(2) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposability of nonnegative r-potent matrices"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "Full report for one matrix file (JSON or CSV)");
  a->add_option("file", analyze.path, "Matrix file")->required();
  a->add_option("--r", analyze.r, "Exponent r (defaults to the minimal potency)");
  a->add_flag("--json", analyze.json, "Emit JSON");
  a->add_option("--tol", analyze.tolerance, "Perron value tolerance");
  a->add_option("--max-iter", analyze.max_iterations, "Power iteration limit");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Emit a seeded r-potent matrix");
  g->add_option("--kind", gen.kind, "cycle, rank_one_idempotent, block_diagonal, kron, triangular_family, "
                                    "permutation or conjugated")
      ->required();
  g->add_option("--len", gen.spec.len, "Cycle length");
  g->add_option("--n", gen.spec.n, "Dimension (permutation, rank_one_idempotent)");
  g->add_option("--r", gen.spec.r, "Exponent r");
  g->add_option("--rank", gen.spec.rank, "Target rank");
  g->add_flag("--zero-padded", gen.spec.zero_padded, "Allow zero coordinates (rank_one_idempotent)");
  g->add_option("--seed", gen.spec.seed, "Seed");
  g->add_option("-o,--output", gen.output, "Output file");

  std::string theorem;
  suites::SuiteOptions suite;
  std::size_t n_flag = 0;
  auto* v = app.add_subcommand("verify", "Run a seeded property suite");
  v->add_option("--theorem", theorem, "Suite id")->required();
  v->add_option("--trials", suite.trials, "Trial count");
  v->add_option("--seed", suite.seed, "Base seed");
  auto* n_opt = v->add_option("--n", n_flag, "Dimension (7.2 and 2.4)");

  std::vector<std::string> paths;
  unsigned semigroup_r = 2;
  std::optional<std::size_t> cap;
  auto* s = app.add_subcommand("semigroup", "Closure and decomposability of a generated semigroup");
  s->add_option("files", paths, "Generator matrix files")->required();
  s->add_option("--r", semigroup_r, "Exponent r")->required();
  s->add_option("--cap", cap, "Closure cap (default RPOTENT_CLOSURE_CAP or 10000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*a) return cmd_analyze(analyze);
    if (*g) return cmd_generate(gen);
    if (*v) {
      if (n_opt->count() > 0) suite.n = n_flag;
      return cmd_verify(theorem, suite);
    }
    return cmd_semigroup(paths, semigroup_r, cap);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
}
