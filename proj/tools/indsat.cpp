// indsat: command-line front end for the induced-saturation workbench.
//
// Exit codes: 0 pass, 1 a checked property fails, 2 usage or input error,
// 3 a search budget was exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "indsat/indsat.hpp"

namespace {

using indsat::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Common {
  std::string family_path;
  std::string poset;
  std::string out_path;
  std::uint64_t budget = 50'000'000;
  unsigned threads = 1;
  int max_n = indsat::kDefaultEnumerationLimit;
  bool lenient = false;
  bool json = false;
};

void emit(const Json& doc, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << doc.dump() << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw indsat::FormatError("cannot write " + out_path);
  out << doc.dump() << '\n';
}

indsat::Family load_family(const Common& c) {
  return indsat::family_from_json(indsat::read_json_file(c.family_path), c.lenient);
}

indsat::ScanOptions scan_options(const Common& c) {
  indsat::ScanOptions o;
  o.search.node_budget = c.budget;
  o.threads = c.threads;
  o.max_n = c.max_n;
  return o;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind;
  int n = 0;
  int m = 0;
  int k = 0;
  int t = 0;
  std::string drop = "none";
};

int run_construct(const ConstructArgs& a, const Common& c) {
  Json params;
  indsat::Family f;
  std::string kind = a.kind;
  for (char& ch : kind) {
    if (ch == '_') ch = '-';
  }
  if (kind == "mck") {
    f = indsat::construct_mck(a.n, a.m, a.k);
    params = {{"n", a.n}, {"m", a.m}, {"k", a.k}};
  } else if (kind == "mc2-binom") {
    f = indsat::construct_mc2_binom(a.n, a.t);
    params = {{"n", a.n}, {"t", a.t}};
  } else if (kind == "2ck-c1" || kind == "two-ck-c1") {
    f = indsat::construct_2ck_c1(a.n, a.k);
    params = {{"n", a.n}, {"k", a.k}};
    kind = "2ck-c1";
  } else if (kind == "b3") {
    f = indsat::construct_b3(a.n);
    params = {{"n", a.n}};
  } else if (kind == "boolean") {
    static const std::map<std::string, indsat::Drop> drops{
        {"none", indsat::Drop::none}, {"empty", indsat::Drop::empty}, {"empty-and-full", indsat::Drop::empty_and_full},
        {"empty_and_full", indsat::Drop::empty_and_full}};
    const auto it = drops.find(a.drop);
    if (it == drops.end()) throw std::invalid_argument("unknown --drop value " + a.drop);
    f = indsat::boolean_family(a.k, it->second);
    params = {{"k", a.k}, {"drop", a.drop}};
  } else {
    throw std::invalid_argument("unknown family kind " + a.kind);
  }
  emit(indsat::family_to_json(f, Json{{"kind", kind}, {"params", params}}), c.out_path);
  return kExitPass;
}

// ------------------------------------------------------------------- verify

int run_verify(const Common& c, bool require_saturated, bool list_exceptions) {
  const indsat::Family f = load_family(c);
  const indsat::ComparabilityMatrix p = indsat::build_poset(c.poset);
  const indsat::VerificationReport r =
      indsat::verify_family(f, p, scan_options(c), list_exceptions ? static_cast<std::size_t>(-1) : 0);
  if (c.json) {
    std::cout << indsat::report_to_json(r).dump() << '\n';
  } else {
    std::cout << "poset:           " << r.poset << '\n'
              << "family size:     " << r.family_size << '\n'
              << "induced free:    " << (r.budget_exceeded && !r.is_free ? "unknown" : r.is_free ? "yes" : "no") << '\n';
    if (r.is_free) std::cout << "exceptions:      " << r.exception_count << '\n';
    for (indsat::SubsetMask s : r.exceptions) std::cout << "  " << indsat::to_string(s) << '\n';
    if (r.budget_exceeded) std::cout << "budget exceeded: results are partial\n";
  }
  if (r.budget_exceeded) return kExitBudget;
  if (!r.is_free) return kExitFail;
  if (require_saturated && r.exception_count != 0) return kExitFail;
  return kExitPass;
}

// ----------------------------------------------------------------- saturate

int run_saturate(const Common& c) {
  const indsat::Family f = load_family(c);
  const indsat::ComparabilityMatrix p = indsat::build_poset(c.poset);
  if (!indsat::is_induced_p_free(f, p, scan_options(c).search)) {
    std::cerr << "indsat: input family already contains an induced copy of " << c.poset << '\n';
    return kExitFail;
  }
  emit(indsat::family_to_json(indsat::greedy_saturate(f, p, scan_options(c))), c.out_path);
  return kExitPass;
}

// ---------------------------------------------------------------- find-copy

int run_find_copy(const Common& c, std::optional<std::uint64_t> seed) {
  const indsat::Family f = load_family(c);
  const indsat::ComparabilityMatrix p = indsat::build_poset(c.poset);
  indsat::SearchOptions o;
  o.node_budget = c.budget;
  o.shuffle_seed = seed;
  const indsat::CopySearch r = indsat::find_induced_copy(f, p, o);
  switch (r.status) {
    case indsat::SearchStatus::found:
      emit(indsat::embedding_to_json(p, *r.embedding), c.out_path);
      return kExitPass;
    case indsat::SearchStatus::none:
      std::cout << "none\n";
      return kExitFail;
    default:
      std::cerr << "indsat: copy search exceeded " << c.budget << " nodes\n";
      return kExitBudget;
  }
}

// -------------------------------------------------------------------- solve

int run_solve(const Common& c, int n, std::uint64_t solver_budget) {
  const indsat::ComparabilityMatrix p = indsat::build_poset(c.poset);
  indsat::SolveBudget b;
  b.node_budget = solver_budget;
  b.search.node_budget = c.budget;
  const indsat::SolveResult r = indsat::sat_star_exact(n, p, b);
  emit(indsat::solve_result_to_json(r), c.out_path);
  return r.status == indsat::SolveStatus::exact ? kExitPass : kExitBudget;
}

// ----------------------------------------------------------------- bollobas

int run_bollobas_pairs(const Common& c, const std::string& pairs_path) {
  const indsat::SetPairSystem s = indsat::pair_system_from_json(indsat::read_json_file(pairs_path));
  const bool b = indsat::is_bollobas(s);
  const bool skew = indsat::is_skew_bollobas(s);
  if (c.json) {
    Json j;
    j["n"] = s.n;
    j["pairs"] = s.pairs.size();
    j["bollobas"] = b;
    j["skew_bollobas"] = skew;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "pairs:         " << s.pairs.size() << '\n'
              << "Bollobas:      " << (b ? "yes" : "no") << '\n'
              << "skew Bollobas: " << (skew ? "yes" : "no") << '\n';
  }
  return kExitPass;
}

// Samples seeded kC2 copies in a family, checks the extracted pair systems and
// their rewritten skew systems.
int run_bollobas_family(const Common& c, int k, int t, std::uint64_t seed, int samples) {
  const indsat::Family f = load_family(c);
  const indsat::ComparabilityMatrix p = indsat::build_poset(std::to_string(k) + "C2");
  int found = 0;
  bool all_bollobas = true;
  bool all_skew = true;
  int max_x = 0;
  int max_y = 0;
  for (int i = 0; i < samples; ++i) {
    indsat::SearchOptions o;
    o.node_budget = c.budget;
    o.shuffle_seed = seed + static_cast<std::uint64_t>(i);
    const indsat::CopySearch r = indsat::find_induced_copy(f, p, o);
    if (r.status == indsat::SearchStatus::budget_exceeded) {
      std::cerr << "indsat: copy search exceeded " << c.budget << " nodes\n";
      return kExitBudget;
    }
    if (!r.found()) break;
    ++found;
    const indsat::SetPairSystem s = indsat::extract_pair_system(f, p, *r.embedding);
    all_bollobas = all_bollobas && indsat::is_bollobas(s);
    const indsat::Mc2Transform tr = indsat::transform_mc2_pairs(s, t);
    all_skew = all_skew && indsat::is_skew_bollobas(tr.system);
    for (const indsat::SetPair& pr : tr.system.pairs) {
      max_x = std::max(max_x, pr.x.size());
      max_y = std::max(max_y, pr.y.size());
    }
  }
  const std::uint64_t bound = indsat::bollobas_bound(t, t);
  const bool ok = all_bollobas && all_skew && max_x <= t && max_y <= t &&
                  (found == 0 || static_cast<std::uint64_t>(k) <= bound);
  if (c.json) {
    Json j;
    j["poset"] = indsat::render_poset_spec(p.spec());
    j["t"] = t;
    j["samples"] = samples;
    j["copies_found"] = found;
    j["all_bollobas"] = all_bollobas;
    j["all_skew_bollobas"] = all_skew;
    j["max_x"] = max_x;
    j["max_y"] = max_y;
    j["bound"] = bound;
    j["ok"] = ok;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "copies found:        " << found << " of " << samples << " samples\n"
              << "extracted Bollobas:  " << (all_bollobas ? "yes" : "no") << '\n'
              << "transformed skew:    " << (all_skew ? "yes" : "no") << '\n'
              << "max |X|, |Y|:        " << max_x << ", " << max_y << " (cap " << t << ")\n"
              << "binom(2t, t):        " << bound << '\n';
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced poset saturation workbench"};
  app.require_subcommand(1);

  Common c;
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", c.family_path, "Family JSON file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--lenient", c.lenient, "Merge duplicate sets instead of rejecting them");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "Node budget per copy search")->capture_default_str();
  };
  auto add_scan = [&](CLI::App* sub) {
    sub->add_option("--threads", c.threads, "Worker threads for the exception scan")->capture_default_str();
    sub->add_option("--max-n", c.max_n, "Largest ground size to enumerate")->capture_default_str();
  };

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Generate a construction as Family JSON");
  construct->add_option("--family", ca.kind, "mck | mc2-binom | 2ck-c1 | b3 | boolean")->required();
  construct->add_option("--n", ca.n, "Ground size");
  construct->add_option("--m", ca.m, "Number of chains (mck)");
  construct->add_option("--k", ca.k, "Chain length / lattice dimension");
  construct->add_option("--t", ca.t, "Parameter t (mc2-binom)");
  construct->add_option("--drop", ca.drop, "none | empty | empty-and-full (boolean)")->capture_default_str();
  construct->add_option("--out", c.out_path, "Output file (default stdout)");

  bool require_saturated = false;
  bool list_exceptions = false;
  auto* verify = app.add_subcommand("verify", "Check freeness and list exceptions");
  add_family(verify);
  verify->add_option("--poset", c.poset, "Target poset, e.g. 3C2 or B4--")->required();
  verify->add_flag("--require-saturated", require_saturated, "Fail unless the exception set is empty");
  verify->add_flag("--list-exceptions", list_exceptions, "Include the exception sets in the report");
  verify->add_flag("--json", c.json, "Emit the report as JSON");
  add_budget(verify);
  add_scan(verify);

  auto* saturate = app.add_subcommand("saturate", "Greedily complete a free family to a saturated one");
  add_family(saturate);
  saturate->add_option("--poset", c.poset, "Target poset")->required();
  saturate->add_option("--out", c.out_path, "Output file (default stdout)");
  add_budget(saturate);
  add_scan(saturate);

  std::optional<std::uint64_t> seed;
  auto* find_copy = app.add_subcommand("find-copy", "Find one induced copy");
  add_family(find_copy);
  find_copy->add_option("--poset", c.poset, "Target poset")->required();
  find_copy->add_option("--seed", seed, "Try members in a seeded random order");
  find_copy->add_option("--out", c.out_path, "Output file (default stdout)");
  add_budget(find_copy);

  int solve_n = 0;
  std::uint64_t solver_budget = 10'000'000;
  auto* solve = app.add_subcommand("solve", "Exact sat*(n, P) for tiny n");
  solve->add_option("--n", solve_n, "Ground size")->required();
  solve->add_option("--poset", c.poset, "Target poset")->required();
  solve->add_option("--solver-budget", solver_budget, "Family-search node budget")->capture_default_str();
  solve->add_option("--out", c.out_path, "Output file (default stdout)");
  add_budget(solve);

  std::string pairs_path;
  int bk = 0;
  int bt = 0;
  std::uint64_t bseed = 0;
  int samples = 1;
  auto* bollobas = app.add_subcommand("bollobas", "Bollobas checks on pair systems or sampled kC2 copies");
  bollobas->add_option("--pairs", pairs_path, "Pair-system JSON file")->check(CLI::ExistingFile);
  bollobas->add_option("--family", c.family_path, "Family JSON file to sample kC2 copies from")
      ->check(CLI::ExistingFile);
  bollobas->add_flag("--lenient", c.lenient, "Merge duplicate sets instead of rejecting them");
  bollobas->add_option("--k", bk, "Number of 2-chains per copy");
  bollobas->add_option("--t", bt, "Parameter t of the family");
  bollobas->add_option("--seed", bseed, "First sampling seed")->capture_default_str();
  bollobas->add_option("--samples", samples, "Number of seeded copies")->capture_default_str();
  bollobas->add_flag("--json", c.json, "Emit the report as JSON");
  add_budget(bollobas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return run_construct(ca, c);
    if (*verify) return run_verify(c, require_saturated, list_exceptions);
    if (*saturate) return run_saturate(c);
    if (*find_copy) return run_find_copy(c, seed);
    if (*solve) return run_solve(c, solve_n, solver_budget);
    if (*bollobas) {
      if (!pairs_path.empty() == !c.family_path.empty()) {
        std::cerr << "indsat: bollobas needs exactly one of --pairs or --family\n";
        return kExitUsage;
      }
      if (!pairs_path.empty()) return run_bollobas_pairs(c, pairs_path);
      if (bk < 1 || bt < 1 || samples < 1) {
        std::cerr << "indsat: --family mode needs --k >= 1, --t >= 1 and --samples >= 1\n";
        return kExitUsage;
      }
      return run_bollobas_family(c, bk, bt, bseed, samples);
    }
  } catch (const indsat::BudgetExceeded& e) {
    std::cerr << "indsat: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "indsat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "indsat: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
