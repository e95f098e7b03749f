#ifndef INDSAT_SOLVER_HPP
#define INDSAT_SOLVER_HPP

// Exact sat*(n, P) for tiny n by iterative deepening on the family size.
//
// For each size s, families are built depth-first from the 2^n subsets in
// canonical order. A prefix that already holds an induced copy is cut. A
// family is tested for saturation only once it has s members, because adding
// sets can both create and destroy saturation. The first family accepted is
// optimal and, given the fixed order, canonically smallest among the size-s
// families the search visits.
//
// Symmetry: every family can be relabelled so that its first member in
// canonical order is [r] for some r, so the first chosen set is restricted to
// that form.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "indsat/embed.hpp"
#include "indsat/posetspec.hpp"
#include "indsat/setfam.hpp"
#include "indsat/verify.hpp"

namespace indsat {

inline constexpr int kMaxSolverGroundSize = 8;

struct SolveBudget {
  std::uint64_t node_budget = 10'000'000;
  SearchOptions search;
};

enum class SolveStatus { exact, budget_exceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::exact;
  /// Minimum size when exact; the best verified upper bound otherwise.
  std::optional<std::size_t> value;
  std::optional<Family> witness;
  std::uint64_t nodes = 0;
};

namespace detail {

class SaturationSolver {
 public:
  SaturationSolver(int n, const ComparabilityMatrix& poset, const SolveBudget& budget)
      : n_(n), poset_(poset), budget_(budget) {
    const Family all = canonicalize_family(all_subsets(SubsetMask::full(n)), n);
    candidates_.assign(all.begin(), all.end());
  }

  struct OutOfBudget {};

  // Returns a saturated family with exactly `size` members, if any.
  std::optional<Family> search_size(std::size_t size) {
    chosen_.clear();
    target_ = size;
    if (dfs(0)) return canonicalize_family(chosen_, n_);
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void tick() {
    if (++nodes_ > budget_.node_budget) throw OutOfBudget{};
  }

  CopySearch probe(const Family& fam, SubsetMask g) const {
    CopySearch r = CopyFinder(fam, poset_, budget_.search).find_with(g);
    if (r.status == SearchStatus::budget_exceeded) throw OutOfBudget{};
    return r;
  }

  bool saturated(const Family& fam) const {
    for (SubsetMask g : candidates_) {
      if (fam.contains(g)) continue;
      if (!probe(fam, g).found()) return false;
    }
    return true;
  }

  bool dfs(std::size_t start) {
    if (chosen_.size() == target_) {
      tick();
      return saturated(canonicalize_family(chosen_, n_));
    }
    const std::size_t need = target_ - chosen_.size();
    const Family current = canonicalize_family(chosen_, n_);
    for (std::size_t i = start; i + need <= candidates_.size(); ++i) {
      const SubsetMask c = candidates_[i];
      if (chosen_.empty() && c != SubsetMask::full(c.size())) continue;
      tick();
      if (probe(current, c).found()) continue;
      chosen_.push_back(c);
      if (dfs(i + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  int n_;
  const ComparabilityMatrix& poset_;
  SolveBudget budget_;
  std::vector<SubsetMask> candidates_;
  std::vector<SubsetMask> chosen_;
  std::size_t target_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline SolveResult sat_star_exact(int n, const ComparabilityMatrix& poset, const SolveBudget& budget = {}) {
  if (n < 1 || n > kMaxSolverGroundSize) {
    throw std::invalid_argument("solver supports 1 <= n <= " + std::to_string(kMaxSolverGroundSize));
  }
  SolveResult result;
  // Greedy completion of the empty family gives a verified upper bound.
  std::optional<Family> upper;
  try {
    ScanOptions scan;
    scan.search = budget.search;
    upper = greedy_saturate(empty_family(n), poset, scan);
  } catch (const BudgetExceeded&) {
  }

  detail::SaturationSolver solver(n, poset, budget);
  const std::size_t limit = upper ? upper->size() : (std::size_t{1} << n);
  try {
    for (std::size_t s = 0; s <= limit; ++s) {
      if (auto found = solver.search_size(s)) {
        result.status = SolveStatus::exact;
        result.value = s;
        result.witness = std::move(found);
        result.nodes = solver.nodes();
        return result;
      }
    }
  } catch (const detail::SaturationSolver::OutOfBudget&) {
    result.status = SolveStatus::budget_exceeded;
    if (upper) {
      result.value = upper->size();
      result.witness = upper;
    }
    result.nodes = solver.nodes();
    return result;
  }
  throw std::logic_error("no saturated family found up to the greedy bound");
}

}  // namespace indsat

#endif  // INDSAT_SOLVER_HPP
