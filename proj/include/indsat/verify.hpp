#ifndef INDSAT_VERIFY_HPP
#define INDSAT_VERIFY_HPP

// Freeness, exception sets, saturation and greedy completion.
//
// The exception set of a P-free family F is every G outside F such that
// F + {G} still has no induced copy of P. F is saturated when it is P-free and
// its exception set is empty. Exceptions are found by enumerating all of
// 2^[n]; each candidate search is pinned to use G, since any copy avoiding G
// would already live in F.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "indsat/embed.hpp"
#include "indsat/posetspec.hpp"
#include "indsat/setfam.hpp"

namespace indsat {

inline constexpr int kDefaultEnumerationLimit = 16;

struct ScanOptions {
  SearchOptions search;
  unsigned threads = 1;
  /// Largest ground size for which 2^n candidates are enumerated.
  int max_n = kDefaultEnumerationLimit;
};

struct ExceptionScan {
  Family exceptions;
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
};

/// Throws BudgetExceeded instead of guessing.
inline bool is_induced_p_free(const Family& family, const ComparabilityMatrix& poset, const SearchOptions& options = {}) {
  const CopySearch r = find_induced_copy(family, poset, options);
  if (r.status == SearchStatus::budget_exceeded) {
    throw BudgetExceeded("copy search for " + render_poset_spec(poset.spec()) + " exceeded " +
                         std::to_string(options.node_budget) + " nodes");
  }
  return r.status == SearchStatus::none;
}

namespace detail {

inline void check_enumerable(const Family& family, int max_n) {
  if (family.n() > max_n || family.n() >= 63) {
    throw std::invalid_argument("enumerating 2^" + std::to_string(family.n()) + " sets exceeds the limit n <= " +
                                std::to_string(max_n));
  }
}

// Scans candidates G = 0 .. 2^n - 1 (numeric order), skipping members.
inline ExceptionScan scan_exceptions(const Family& family, const CopyFinder& finder, const ScanOptions& options) {
  const std::uint64_t total = std::uint64_t{1} << family.n();
  const unsigned workers = std::max(1U, options.threads);
  std::vector<std::vector<SubsetMask>> found(workers);
  std::vector<std::uint64_t> nodes(workers, 0);
  std::atomic<bool> gave_up{false};

  auto work = [&](unsigned id) {
    for (std::uint64_t g = id; g < total && !gave_up.load(std::memory_order_relaxed); g += workers) {
      const SubsetMask candidate(g);
      if (family.contains(candidate)) continue;
      const CopySearch r = finder.find_with(candidate);
      nodes[id] += r.nodes;
      if (r.status == SearchStatus::budget_exceeded) {
        gave_up = true;
        return;
      }
      if (r.status == SearchStatus::none) found[id].push_back(candidate);
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }

  ExceptionScan scan;
  std::vector<SubsetMask> all;
  for (unsigned id = 0; id < workers; ++id) {
    all.insert(all.end(), found[id].begin(), found[id].end());
    scan.nodes += nodes[id];
  }
  scan.exceptions = canonicalize_family(std::move(all), family.n());
  scan.budget_exceeded = gave_up.load();
  return scan;
}

}  // namespace detail

/// Every G outside the family whose addition creates no induced copy. The
/// family must be induced P-free; this is checked first and a violation
/// throws std::invalid_argument. A budget overrun stops the scan and returns
/// the partial result flagged.
inline ExceptionScan exceptions(const Family& family, const ComparabilityMatrix& poset, const ScanOptions& options = {}) {
  detail::check_enumerable(family, options.max_n);
  const CopyFinder finder(family, poset, options.search);
  const CopySearch own = finder.find();
  if (own.status == SearchStatus::budget_exceeded) {
    ExceptionScan partial;
    partial.exceptions = empty_family(family.n());
    partial.budget_exceeded = true;
    partial.nodes = own.nodes;
    return partial;
  }
  if (own.status == SearchStatus::found) {
    throw std::invalid_argument("family already contains an induced copy of " + render_poset_spec(poset.spec()));
  }
  ExceptionScan scan = detail::scan_exceptions(family, finder, options);
  scan.nodes += own.nodes;
  return scan;
}

/// Throws BudgetExceeded when any search gives up.
inline bool is_saturated(const Family& family, const ComparabilityMatrix& poset, const ScanOptions& options = {}) {
  detail::check_enumerable(family, options.max_n);
  if (!is_induced_p_free(family, poset, options.search)) return false;
  const ExceptionScan scan = exceptions(family, poset, options);
  if (scan.budget_exceeded) throw BudgetExceeded("exception scan exceeded its node budget");
  return scan.exceptions.empty();
}

/// Adds exceptions in canonical order whenever the grown family stays P-free.
/// The result contains the input, lies inside input + exceptions, and is
/// saturated.
inline Family greedy_saturate(const Family& family, const ComparabilityMatrix& poset, const ScanOptions& options = {}) {
  const ExceptionScan scan = exceptions(family, poset, options);
  if (scan.budget_exceeded) throw BudgetExceeded("exception scan exceeded its node budget");
  Family current = family;
  for (SubsetMask g : scan.exceptions) {
    const CopySearch r = CopyFinder(current, poset, options.search).find_with(g);
    if (r.status == SearchStatus::budget_exceeded) throw BudgetExceeded("greedy completion exceeded its node budget");
    if (r.status == SearchStatus::none) current = current.with(g);
  }
  return current;
}

struct VerificationReport {
  std::string poset;
  std::size_t family_size = 0;
  bool is_free = false;
  Family exceptions;  // possibly truncated
  std::uint64_t exception_count = 0;
  bool exceptions_truncated = false;
  bool budget_exceeded = false;
};

/// Freeness plus (when free) the exception scan, never throwing on budget.
/// At most `list_limit` exceptions are kept in the report.
inline VerificationReport verify_family(const Family& family, const ComparabilityMatrix& poset,
                                        const ScanOptions& options = {},
                                        std::size_t list_limit = static_cast<std::size_t>(-1)) {
  VerificationReport report;
  report.poset = render_poset_spec(poset.spec());
  report.family_size = family.size();
  report.exceptions = empty_family(family.n());
  const CopyFinder finder(family, poset, options.search);
  const CopySearch own = finder.find();
  if (own.status == SearchStatus::budget_exceeded) {
    report.budget_exceeded = true;
    return report;
  }
  report.is_free = own.status == SearchStatus::none;
  if (!report.is_free) return report;
  detail::check_enumerable(family, options.max_n);
  const ExceptionScan scan = detail::scan_exceptions(family, finder, options);
  report.budget_exceeded = scan.budget_exceeded;
  report.exception_count = scan.exceptions.size();
  std::vector<SubsetMask> kept(scan.exceptions.begin(),
                               scan.exceptions.begin() + static_cast<std::ptrdiff_t>(
                                                             std::min(list_limit, scan.exceptions.size())));
  report.exceptions_truncated = kept.size() < scan.exceptions.size();
  report.exceptions = canonicalize_family(std::move(kept), family.n());
  return report;
}

}  // namespace indsat

#endif  // INDSAT_VERIFY_HPP
