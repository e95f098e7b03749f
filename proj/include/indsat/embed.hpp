#ifndef INDSAT_EMBED_HPP
#define INDSAT_EMBED_HPP

// Induced copy search: does a family contain sets b(p), one per poset element,
// with p <= q exactly when b(p) is a subset of b(q)?
//
// The search assigns poset elements along the linear extension produced by
// build_poset (longest chains first) and keeps, for every unassigned element,
// a bitset domain of family members whose relation to all assigned images
// already matches the target order. An empty domain cuts the branch. Because
// distinct family members are never equal, exact matching also enforces
// injectivity. Copies of the same component are interchangeable, so their
// first elements are required to take increasing member indices.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "indsat/posetspec.hpp"
#include "indsat/setfam.hpp"

namespace indsat {

/// Images of the poset elements, indexed by element.
struct Embedding {
  std::vector<SubsetMask> images;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct SearchOptions {
  std::uint64_t node_budget = 50'000'000;
  bool break_symmetry = true;
  /// When set, family members are tried in a seeded random order instead of
  /// canonical order.
  std::optional<std::uint64_t> shuffle_seed;
};

enum class SearchStatus { found, none, budget_exceeded };

struct CopySearch {
  SearchStatus status = SearchStatus::none;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::found; }
};

/// Raised by the verification layer when a copy search gives up. Never
/// conflated with "no copy".
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class CopyFinder {
 public:
  CopyFinder(const Family& family, ComparabilityMatrix poset, SearchOptions options = {})
      : poset_(std::move(poset)), options_(options), n_(family.n()) {
    members_.assign(family.begin(), family.end());
    if (options_.shuffle_seed) {
      std::mt19937_64 rng(*options_.shuffle_seed);
      std::shuffle(members_.begin(), members_.end(), rng);
    }
    words_ = (members_.size() + 63) / 64;
    build_relations();
    build_order_relations();
  }

  const ComparabilityMatrix& poset() const { return poset_; }
  std::size_t family_size() const { return members_.size(); }

  /// Looks for any induced copy inside the family.
  CopySearch find() const { return run(-1, SubsetMask()); }

  /// Looks for an induced copy of the poset in family + {required} that uses
  /// `required`. The caller guarantees `required` is not a family member.
  CopySearch find_with(SubsetMask required) const {
    if (!required.fits(n_)) throw std::invalid_argument("required set " + to_string(required) + " exceeds n");
    if (std::find(members_.begin(), members_.end(), required) != members_.end()) {
      throw std::invalid_argument("required set " + to_string(required) + " is already a family member");
    }
    CopySearch total;
    total.status = SearchStatus::none;
    // Only the first copy of each component group needs to host the new set.
    for (const Component& comp : poset_.components()) {
      if (comp.copy != 0) continue;
      for (int e = comp.first; e < comp.first + comp.size; ++e) {
        CopySearch r = run(e, required, total.nodes);
        total.nodes = r.nodes;
        if (r.status != SearchStatus::none) {
          r.nodes = total.nodes;
          return r;
        }
      }
    }
    return total;
  }

 private:
  enum Rel : std::uint8_t { kAbove = 0, kBelow = 1, kApart = 2, kEqual = 3 };
  static constexpr std::size_t kTableLimit = 4096;

  void build_relations() {
    const std::size_t n = members_.size();
    if (n > kTableLimit) return;
    table_.assign(3 * n * words_, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        const Rel r = relation(members_[a], members_[b]);
        if (r == kEqual) continue;
        table_[(static_cast<std::size_t>(r) * n + a) * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
      }
    }
  }

  // Relation of `other` as seen from `self`.
  static Rel relation(SubsetMask self, SubsetMask other) {
    if (self == other) return kEqual;
    if (is_subset(self, other)) return kAbove;
    if (is_subset(other, self)) return kBelow;
    return kApart;
  }

  void build_order_relations() {
    const int p = poset_.size();
    order_rel_.assign(static_cast<std::size_t>(p * p), kApart);
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        if (poset_.less(a, b)) order_rel_[static_cast<std::size_t>(a * p + b)] = kAbove;
        else if (poset_.less(b, a)) order_rel_[static_cast<std::size_t>(a * p + b)] = kBelow;
      }
    }
  }

  Rel order_rel(int a, int b) const { return order_rel_[static_cast<std::size_t>(a * poset_.size() + b)]; }

  // Members standing in relation r to `self` (excluding self itself).
  const std::uint64_t* row(std::size_t member, Rel r, std::uint64_t* scratch) const {
    if (!table_.empty()) return &table_[(static_cast<std::size_t>(r) * members_.size() + member) * words_];
    fill_row(members_[member], r, scratch);
    return scratch;
  }

  void fill_row(SubsetMask self, Rel r, std::uint64_t* out) const {
    std::fill(out, out + words_, 0);
    for (std::size_t b = 0; b < members_.size(); ++b) {
      if (relation(self, members_[b]) == r) out[b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }

  struct State {
    std::vector<int> order;               // elements still to assign, in order
    std::vector<int> after;               // symmetry: element whose index bounds this one, or -1
    std::vector<std::uint64_t> domains;   // (depth, element, word)
    std::vector<std::uint64_t> scratch;   // one row per depth
    std::vector<std::int64_t> chosen;     // member index per element, -1 when unassigned
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
  };

  std::uint64_t* domain(State& s, std::size_t depth, int element) const {
    return &s.domains[(depth * static_cast<std::size_t>(poset_.size()) + static_cast<std::size_t>(element)) * words_];
  }

  // `fixed` is the element hosting `required`, or -1 for a plain search.
  CopySearch run(int fixed, SubsetMask required, std::uint64_t nodes_before = 0) const {
    const int p = poset_.size();
    State s;
    s.nodes = nodes_before;
    s.chosen.assign(static_cast<std::size_t>(p), -1);
    for (int e = 0; e < p; ++e) {
      if (e != fixed) s.order.push_back(e);
    }
    s.after.assign(static_cast<std::size_t>(p), -1);
    if (options_.break_symmetry) {
      const auto& comps = poset_.components();
      const int fixed_comp = fixed >= 0 ? poset_.component_of(fixed) : -1;
      const int fixed_group = fixed_comp >= 0 ? comps[static_cast<std::size_t>(fixed_comp)].group : -1;
      for (std::size_t c = 1; c < comps.size(); ++c) {
        if (comps[c].group != comps[c - 1].group) continue;
        // The hosting copy is pinned, so only the copies after it are ordered.
        if (comps[c].group == fixed_group && comps[c].copy == 1) continue;
        s.after[static_cast<std::size_t>(comps[c].first)] = comps[c - 1].first;
      }
    }

    if (members_.empty()) {
      const bool trivial = s.order.empty();
      return CopySearch{trivial ? SearchStatus::found : SearchStatus::none,
                        trivial ? std::optional<Embedding>(Embedding{{required}}) : std::nullopt, s.nodes};
    }

    const std::size_t depth_count = s.order.size() + 1;
    s.domains.assign(depth_count * static_cast<std::size_t>(p) * words_, 0);
    s.scratch.assign(depth_count * words_, 0);

    std::uint64_t* root = domain(s, 0, 0);
    for (int e = 0; e < p; ++e) {
      std::uint64_t* d = root + static_cast<std::size_t>(e) * words_;
      for (std::size_t m = 0; m < members_.size(); ++m) d[m / 64] |= std::uint64_t{1} << (m % 64);
    }
    if (fixed >= 0) {
      std::vector<std::uint64_t> tmp(words_);
      for (int e : s.order) {
        fill_row(required, order_rel(fixed, e), tmp.data());
        std::uint64_t* d = root + static_cast<std::size_t>(e) * words_;
        bool any = false;
        for (std::size_t w = 0; w < words_; ++w) {
          d[w] &= tmp[w];
          any |= d[w] != 0;
        }
        if (!any) return CopySearch{SearchStatus::none, std::nullopt, s.nodes};
      }
    }

    CopySearch result;
    if (search(s, 0)) {
      Embedding emb;
      emb.images.resize(static_cast<std::size_t>(p));
      for (int e = 0; e < p; ++e) {
        emb.images[static_cast<std::size_t>(e)] =
            e == fixed ? required : members_[static_cast<std::size_t>(s.chosen[static_cast<std::size_t>(e)])];
      }
      result.status = SearchStatus::found;
      result.embedding = std::move(emb);
    } else {
      result.status = s.out_of_budget ? SearchStatus::budget_exceeded : SearchStatus::none;
    }
    result.nodes = s.nodes;
    return result;
  }

  bool search(State& s, std::size_t depth) const {
    if (depth == s.order.size()) return true;
    const int e = s.order[depth];
    const std::uint64_t* dom = domain(s, depth, e);
    std::size_t start = 0;
    if (const int prev = s.after[static_cast<std::size_t>(e)]; prev >= 0) {
      start = static_cast<std::size_t>(s.chosen[static_cast<std::size_t>(prev)] + 1);
    }
    for (std::size_t w = start / 64; w < words_; ++w) {
      std::uint64_t bits = dom[w];
      if (w == start / 64) bits &= ~std::uint64_t{0} << (start % 64);
      while (bits != 0) {
        const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (++s.nodes > options_.node_budget) {
          s.out_of_budget = true;
          return false;
        }
        if (!propagate(s, depth, e, c)) continue;
        s.chosen[static_cast<std::size_t>(e)] = static_cast<std::int64_t>(c);
        if (search(s, depth + 1)) return true;
        s.chosen[static_cast<std::size_t>(e)] = -1;
        if (s.out_of_budget) return false;
      }
    }
    return false;
  }

  // Narrows the domains of all later elements for e -> member c.
  bool propagate(State& s, std::size_t depth, int e, std::size_t c) const {
    std::uint64_t* scratch = &s.scratch[depth * words_];
    for (std::size_t i = depth + 1; i < s.order.size(); ++i) {
      const int f = s.order[i];
      const std::uint64_t* r = row(c, order_rel(e, f), scratch);
      const std::uint64_t* from = domain(s, depth, f);
      std::uint64_t* to = domain(s, depth + 1, f);
      std::uint64_t any = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        to[w] = from[w] & r[w];
        any |= to[w];
      }
      if (any == 0) return false;
    }
    return true;
  }

  ComparabilityMatrix poset_;
  SearchOptions options_;
  int n_;
  std::vector<SubsetMask> members_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> table_;
  std::vector<Rel> order_rel_;
};

inline CopySearch find_induced_copy(const Family& family, const ComparabilityMatrix& poset,
                                    const SearchOptions& options = {}) {
  return CopyFinder(family, poset, options).find();
}

/// True iff the assignment is injective, drawn from the family and induced.
inline bool verify_embedding(const Family& family, const ComparabilityMatrix& poset, const Embedding& e) {
  const int p = poset.size();
  if (static_cast<int>(e.images.size()) != p) {
    throw std::invalid_argument("embedding has " + std::to_string(e.images.size()) + " images for a poset of " +
                                std::to_string(p) + " elements");
  }
  for (int a = 0; a < p; ++a) {
    const SubsetMask ia = e.images[static_cast<std::size_t>(a)];
    if (!family.contains(ia)) return false;
    for (int b = 0; b < p; ++b) {
      const SubsetMask ib = e.images[static_cast<std::size_t>(b)];
      if (a != b && ia == ib) return false;
      if (poset.leq(a, b) != is_subset(ia, ib)) return false;
    }
  }
  return true;
}

/// Off-diagonal entry (i, j) is an element of B_i \ T_j, where B_i and T_i
/// are the images of the bottom and top of chain i.
class WitnessMatrix {
 public:
  explicit WitnessMatrix(int chains) : m_(chains), cells_(static_cast<std::size_t>(chains * chains), 0) {}
  int chains() const { return m_; }
  /// 1-based element; 0 on the diagonal.
  int at(int i, int j) const { return cells_[static_cast<std::size_t>(i * m_ + j)]; }
  void set(int i, int j, int x) { cells_[static_cast<std::size_t>(i * m_ + j)] = x; }

 private:
  int m_;
  std::vector<int> cells_;
};

inline WitnessMatrix witness_matrix(const ComparabilityMatrix& poset, const Embedding& e) {
  if (!poset.is_chain_union()) throw std::invalid_argument("witness matrix needs a union of chains");
  if (static_cast<int>(e.images.size()) != poset.size()) throw std::invalid_argument("embedding size mismatch");
  const auto& comps = poset.components();
  const int m = static_cast<int>(comps.size());
  WitnessMatrix w(m);
  for (int i = 0; i < m; ++i) {
    const SubsetMask bottom = e.images[static_cast<std::size_t>(comps[static_cast<std::size_t>(i)].first)];
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const Component& cj = comps[static_cast<std::size_t>(j)];
      const SubsetMask top = e.images[static_cast<std::size_t>(cj.first + cj.size - 1)];
      const SubsetMask diff = bottom - top;
      if (diff.empty()) {
        throw std::invalid_argument("bottom of chain " + std::to_string(i + 1) + " " + to_string(bottom) +
                                    " lies inside top of chain " + std::to_string(j + 1) + " " + to_string(top) +
                                    "; the embedding is not induced");
      }
      w.set(i, j, diff.min_element());
    }
  }
  return w;
}

}  // namespace indsat

#endif  // INDSAT_EMBED_HPP
