#ifndef INDSAT_CONSTRUCTS_HPP
#define INDSAT_CONSTRUCTS_HPP

// Explicit saturating-family constructions. Every generator builds the raw
// union of its defining pieces and canonicalizes; overlaps would show up as
// size mismatches in the tests.

#include <stdexcept>
#include <string>
#include <vector>

#include "indsat/setfam.hpp"

namespace indsat {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

inline void append(std::vector<SubsetMask>& out, const std::vector<SubsetMask>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

}  // namespace detail

/// Family for m pairwise incomparable k-chains: m-1 long chains C_s through
/// [m, t], low layers F_z that meet [m+k-3] almost fully, high co-layers F^z,
/// plus the empty and full sets. k = 2 uses its own variant. Any n >= m+k
/// gives a well-formed family; freeness is only claimed for n >= 2(m+k).
inline Family construct_mck(int n, int m, int k) {
  detail::require(m >= 2, "construct_mck needs m >= 2");
  detail::require(k >= 2, "construct_mck needs k >= 2");
  detail::require(n >= m + k, "construct_mck needs n >= m+k");
  detail::require(n <= kMaxGroundSize, "construct_mck needs n <= 64");

  const SubsetMask ground = SubsetMask::full(n);
  std::vector<SubsetMask> sets{SubsetMask(), ground};
  const int chain_start = k >= 3 ? m + k - 1 : m + 1;
  for (int s = 1; s <= m - 1; ++s) {
    const SubsetMask single = SubsetMask::of({s});
    sets.push_back(single);
    for (int t = chain_start; t <= n; ++t) sets.push_back(single | SubsetMask::interval(m, t));
  }

  if (k == 2) {
    const SubsetMask tail = SubsetMask::interval(m, n);
    for (SubsetMask pair : subsets_of_size(ground, 2)) {
      if (!is_subset(pair, tail)) sets.push_back(pair);
    }
    sets.push_back(tail);
    return canonicalize_family(std::move(sets), n);
  }

  const int core = m + k - 3;
  const SubsetMask core_set = SubsetMask::full(core);
  for (int z = 2; z <= k; ++z) {
    for (SubsetMask f : subsets_of_size(ground, z)) {
      if ((f & core_set).size() >= z - 1) sets.push_back(f);
    }
  }
  for (int z = 0; z <= k - 2; ++z) {
    for (SubsetMask f : subsets_of_size(core_set, core - z)) sets.push_back(f.complement(n));
  }
  return canonicalize_family(std::move(sets), n);
}

/// The lower half of the (binom(2t,t)+1)C_2 family: empty set, t-subsets of
/// [2t+1], (t+1)-subsets of [2t+1] through 2t+1, and (t+2)-subsets of [2t].
inline std::vector<SubsetMask> mc2_binom_lower(int t) {
  const SubsetMask low = SubsetMask::full(2 * t + 1);
  const int anchor = 2 * t + 1;
  std::vector<SubsetMask> sets{SubsetMask()};
  detail::append(sets, subsets_of_size(low, t));
  for (SubsetMask f : subsets_of_size(low, t + 1)) {
    if (f.contains(anchor)) sets.push_back(f);
  }
  detail::append(sets, subsets_of_size(SubsetMask::full(2 * t), t + 2));
  return sets;
}

inline Family construct_mc2_binom(int n, int t) {
  detail::require(t >= 1, "construct_mc2_binom needs t >= 1");
  detail::require(n >= 2 * t + 3, "construct_mc2_binom needs n >= 2t+3");
  detail::require(n <= kMaxGroundSize, "construct_mc2_binom needs n <= 64");
  std::vector<SubsetMask> sets = mc2_binom_lower(t);
  const std::size_t lower = sets.size();
  for (std::size_t i = 0; i < lower; ++i) sets.push_back(sets[i].complement(n));
  return canonicalize_family(std::move(sets), n);
}

/// Family for 2C_k + C_1 of size 2^(k+2) - 4: nonempty subsets of [k], of
/// [k+1, 2k-1], their unions with [k], all complements, and the two extremes.
inline Family construct_2ck_c1(int n, int k) {
  detail::require(k >= 3, "construct_2ck_c1 needs k >= 3");
  detail::require(n >= 2 * k, "construct_2ck_c1 needs n >= 2k");
  detail::require(n <= kMaxGroundSize, "construct_2ck_c1 needs n <= 64");
  const SubsetMask first = SubsetMask::full(k);
  const SubsetMask second = SubsetMask::interval(k + 1, 2 * k - 1);
  std::vector<SubsetMask> pieces;
  for (SubsetMask a : all_subsets(first)) {
    if (!a.empty()) pieces.push_back(a);
  }
  for (SubsetMask a : all_subsets(second)) {
    if (a.empty()) continue;
    pieces.push_back(a);
    pieces.push_back(first | a);
  }
  std::vector<SubsetMask> sets{SubsetMask(), SubsetMask::full(n)};
  for (SubsetMask a : pieces) {
    sets.push_back(a);
    sets.push_back(a.complement(n));
  }
  return canonicalize_family(std::move(sets), n);
}

/// Empty set, [n], all singletons and the edges of K_{2,n-2} between {1,2}
/// and [3,n]. Size 3n - 2.
inline Family construct_b3(int n) {
  detail::require(n >= 4, "construct_b3 needs n >= 4");
  detail::require(n <= kMaxGroundSize, "construct_b3 needs n <= 64");
  std::vector<SubsetMask> sets{SubsetMask(), SubsetMask::full(n)};
  for (int v = 1; v <= n; ++v) sets.push_back(SubsetMask::of({v}));
  for (int u = 1; u <= 2; ++u) {
    for (int v = 3; v <= n; ++v) sets.push_back(SubsetMask::of({u, v}));
  }
  return canonicalize_family(std::move(sets), n);
}

enum class Drop { none, empty, empty_and_full };

/// 2^[k], optionally without the empty set (and the full set).
inline Family boolean_family(int k, Drop drop) {
  detail::require(k >= 1 && k <= 16, "boolean_family needs 1 <= k <= 16");
  const SubsetMask top = SubsetMask::full(k);
  std::vector<SubsetMask> sets;
  for (SubsetMask s : all_subsets(top)) {
    if (drop != Drop::none && s.empty()) continue;
    if (drop == Drop::empty_and_full && s == top) continue;
    sets.push_back(s);
  }
  return canonicalize_family(std::move(sets), k);
}

}  // namespace indsat

#endif  // INDSAT_CONSTRUCTS_HPP
