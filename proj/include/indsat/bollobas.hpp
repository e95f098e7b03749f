#ifndef INDSAT_BOLLOBAS_HPP
#define INDSAT_BOLLOBAS_HPP

// Set-pair systems (X_i, Y_i) with X_i and Y_i disjoint.
//   Bollobás:      X_i meets Y_j for every i != j.
//   skew Bollobás: X_i meets Y_j for every i < j.
// A skew system with |X_i| <= a and |Y_i| <= b has at most binom(a+b, a)
// pairs, which caps the number of incomparable 2-chains in the
// (binom(2t,t)+1)C_2 construction once its copies are rewritten into such a
// system.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "indsat/embed.hpp"
#include "indsat/posetspec.hpp"
#include "indsat/setfam.hpp"

namespace indsat {

struct SetPair {
  SubsetMask x;
  SubsetMask y;
  friend bool operator==(const SetPair&, const SetPair&) = default;
};

struct SetPairSystem {
  int n = 1;
  std::vector<SetPair> pairs;
  friend bool operator==(const SetPairSystem&, const SetPairSystem&) = default;
};

class PairSystemError : public std::invalid_argument {
 public:
  PairSystemError(const std::string& what, std::size_t index)
      : std::invalid_argument(what + " (pair " + std::to_string(index + 1) + ")"), index_(index) {}
  /// 0-based index of the offending pair.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

inline void check_disjoint_pairs(const SetPairSystem& s) {
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (!(s.pairs[i].x & s.pairs[i].y).empty()) throw PairSystemError("X and Y intersect", i);
  }
}

inline bool is_bollobas(const SetPairSystem& s) {
  check_disjoint_pairs(s);
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    for (std::size_t j = 0; j < s.pairs.size(); ++j) {
      if (i != j && (s.pairs[i].x & s.pairs[j].y).empty()) return false;
    }
  }
  return true;
}

inline bool is_skew_bollobas(const SetPairSystem& s) {
  check_disjoint_pairs(s);
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < s.pairs.size(); ++j) {
      if ((s.pairs[i].x & s.pairs[j].y).empty()) return false;
    }
  }
  return true;
}

/// binom(a + b, a). Throws on overflow.
inline std::uint64_t bollobas_bound(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("bollobas_bound needs a, b >= 0");
  const int k = std::min(a, b);
  const int total = a + b;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const auto num = static_cast<std::uint64_t>(total - k + i);
    // r * num / i stays integral at every step
    if (r > std::numeric_limits<std::uint64_t>::max() / num) throw std::overflow_error("binomial overflow");
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// Pairs (B_i, [n] \ T_i) from an induced kC_2 copy, in chain order.
inline SetPairSystem extract_pair_system(const Family& family, const ComparabilityMatrix& poset, const Embedding& e) {
  const auto& comps = poset.components();
  const bool two_chains = poset.is_chain_union() &&
                          std::all_of(comps.begin(), comps.end(), [](const Component& c) { return c.size == 2; });
  if (!two_chains) throw std::invalid_argument("pair extraction needs a kC2 target, got " + render_poset_spec(poset.spec()));
  if (!verify_embedding(family, poset, e)) throw std::invalid_argument("embedding is not an induced copy in the family");
  SetPairSystem s;
  s.n = family.n();
  for (const Component& c : comps) {
    const SubsetMask bottom = e.images[static_cast<std::size_t>(c.first)];
    const SubsetMask top = e.images[static_cast<std::size_t>(c.first + 1)];
    s.pairs.push_back({bottom, top.complement(family.n())});
  }
  return s;
}

/// Which of the five bottom classes of the (binom(2t,t)+1)C_2 family holds b,
/// 1..5, or 0 when none does.
inline int mc2_bottom_class(SubsetMask b, int n, int t) {
  const int anchor = 2 * t + 1;
  const SubsetMask low = SubsetMask::full(2 * t);
  const SubsetMask low_anchor = SubsetMask::full(anchor);
  const SubsetMask rest = b.complement(n);
  if (b.size() == t && is_subset(b, low)) return 1;
  if (b.size() == t && is_subset(b, low_anchor) && b.contains(anchor)) return 2;
  if (!b.contains(anchor) && rest.size() == t + 1 && is_subset(rest, low_anchor)) return 3;
  if (b.size() == t + 1 && is_subset(b, low_anchor) && b.contains(anchor)) return 4;
  if (rest.size() == t + 2 && is_subset(rest, low)) return 5;
  return 0;
}

struct Mc2Transform {
  SetPairSystem system;
  std::vector<int> classes;          // bottom class of each output pair
  std::vector<std::size_t> origin;   // input index of each output pair
};

/// Stable-sorts pairs by bottom class and maps classes 1-2 to
/// (B_i, T_i^c cap [2t]) and classes 3-5 to (B_i cap [2t], T_i^c). The
/// result has |X_i|, |Y_i| <= t and is skew Bollobás.
inline Mc2Transform transform_mc2_pairs(const SetPairSystem& s, int t) {
  if (t < 1) throw std::invalid_argument("transform needs t >= 1");
  check_disjoint_pairs(s);
  std::vector<int> cls(s.pairs.size());
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    cls[i] = mc2_bottom_class(s.pairs[i].x, s.n, t);
    if (cls[i] == 0) {
      throw PairSystemError("bottom " + to_string(s.pairs[i].x) + " lies in none of the five classes", i);
    }
  }
  std::vector<std::size_t> order(s.pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cls[a] < cls[b]; });

  const SubsetMask low = SubsetMask::full(2 * t);
  Mc2Transform out;
  out.system.n = s.n;
  for (std::size_t i : order) {
    const SetPair& p = s.pairs[i];
    if (cls[i] <= 2) {
      out.system.pairs.push_back({p.x, p.y & low});
    } else {
      out.system.pairs.push_back({p.x & low, p.y});
    }
    out.classes.push_back(cls[i]);
    out.origin.push_back(i);
  }
  return out;
}

}  // namespace indsat

#endif  // INDSAT_BOLLOBAS_HPP
