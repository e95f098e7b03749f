#ifndef INDSAT_SETFAM_HPP
#define INDSAT_SETFAM_HPP

// Subsets of [n] as single-word bitmasks and canonically ordered families of
// them. Element i of [n] lives in bit (i - 1).

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace indsat {

inline constexpr int kMaxGroundSize = 64;

class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  /// Builds a mask from 1-based elements.
  static SubsetMask of(std::initializer_list<int> elements) {
    return of(std::span<const int>(elements.begin(), elements.size()));
  }
  static SubsetMask of(std::span<const int> elements) {
    std::uint64_t bits = 0;
    for (int e : elements) {
      if (e < 1 || e > kMaxGroundSize) {
        throw std::out_of_range("element " + std::to_string(e) + " outside [1, 64]");
      }
      bits |= std::uint64_t{1} << (e - 1);
    }
    return SubsetMask(bits);
  }
  /// [n] itself.
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  /// The interval [lo, hi]; empty when lo > hi.
  static constexpr SubsetMask interval(int lo, int hi) {
    if (lo > hi) return SubsetMask();
    return SubsetMask(full(hi).bits_ & ~full(lo - 1).bits_);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const {
    return element >= 1 && element <= 64 && ((bits_ >> (element - 1)) & 1U) != 0;
  }
  /// Largest element, 0 for the empty set.
  constexpr int max_element() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
  /// Smallest element, 0 for the empty set.
  constexpr int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  constexpr bool fits(int n) const { return (bits_ & ~full(n).bits_) == 0; }
  constexpr SubsetMask complement(int n) const { return SubsetMask(~bits_ & full(n).bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;

 private:
  std::uint64_t bits_ = 0;
};

constexpr bool is_subset(SubsetMask a, SubsetMask b) { return (a.bits() & ~b.bits()) == 0; }
constexpr bool is_proper_subset(SubsetMask a, SubsetMask b) { return a != b && is_subset(a, b); }
constexpr bool comparable(SubsetMask a, SubsetMask b) { return is_subset(a, b) || is_subset(b, a); }

/// Canonical order: by cardinality, then by numeric mask value.
constexpr bool canonical_less(SubsetMask a, SubsetMask b) {
  const int sa = a.size();
  const int sb = b.size();
  return sa != sb ? sa < sb : a.bits() < b.bits();
}

inline std::string to_string(SubsetMask s);

/// A duplicate-free family over [n], stored in canonical order.
class Family {
 public:
  Family() = default;

  int n() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const SubsetMask& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  std::span<const SubsetMask> sets() const { return sets_; }

  bool contains(SubsetMask s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s, canonical_less);
  }
  /// Position of s in canonical order, or size() when absent.
  std::size_t index_of(SubsetMask s) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s, canonical_less);
    return it != sets_.end() && *it == s ? static_cast<std::size_t>(it - sets_.begin()) : sets_.size();
  }

  /// This family with s added (no-op when already present).
  Family with(SubsetMask s) const {
    check_member(s, n_);
    Family out = *this;
    auto it = std::lower_bound(out.sets_.begin(), out.sets_.end(), s, canonical_less);
    if (it == out.sets_.end() || *it != s) out.sets_.insert(it, s);
    return out;
  }

  friend bool operator==(const Family&, const Family&) = default;

  static void check_ground_size(int n) {
    if (n < 1 || n > kMaxGroundSize) {
      throw std::invalid_argument("ground size " + std::to_string(n) + " outside [1, 64]");
    }
  }
  static void check_member(SubsetMask s, int n) {
    if (!s.fits(n)) {
      throw std::invalid_argument("set " + to_string(s) + " has elements beyond n = " + std::to_string(n));
    }
  }

 private:
  friend Family canonicalize_family(std::vector<SubsetMask> sets, int n);
  Family(int n, std::vector<SubsetMask> sets) : n_(n), sets_(std::move(sets)) {}

  int n_ = 1;
  std::vector<SubsetMask> sets_;
};

/// Sorts into canonical order and merges duplicates. Throws on masks that use
/// bits at or above n.
inline Family canonicalize_family(std::vector<SubsetMask> sets, int n) {
  Family::check_ground_size(n);
  for (SubsetMask s : sets) Family::check_member(s, n);
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return Family(n, std::move(sets));
}

inline Family empty_family(int n) { return canonicalize_family({}, n); }

inline Family complement_family(const Family& f) {
  std::vector<SubsetMask> out;
  out.reserve(f.size());
  for (SubsetMask s : f) out.push_back(s.complement(f.n()));
  return canonicalize_family(std::move(out), f.n());
}

inline Family family_union(const Family& a, const Family& b) {
  if (a.n() != b.n()) throw std::invalid_argument("family union over different ground sizes");
  std::vector<SubsetMask> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return canonicalize_family(std::move(all), a.n());
}

/// All k-subsets of the given ground mask.
inline std::vector<SubsetMask> subsets_of_size(SubsetMask ground, int k) {
  std::vector<SubsetMask> out;
  const std::vector<int> elems = ground.elements();
  const int g = static_cast<int>(elems.size());
  if (k < 0 || k > g) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i : pick) bits |= std::uint64_t{1} << (elems[static_cast<std::size_t>(i)] - 1);
    out.emplace_back(bits);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == g - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// Every subset of ground (including the empty set and ground itself).
inline std::vector<SubsetMask> all_subsets(SubsetMask ground) {
  std::vector<SubsetMask> out;
  std::uint64_t g = ground.bits();
  std::uint64_t s = 0;
  do {
    out.emplace_back(s);
    s = (s - g) & g;
  } while (s != 0);
  return out;
}

inline std::string to_string(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace indsat

#endif  // INDSAT_SETFAM_HPP
