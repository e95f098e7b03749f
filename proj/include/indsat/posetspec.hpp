#ifndef INDSAT_POSETSPEC_HPP
#define INDSAT_POSETSPEC_HPP

// Target posets: disjoint unions of chains C<k> and Boolean lattices B<k>,
// B<k>- (empty set removed) and B<k>-- (empty and full set removed).
//
//   spec := term ('+' term)*
//   term := [count] base
//   base := 'C' int | 'B' int ['-' | '--']

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "indsat/setfam.hpp"

namespace indsat {

inline constexpr int kMaxPosetElements = 64;

enum class BaseKind { chain, boolean, boolean_minus, boolean_minus_minus };

struct PosetBase {
  BaseKind kind = BaseKind::chain;
  int k = 1;

  bool is_chain() const { return kind == BaseKind::chain; }

  /// Element count; saturates to avoid overflow on absurd k.
  std::uint64_t size() const {
    if (kind == BaseKind::chain) return static_cast<std::uint64_t>(k);
    if (k >= 63) return ~std::uint64_t{0} >> 1;
    const std::uint64_t all = std::uint64_t{1} << k;
    switch (kind) {
      case BaseKind::boolean: return all;
      case BaseKind::boolean_minus: return all - 1;
      default: return all - 2;
    }
  }

  friend bool operator==(const PosetBase&, const PosetBase&) = default;
};

struct PosetTerm {
  int count = 1;
  PosetBase base;
  friend bool operator==(const PosetTerm&, const PosetTerm&) = default;
};

struct PosetSpec {
  std::vector<PosetTerm> terms;

  std::uint64_t element_count() const {
    std::uint64_t total = 0;
    for (const auto& t : terms) total += static_cast<std::uint64_t>(t.count) * t.base.size();
    return total;
  }
  bool is_chain_union() const {
    return std::all_of(terms.begin(), terms.end(), [](const PosetTerm& t) { return t.base.is_chain(); });
  }
  /// Number of components (chains or lattice copies).
  int component_count() const {
    int c = 0;
    for (const auto& t : terms) c += t.count;
    return c;
  }

  friend bool operator==(const PosetSpec&, const PosetSpec&) = default;
};

class PosetParseError : public std::invalid_argument {
 public:
  PosetParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Chains first (longest first), then lattices by decreasing k, full lattice
// before the truncated variants.
inline auto base_rank(const PosetBase& b) {
  return std::make_tuple(b.is_chain() ? 0 : 1, -b.k, static_cast<int>(b.kind));
}

inline PosetSpec normalize(std::vector<PosetTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const PosetTerm& a, const PosetTerm& b) {
    return base_rank(a.base) < base_rank(b.base);
  });
  PosetSpec out;
  for (const auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().base == t.base) {
      out.terms.back().count += t.count;
    } else {
      out.terms.push_back(t);
    }
  }
  return out;
}

}  // namespace detail

inline PosetSpec parse_poset_spec(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](const char* what) -> int {
    skip_ws();
    const std::size_t start = pos;
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw PosetParseError(std::string(what) + " too large", start);
      ++pos;
    }
    if (pos == start) throw PosetParseError(std::string("expected ") + what, start);
    return static_cast<int>(value);
  };

  std::vector<PosetTerm> terms;
  while (true) {
    skip_ws();
    PosetTerm term;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t at = pos;
      term.count = read_int("count");
      if (term.count == 0) throw PosetParseError("zero count", at);
      skip_ws();
    }
    if (pos >= text.size()) throw PosetParseError("expected 'C' or 'B'", pos);
    const char letter = text[pos];
    if (letter != 'C' && letter != 'B') throw PosetParseError("expected 'C' or 'B'", pos);
    ++pos;
    skip_ws();
    const std::size_t size_at = pos;
    term.base.k = read_int(letter == 'C' ? "chain length" : "lattice dimension");
    if (letter == 'C') {
      if (term.base.k == 0) throw PosetParseError("zero chain length", size_at);
      term.base.kind = BaseKind::chain;
    } else {
      if (term.base.k == 0) throw PosetParseError("zero lattice dimension", size_at);
      term.base.kind = BaseKind::boolean;
      skip_ws();
      if (pos < text.size() && text[pos] == '-') {
        ++pos;
        term.base.kind = BaseKind::boolean_minus;
        skip_ws();
        if (pos < text.size() && text[pos] == '-') {
          ++pos;
          term.base.kind = BaseKind::boolean_minus_minus;
          if (term.base.k < 2) throw PosetParseError("B1-- has no elements", size_at);
        }
      }
    }
    terms.push_back(term);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+') throw PosetParseError("expected '+'", pos);
    ++pos;
  }
  return detail::normalize(std::move(terms));
}

inline std::string render_poset_spec(const PosetSpec& spec) {
  std::string out;
  for (const auto& t : spec.terms) {
    if (!out.empty()) out += '+';
    if (t.count != 1) out += std::to_string(t.count);
    out += t.base.is_chain() ? 'C' : 'B';
    out += std::to_string(t.base.k);
    if (t.base.kind == BaseKind::boolean_minus) out += "-";
    if (t.base.kind == BaseKind::boolean_minus_minus) out += "--";
  }
  return out;
}

/// The ground sets of a Boolean base in canonical order. Also the order in
/// which its poset elements are numbered.
inline std::vector<SubsetMask> lattice_elements(const PosetBase& base) {
  std::vector<SubsetMask> out;
  const SubsetMask top = SubsetMask::full(base.k);
  for (int r = 0; r <= base.k; ++r) {
    for (SubsetMask s : subsets_of_size(top, r)) {
      if (base.kind != BaseKind::boolean && s.empty()) continue;
      if (base.kind == BaseKind::boolean_minus_minus && s == top) continue;
      out.push_back(s);
    }
  }
  return out;
}

/// A contiguous block of poset elements forming one chain or one lattice copy.
struct Component {
  int first = 0;
  int size = 0;
  PosetBase base;
  int group = 0;  // index of the spec term it came from
  int copy = 0;   // 0-based copy number within that term
};

/// Explicit partial order on elements 0..size()-1, numbered component by
/// component along a linear extension (chains bottom to top, lattices in
/// canonical set order).
class ComparabilityMatrix {
 public:
  int size() const { return static_cast<int>(rows_.size()); }
  bool leq(int a, int b) const { return ((rows_[static_cast<std::size_t>(a)] >> b) & 1U) != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool incomparable(int a, int b) const { return !leq(a, b) && !leq(b, a); }
  /// Elements above a (including a) as a bitmask over element indices.
  std::uint64_t up_set(int a) const { return rows_[static_cast<std::size_t>(a)]; }

  const std::vector<Component>& components() const { return components_; }
  const PosetSpec& spec() const { return spec_; }
  bool is_chain_union() const { return spec_.is_chain_union(); }

  /// Component index owning element e.
  int component_of(int e) const {
    for (std::size_t c = 0; c < components_.size(); ++c) {
      if (e < components_[c].first + components_[c].size) return static_cast<int>(c);
    }
    throw std::out_of_range("poset element out of range");
  }

  /// Number of strictly related pairs a < b.
  int strict_pair_count() const {
    int count = 0;
    for (std::uint64_t r : rows_) count += std::popcount(r) - 1;
    return count;
  }

  /// Reflexive, antisymmetric and transitive.
  bool is_partial_order() const {
    const int p = size();
    for (int a = 0; a < p; ++a) {
      if (!leq(a, a)) return false;
      for (int b = 0; b < p; ++b) {
        if (a != b && leq(a, b) && leq(b, a)) return false;
        if (!leq(a, b)) continue;
        // every c above b must be above a
        if ((up_set(b) & ~up_set(a)) != 0) return false;
      }
    }
    return true;
  }

 private:
  friend ComparabilityMatrix build_poset(const PosetSpec& spec);
  PosetSpec spec_;
  std::vector<std::uint64_t> rows_;
  std::vector<Component> components_;
};

inline ComparabilityMatrix build_poset(const PosetSpec& spec) {
  const std::uint64_t total = spec.element_count();
  if (total == 0) throw std::invalid_argument("poset has no elements");
  if (total > static_cast<std::uint64_t>(kMaxPosetElements)) {
    throw std::invalid_argument("poset " + render_poset_spec(spec) + " has " + std::to_string(total) +
                                " elements; the limit is " + std::to_string(kMaxPosetElements));
  }
  ComparabilityMatrix m;
  m.spec_ = spec;
  m.rows_.assign(static_cast<std::size_t>(total), 0);
  int next = 0;
  for (std::size_t g = 0; g < spec.terms.size(); ++g) {
    const PosetTerm& term = spec.terms[g];
    for (int c = 0; c < term.count; ++c) {
      Component comp{next, static_cast<int>(term.base.size()), term.base, static_cast<int>(g), c};
      if (term.base.is_chain()) {
        for (int i = 0; i < comp.size; ++i) {
          for (int j = i; j < comp.size; ++j) {
            m.rows_[static_cast<std::size_t>(next + i)] |= std::uint64_t{1} << (next + j);
          }
        }
      } else {
        const std::vector<SubsetMask> sets = lattice_elements(term.base);
        for (int i = 0; i < comp.size; ++i) {
          for (int j = 0; j < comp.size; ++j) {
            if (is_subset(sets[static_cast<std::size_t>(i)], sets[static_cast<std::size_t>(j)])) {
              m.rows_[static_cast<std::size_t>(next + i)] |= std::uint64_t{1} << (next + j);
            }
          }
        }
      }
      m.components_.push_back(comp);
      next += comp.size;
    }
  }
  return m;
}

inline ComparabilityMatrix build_poset(std::string_view text) { return build_poset(parse_poset_spec(text)); }

}  // namespace indsat

#endif  // INDSAT_POSETSPEC_HPP
