#include "indsat/setfam.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "indsat/constructs.hpp"

namespace indsat {
namespace {

TEST(SubsetMaskTest, ElementOneIsLeastSignificantBit) {
  EXPECT_EQ(SubsetMask::of({1}).bits(), 1U);
  EXPECT_EQ(SubsetMask::of({1, 3}).bits(), 5U);
  EXPECT_EQ(SubsetMask::of({3, 1}).elements(), (std::vector<int>{1, 3}));
  EXPECT_EQ(SubsetMask::interval(2, 4), SubsetMask::of({2, 3, 4}));
  EXPECT_TRUE(SubsetMask::interval(5, 4).empty());
  EXPECT_EQ(SubsetMask::full(64).size(), 64);
  EXPECT_THROW(SubsetMask::of({0}), std::out_of_range);
}

TEST(SubsetMaskTest, IsSubsetExamples) {
  EXPECT_TRUE(is_subset(SubsetMask::of({1}), SubsetMask::of({1, 2})));
  EXPECT_FALSE(is_subset(SubsetMask::of({1}), SubsetMask::of({2})));
  EXPECT_TRUE(is_subset(SubsetMask(), SubsetMask()));
}

TEST(SubsetMaskTest, MutualInclusionMeansEqual) {
  for (std::uint64_t a = 0; a < 32; ++a) {
    for (std::uint64_t b = 0; b < 32; ++b) {
      const bool both = is_subset(SubsetMask(a), SubsetMask(b)) && is_subset(SubsetMask(b), SubsetMask(a));
      EXPECT_EQ(both, a == b);
    }
  }
}

TEST(CanonicalizeTest, DedupAndSort) {
  const Family f = canonicalize_family({SubsetMask::of({1, 2}), SubsetMask::of({1}), SubsetMask::of({1})}, 3);
  ASSERT_EQ(f.size(), 2U);
  EXPECT_EQ(f[0], SubsetMask::of({1}));
  EXPECT_EQ(f[1], SubsetMask::of({1, 2}));
  EXPECT_TRUE(canonicalize_family({}, 3).empty());
}

TEST(CanonicalizeTest, OrdersByCardinalityThenValue) {
  // {3} = 0b100 has the larger value but the smaller size.
  const Family f = canonicalize_family({SubsetMask::of({3}), SubsetMask::of({1, 2})}, 3);
  EXPECT_EQ(f[0], SubsetMask::of({3}));
  EXPECT_EQ(f[1], SubsetMask::of({1, 2}));

  // Reference: stable sort on an explicit (popcount, value) key.
  std::vector<SubsetMask> all = all_subsets(SubsetMask::full(5));
  std::vector<SubsetMask> reference = all;
  std::stable_sort(reference.begin(), reference.end(), [](SubsetMask a, SubsetMask b) {
    return std::make_pair(a.size(), a.bits()) < std::make_pair(b.size(), b.bits());
  });
  std::mt19937 rng(7);
  std::shuffle(all.begin(), all.end(), rng);
  const Family g = canonicalize_family(all, 5);
  EXPECT_TRUE(std::equal(g.begin(), g.end(), reference.begin(), reference.end()));
}

TEST(CanonicalizeTest, RejectsOutOfRangeBits) {
  EXPECT_THROW(canonicalize_family({SubsetMask::of({4})}, 3), std::invalid_argument);
  EXPECT_THROW(canonicalize_family({}, 0), std::invalid_argument);
  EXPECT_THROW(canonicalize_family({}, 65), std::invalid_argument);
}

TEST(CanonicalizeTest, IdempotentAndOrderInsensitive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<SubsetMask> sets;
    const int count = static_cast<int>(rng() % 30);
    for (int i = 0; i < count; ++i) sets.emplace_back(rng() & SubsetMask::full(n).bits());
    const Family once = canonicalize_family(sets, n);
    EXPECT_EQ(canonicalize_family(std::vector<SubsetMask>(once.begin(), once.end()), n), once);
    std::shuffle(sets.begin(), sets.end(), rng);
    EXPECT_EQ(canonicalize_family(sets, n), once);
    for (std::size_t i = 1; i < once.size(); ++i) EXPECT_TRUE(canonical_less(once[i - 1], once[i]));
  }
}

TEST(ComplementTest, EmptySetGoesToGround) {
  const Family f = complement_family(canonicalize_family({SubsetMask()}, 3));
  ASSERT_EQ(f.size(), 1U);
  EXPECT_EQ(f[0], SubsetMask::of({1, 2, 3}));
}

TEST(ComplementTest, Involution) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<SubsetMask> sets;
    for (int i = 0; i < 20; ++i) sets.emplace_back(rng() & SubsetMask::full(n).bits());
    const Family f = canonicalize_family(sets, n);
    EXPECT_EQ(complement_family(complement_family(f)), f);
  }
}

TEST(ComplementTest, ConstructionsAreComplementClosed) {
  const Family two = construct_2ck_c1(8, 3);
  EXPECT_EQ(complement_family(two), two);
  const Family binom = construct_mc2_binom(6, 1);
  EXPECT_EQ(complement_family(binom), binom);
}

TEST(FamilyTest, LookupAndInsertion) {
  const Family f = canonicalize_family({SubsetMask::of({2}), SubsetMask::of({1, 3})}, 3);
  EXPECT_TRUE(f.contains(SubsetMask::of({2})));
  EXPECT_FALSE(f.contains(SubsetMask::of({1})));
  EXPECT_EQ(f.index_of(SubsetMask::of({1, 3})), 1U);
  EXPECT_EQ(f.index_of(SubsetMask::of({1})), 2U);
  const Family g = f.with(SubsetMask::of({1}));
  EXPECT_EQ(g.size(), 3U);
  EXPECT_EQ(g[0], SubsetMask::of({1}));
  EXPECT_EQ(g.with(SubsetMask::of({1})), g);
  EXPECT_THROW(f.with(SubsetMask::of({4})), std::invalid_argument);
}

TEST(SubsetsTest, SizesMatchBinomials) {
  EXPECT_EQ(subsets_of_size(SubsetMask::full(6), 3).size(), 20U);
  EXPECT_EQ(subsets_of_size(SubsetMask::full(6), 0).size(), 1U);
  EXPECT_EQ(subsets_of_size(SubsetMask::full(6), 7).size(), 0U);
  EXPECT_EQ(all_subsets(SubsetMask::of({2, 5, 7})).size(), 8U);
}

}  // namespace
}  // namespace indsat
