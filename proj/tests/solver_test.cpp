#include <gtest/gtest.h>

#include <stdexcept>

#include "indsat/constructs.hpp"
#include "indsat/solver.hpp"
#include "oracle.hpp"

namespace indsat {
namespace {

TEST(Solver, SmallValues) {
  const SolveResult c2 = sat_star_exact(2, build_poset("C2"));
  EXPECT_EQ(c2.status, SolveStatus::exact);
  ASSERT_TRUE(c2.value.has_value());
  EXPECT_EQ(*c2.value, 1U);
  ASSERT_TRUE(c2.witness.has_value());
  EXPECT_TRUE(*c2.witness == canonicalize_family({SubsetMask()}, 2) ||
              *c2.witness == canonicalize_family({SubsetMask::full(2)}, 2));

  const SolveResult c1 = sat_star_exact(3, build_poset("C1"));
  EXPECT_EQ(*c1.value, 0U);
  EXPECT_TRUE(c1.witness->empty());

  EXPECT_EQ(*sat_star_exact(3, build_poset("C2")).value, 1U);
}

TEST(Solver, AgreesWithEnumeration) {
  for (const char* spec : {"C1", "C2", "2C1"}) {
    const auto p = build_poset(spec);
    for (int n = 1; n <= 3; ++n) {
      const SolveResult r = sat_star_exact(n, p);
      ASSERT_EQ(r.status, SolveStatus::exact);
      EXPECT_EQ(*r.value, oracle::sat_star_by_enumeration(n, p)) << spec << " n=" << n;
      const std::vector<SubsetMask> w(r.witness->begin(), r.witness->end());
      EXPECT_TRUE(oracle::is_saturated(n, w, p)) << spec << " n=" << n;
    }
  }
}

TEST(Solver, WitnessIsSaturated) {
  for (const char* spec : {"C3", "2C2", "B2"}) {
    const auto p = build_poset(spec);
    for (int n = 2; n <= 3; ++n) {
      const SolveResult r = sat_star_exact(n, p);
      ASSERT_EQ(r.status, SolveStatus::exact);
      EXPECT_EQ(r.witness->size(), *r.value);
      EXPECT_TRUE(is_saturated(*r.witness, p)) << spec << " n=" << n;
    }
  }
}

TEST(Solver, Deterministic) {
  const auto p = build_poset("2C2");
  const SolveResult a = sat_star_exact(3, p);
  const SolveResult b = sat_star_exact(3, p);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Solver, NotAboveGreedyCompletions) {
  const auto b3 = build_poset("B3");
  const SolveResult r = sat_star_exact(4, b3);
  ASSERT_EQ(r.status, SolveStatus::exact);
  EXPECT_LE(*r.value, greedy_saturate(construct_b3(4), b3).size());
  const auto c2 = build_poset("C2+C1");
  const SolveResult s = sat_star_exact(3, c2);
  EXPECT_LE(*s.value, greedy_saturate(empty_family(3), c2).size());
}

TEST(Solver, BudgetKeepsUpperBound) {
  SolveBudget tiny;
  tiny.node_budget = 3;
  const SolveResult r = sat_star_exact(4, build_poset("B3"), tiny);
  EXPECT_EQ(r.status, SolveStatus::budget_exceeded);
  ASSERT_TRUE(r.value.has_value());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->size(), *r.value);
  EXPECT_TRUE(is_saturated(*r.witness, build_poset("B3")));
}

TEST(Solver, GroundSizeRange) {
  EXPECT_THROW(sat_star_exact(0, build_poset("C2")), std::invalid_argument);
  EXPECT_THROW(sat_star_exact(9, build_poset("C2")), std::invalid_argument);
}

}  // namespace
}  // namespace indsat
