#include <set>

#include <gtest/gtest.h>

#include "brt/isoprobe.hpp"
#include "oracles.hpp"

namespace brt {
namespace {

std::set<std::pair<long, long>> pairs_of(const std::vector<WeightedSolution>& s) {
  std::set<std::pair<long, long>> out;
  for (const auto& w : s) out.emplace(w.x, w.y);
  return out;
}

// Exhaustive scan written out independently.
std::set<std::pair<long, long>> scan(long k, long bound) {
  std::set<std::pair<long, long>> out;
  for (long y = 0; y <= bound; ++y)
    for (long x = 0; x < y; ++x)
      if (x * std::labs(x - k) == y * std::labs(y - k)) out.emplace(x, y);
  return out;
}

TEST(AbOrder, Examples) {
  EXPECT_EQ(ab_order(Params(2, 3)), 6);
  EXPECT_EQ(ab_order(Params(3, 2)), 0);
  EXPECT_EQ(ab_order(Params(6, 2)), 6);
  EXPECT_EQ(ab_order(Params(6, 3)), 6);
}

TEST(Torsion, Examples) {
  EXPECT_EQ(torsion_divisors(Params(6, 2), 10).orders, (std::vector<long>{1, 2, 3}));
  EXPECT_EQ(torsion_divisors(Params(6, 3), 10), torsion_divisors(Params(6, 2), 10));
  const TorsionSet z = torsion_divisors(Params(3, 2), 5);
  EXPECT_TRUE(z.all_orders);
  EXPECT_EQ(z.orders, (std::vector<long>{1, 2, 3, 4, 5}));
  EXPECT_THROW(torsion_divisors(Params(2, 2), 0), std::invalid_argument);
}

TEST(Solutions, SmallK) {
  EXPECT_EQ(pairs_of(brute_solutions(1, 2)), (std::set<std::pair<long, long>>{{0, 1}}));
  EXPECT_EQ(pairs_of(brute_solutions(4, 8)), (std::set<std::pair<long, long>>{{0, 4}, {1, 3}}));
  const auto five = pairs_of(brute_solutions(5, 10));
  for (auto p : {std::pair{2L, 3L}, {1L, 4L}, {0L, 5L}, {3L, 6L}, {2L, 6L}}) EXPECT_TRUE(five.count(p));
  for (const auto& s : parametric_solutions(4)) EXPECT_EQ(s.family, SolutionFamily::mirror);
}

TEST(Solutions, ParametricTwentyFive) {
  const auto s = pairs_of(parametric_solutions(25));
  for (auto p : {std::pair{21L, 28L}, {4L, 28L}, {15L, 30L}, {10L, 30L}}) EXPECT_TRUE(s.count(p));
  for (const auto& [x, y] : s) EXPECT_EQ(x * std::labs(x - 25), y * std::labs(y - 25));
}

TEST(Solutions, BruteMatchesScanAndParametric) {
  for (long k = 1; k <= 60; ++k) {
    const auto brute = brute_solutions(k, 2 * k);
    EXPECT_EQ(pairs_of(brute), scan(k, 2 * k)) << k;
    EXPECT_TRUE(same_pairs(brute, parametric_solutions(k))) << k;
    for (const auto& w : brute) EXPECT_NE(w.family, SolutionFamily::unclassified) << k;
  }
}

TEST(Solutions, BoundBelowKRejected) { EXPECT_THROW(brute_solutions(5, 4), std::invalid_argument); }

TEST(Verdict, Examples) {
  EXPECT_EQ(verdict(Params(2, 3), Params(2, 3)).kind, VerdictKind::SamePair);
  const Verdict c = verdict(Params(6, 2), Params(6, 3));
  EXPECT_EQ(c.kind, VerdictKind::ComplementCandidate);
  EXPECT_EQ(c.note, "open per Conjecture");
  const Verdict a = verdict(Params(2, 3), Params(2, 4));
  EXPECT_EQ(a.kind, VerdictKind::Excluded);
  EXPECT_EQ(a.reasons.front(), "abelianisation orders 6 ≠ 12");
  const Verdict b = verdict(Params(2, 3), Params(3, 3));
  EXPECT_EQ(b.reasons.front(), "n ≠ r");
}

TEST(Verdict, InfiniteOrderComparesUnequal) {
  const Verdict v = verdict(Params(3, 2), Params(3, 3));
  EXPECT_EQ(v.kind, VerdictKind::Excluded);
  EXPECT_EQ(v.reasons.front(), "abelianisation orders infinite ≠ 3");
}

TEST(Verdict, SymmetricAndMatchesCriterionUpToThirty) {
  for (long n = 2; n <= 30; ++n)
    for (long m = 2; m <= 30; ++m)
      for (long r = 2; r <= 30; ++r)
        for (long s = 2; s <= 30; ++s) {
          const Params a(n, m), b(r, s);
          const Verdict v = verdict(a, b);
          ASSERT_EQ(v.kind, verdict(b, a).kind);
          ASSERT_EQ(v.kind != VerdictKind::Excluded, oracle::inseparable(n, m, r, s))
              << verdict_line(a, b, v);
          if (v.kind == VerdictKind::Excluded) ASSERT_FALSE(v.reasons.empty()) << verdict_line(a, b, v);
        }
}

TEST(Verdict, LineAndTable) {
  EXPECT_EQ(verdict_line(Params(6, 2), Params(6, 3), verdict(Params(6, 2), Params(6, 3))),
            "(6,2) vs (6,3): ComplementCandidate (open per Conjecture)");
  const std::string t = verdict_table(2, 3);
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 12);
}

}  // namespace
}  // namespace brt
