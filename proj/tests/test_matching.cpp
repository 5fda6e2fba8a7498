#include <gtest/gtest.h>

#include "bipham/conditions.hpp"
#include "bipham/generators.hpp"
#include "bipham/matching.hpp"

using namespace bipham;

namespace {

// Subset enumeration written out directly: first S (X before Y, by size)
// with |N+(S)| < |S| and |S| <= (a + 1) / 2.
bool brute_expansion(const BipartiteDigraph& d) {
  const int a = d.class_size();
  for (int side = 0; side < 2; ++side) {
    for (std::uint32_t bits = 1; bits < (1U << a); ++bits) {
      if (std::popcount(bits) > (a + 1) / 2) continue;
      VertexSet s;
      for (int i = 0; i < a; ++i) {
        if ((bits >> i) & 1U) s.insert(side * a + i);
      }
      if (neighborhood(d, s, Direction::kOut).size() < s.size()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Matching, CompleteGivesIdentity) {
  const auto k3 = BipartiteDigraph::complete(3);
  const auto m = std::get<Matching>(find_complete_matching(k3));
  EXPECT_EQ(m.mate, (std::vector<Vertex>{3, 4, 5, 0, 1, 2}));
  EXPECT_EQ(m.size(), 3);
  EXPECT_EQ(m.arcs(), (std::vector<Arc>{{0, 3}, {1, 4}, {2, 5}}));
  const auto back = std::get<Matching>(find_complete_matching(k3, MatchDirection::kYToX));
  EXPECT_EQ(back.direction, MatchDirection::kYToX);
  EXPECT_EQ(back.arcs(), (std::vector<Arc>{{3, 0}, {4, 1}, {5, 2}}));
}

TEST(Matching, SourceWithoutOutArcsIsAViolator) {
  const auto d = BipartiteDigraph::complete(3).without_arc({0, 3}).without_arc({0, 4}).without_arc({0, 5});
  const auto outcome = find_complete_matching(d);
  ASSERT_TRUE(std::holds_alternative<HallViolator>(outcome));
  const auto& h = std::get<HallViolator>(outcome);
  EXPECT_EQ(h.s, VertexSet::single(0));
  EXPECT_TRUE(h.n.empty());
  EXPECT_TRUE(is_valid_violator(d, h));

  const auto report = check_expansion(d);
  EXPECT_FALSE(report.holds);
  ASSERT_TRUE(report.violator);
  EXPECT_EQ(report.violator->s, VertexSet::single(0));
}

TEST(Matching, DprimeHasForwardMatching) {
  const auto outcome = find_complete_matching(gen_Dprime(2));
  ASSERT_TRUE(std::holds_alternative<Matching>(outcome));
  const auto& m = std::get<Matching>(outcome);
  EXPECT_EQ(m.partner(1), 3);  // s -> w
  EXPECT_TRUE(is_complete_matching(gen_Dprime(2), m));
}

TEST(Matching, ExpansionExamples) {
  EXPECT_TRUE(check_expansion(BipartiteDigraph::complete(3)).holds);
}

TEST(Matching, OutcomesValidate) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = gen_random_arcs(2 + seed % 7, seed, 0.15 + 0.1 * (seed % 5));
    for (auto dir : {MatchDirection::kXToY, MatchDirection::kYToX}) {
      const auto outcome = find_complete_matching(d, dir);
      if (const auto* m = std::get_if<Matching>(&outcome)) {
        EXPECT_TRUE(is_complete_matching(d, *m));
        EXPECT_EQ(m->direction, dir);
        for (const Arc& arc : m->arcs()) EXPECT_TRUE(d.has_arc(arc.from, arc.to));
      } else {
        const auto& h = std::get<HallViolator>(outcome);
        EXPECT_TRUE(is_valid_violator(d, h));
        EXPECT_EQ(neighborhood(d, h.s, Direction::kOut), h.n);
        EXPECT_LT(h.n.size(), h.s.size());
      }
    }
  }
}

TEST(Matching, ExpansionAgreesWithSubsetLoop) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = gen_random_arcs(2 + seed % 6, seed, 0.3 + 0.05 * (seed % 8));
    const auto report = check_expansion(d);
    EXPECT_EQ(report.holds, brute_expansion(d)) << "seed " << seed;
    if (!report.holds) EXPECT_TRUE(is_valid_violator(d, *report.violator));
  }
}

TEST(Matching, ConditionMGivesExpansionAndAMatching) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = gen_random_M(3 + seed % 6, seed, -1).digraph;
    EXPECT_TRUE(check_expansion(d).holds);
    const bool forward = std::holds_alternative<Matching>(find_complete_matching(d));
    const bool backward =
        std::holds_alternative<Matching>(find_complete_matching(d, MatchDirection::kYToX));
    EXPECT_TRUE(forward || backward) << "seed " << seed;
  }
  for (const auto& d : enumerate_all(2, [](const BipartiteDigraph& g) {
         return check_condition_M(g).satisfied;
       })) {
    EXPECT_TRUE(std::holds_alternative<Matching>(find_complete_matching(d)) ||
                std::holds_alternative<Matching>(find_complete_matching(d, MatchDirection::kYToX)));
  }
}

TEST(Matching, WithinSubset) {
  const auto k3 = BipartiteDigraph::complete(3);
  const VertexSet within = VertexSet::single(1) | VertexSet::single(2) | VertexSet::single(3) |
                           VertexSet::single(5);
  const auto m = std::get<Matching>(find_complete_matching(k3, within));
  EXPECT_TRUE(is_valid_matching(k3, m, within));
  EXPECT_EQ(m.mate[0], -1);
  EXPECT_EQ(m.mate[4], -1);
  EXPECT_EQ(restrict_matching(m, within), m);
}

TEST(Matching, AllCompleteMatchingsOfComplete) {
  for (int a = 2; a <= 5; ++a) {
    const auto k = BipartiteDigraph::complete(a);
    const auto all = all_complete_matchings(k, k.vertices());
    int factorial = 1;
    for (int i = 2; i <= a; ++i) factorial *= i;
    EXPECT_EQ(static_cast<int>(all.size()), factorial);
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_TRUE(is_complete_matching(k, all[i]));
      if (i > 0) EXPECT_LT(all[i - 1].mate, all[i].mate);
    }
  }
}

TEST(Matching, ValidatorsRejectBrokenInput) {
  const auto k2 = BipartiteDigraph::complete(2);
  EXPECT_FALSE(is_complete_matching(k2, Matching{MatchDirection::kXToY, {2, 2, 0, -1}}));
  EXPECT_FALSE(is_complete_matching(k2, Matching{MatchDirection::kXToY, {2, 3, 1, 0}}));
  const auto d = k2.without_arc({0, 2});
  EXPECT_FALSE(is_complete_matching(d, Matching{MatchDirection::kXToY, {2, 3, 0, 1}}));
  EXPECT_FALSE(is_valid_violator(k2, HallViolator{VertexSet::single(0), VertexSet()}));
}
