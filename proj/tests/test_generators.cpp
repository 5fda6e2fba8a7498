#include <gtest/gtest.h>

#include <map>
#include <set>

#include "bipham/conditions.hpp"
#include "bipham/generators.hpp"
#include "bipham/hamilton.hpp"
#include "bipham/oracle.hpp"
#include "oracles.hpp"

using namespace bipham;

TEST(Dprime, DegreesAndErrors) {
  for (int a : {2, 4, 6, 8}) {
    const auto d = gen_Dprime(a);
    for (Vertex v = 0; v < d.order(); ++v) EXPECT_EQ(degree(d, v).total(), 3 * a / 2);
    EXPECT_EQ(d.arc_count(), 3 * a * a / 2);
    EXPECT_FALSE(is_strongly_connected(d));
  }
  EXPECT_FALSE(oracle_hamiltonian(gen_Dprime(4)).hamiltonian);
  EXPECT_THROW(gen_Dprime(3), GraphError);
  EXPECT_THROW(gen_Dprime(0), GraphError);
}

TEST(Dak, DegreesAndErrors) {
  for (int a = 3; a <= 6; ++a) {
    for (int k = 1; 2 * k < a; ++k) {
      const auto d = gen_Dak(a, k);
      int low = d.order();
      for (Vertex v = 0; v < d.order(); ++v) low = std::min(low, degree(d, v).total());
      EXPECT_EQ(low, a + k);
      EXPECT_TRUE(is_strongly_connected(d));
    }
  }
  const auto d31 = gen_Dak(3, 1);
  int low = 99;
  for (Vertex v = 0; v < 6; ++v) low = std::min(low, degree(d31, v).total());
  EXPECT_EQ(low, 4);
  EXPECT_FALSE(oracle_hamiltonian(gen_Dak(4, 1)).hamiltonian);
  EXPECT_THROW(gen_Dak(4, 2), GraphError);
  EXPECT_THROW(gen_Dak(4, 0), GraphError);
}

TEST(Tak, TournamentShape) {
  for (auto [a, k] : {std::pair{3, 1}, std::pair{5, 2}, std::pair{6, 1}}) {
    const auto d = gen_Tak(a, k);
    EXPECT_EQ(d.arc_count(), a * a);
    for (Vertex x = 0; x < a; ++x) {
      for (Vertex y = a; y < 2 * a; ++y) EXPECT_NE(d.has_arc(x, y), d.has_arc(y, x));
    }
  }
  EXPECT_TRUE(is_strongly_connected(gen_Tak(3, 1)));
  EXPECT_FALSE(oracle_hamiltonian(gen_Tak(3, 1)).hamiltonian);
  EXPECT_THROW(gen_Tak(2, 1), GraphError);
}

TEST(RandomM, BudgetZeroIsComplete) {
  const auto s = gen_random_M(4, 3, 0);
  EXPECT_EQ(s.digraph, BipartiteDigraph::complete(4));
  EXPECT_TRUE(s.log.empty());
}

TEST(RandomM, EveryStepKeepsConditionM) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int a = 3 + seed % 4;
    const auto s = gen_random_M(a, seed, -1);
    EXPECT_TRUE(check_condition_M(s.digraph).satisfied);
    // Replay the log from the complete digraph.
    auto d = BipartiteDigraph::complete(a);
    std::set<std::pair<Vertex, Vertex>> tried;
    for (const auto& step : s.log) {
      EXPECT_TRUE(tried.insert({step.arc.from, step.arc.to}).second);
      const auto candidate = d.without_arc(step.arc);
      EXPECT_EQ(step.deleted, check_condition_M(candidate).satisfied);
      if (step.deleted) d = candidate;
    }
    EXPECT_EQ(d, s.digraph);
    EXPECT_EQ(static_cast<int>(s.log.size()), 2 * a * a);
    EXPECT_EQ(gen_random_M(a, seed, -1).digraph, s.digraph);
  }
}

TEST(RandomM, BudgetCountsDeletions) {
  const auto s = gen_random_M(5, 11, 6);
  int deleted = 0;
  for (const auto& step : s.log) deleted += step.deleted ? 1 : 0;
  EXPECT_EQ(deleted, 6);
  EXPECT_EQ(s.digraph.arc_count(), 50 - 6);
}

TEST(RandomM, SeedOneBudgetEightIsHamiltonian) {
  const auto d = gen_random_M(4, 1, 8).digraph;
  const auto r = find_hamiltonian_cycle(d);
  EXPECT_EQ(r.verdict, Verdict::kHamiltonian);
  EXPECT_EQ(r.source, VerdictSource::kConstructor);
  EXPECT_TRUE(oracle_hamiltonian(d).hamiltonian);
}

TEST(Enumeration, CountsAndOrder) {
  std::uint64_t last = 0;
  bool first = true;
  const auto count = for_each_digraph(2, [&](std::uint64_t mask, const BipartiteDigraph& d) {
    EXPECT_EQ(arc_mask(d), mask);
    if (!first) EXPECT_GT(mask, last);
    first = false;
    last = mask;
  });
  EXPECT_EQ(count, 256U);
  EXPECT_EQ(enumerate_all(2).size(), 256U);
  EXPECT_THROW(enumerate_all(4), GraphError);
}

TEST(Enumeration, MaskLayout) {
  const BipartiteDigraph d(3, {{1, 5}, {4, 2}});
  // x1 -> y2 is bit 1*3 + 2; y1 -> x2 is bit 9 + 1*3 + 2.
  EXPECT_EQ(arc_mask(d), (std::uint64_t{1} << 5) | (std::uint64_t{1} << 14));
  EXPECT_EQ(digraph_from_mask(3, arc_mask(d)), d);
}

TEST(Canonical, Examples) {
  const auto k3 = BipartiteDigraph::complete(3);
  EXPECT_EQ(canonical_form(k3), arc_mask(k3));
  const auto t = gen_Tak(3, 1);
  for (const auto& r : reference::all_relabelings(t)) EXPECT_EQ(canonical_form(r), canonical_form(t));
  EXPECT_NE(canonical_form(gen_Dak(3, 1)), canonical_form(t));
}

TEST(Canonical, InvariantAndInjectiveAtClassTwo) {
  // Brute-force classes: the set of masks of all relabelings.
  std::map<std::set<std::uint64_t>, std::uint64_t> classes;
  for (const auto& d : enumerate_all(2)) {
    std::set<std::uint64_t> orbit;
    for (const auto& r : reference::all_relabelings(d)) orbit.insert(arc_mask(r));
    const std::uint64_t c = canonical_form(d);
    EXPECT_EQ(c, *orbit.begin());
    for (const auto& r : reference::all_relabelings(d)) EXPECT_EQ(canonical_form(r), c);
    const auto [it, inserted] = classes.emplace(orbit, c);
    if (!inserted) EXPECT_EQ(it->second, c);
  }
  std::set<std::uint64_t> forms;
  for (const auto& [orbit, c] : classes) EXPECT_TRUE(forms.insert(c).second);
}

TEST(Fig1, UniqueNonHamiltonianClass) {
  const auto exceptions = half_degree_exceptions();
  ASSERT_EQ(exceptions.size(), 1U);
  const auto& f = fig1_digraph();
  EXPECT_EQ(f, exceptions.front());
  EXPECT_FALSE(oracle_hamiltonian(f).hamiltonian);
  EXPECT_FALSE(reference::brute_hamiltonian(f));
  for (Vertex v = 0; v < f.order(); ++v) {
    EXPECT_GE(degree(f, v).out, 2);
    EXPECT_GE(degree(f, v).in, 2);
  }
}

TEST(Families, NamesRoundTrip) {
  for (auto f : {Family::kDprime, Family::kDak, Family::kTak, Family::kComplete, Family::kFig1,
                 Family::kRandom}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_family("petersen"), GraphError);
  EXPECT_EQ(generate({Family::kComplete, 3}), BipartiteDigraph::complete(3));
  EXPECT_EQ(generate({Family::kTak, 5, 2}), gen_Tak(5, 2));
  EXPECT_EQ(generate({Family::kRandom, 4, 0, 1, 8}), gen_random_M(4, 1, 8).digraph);
}
