#include <gtest/gtest.h>

#include "bipham/generators.hpp"
#include "bipham/hamilton.hpp"
#include "bipham/oracle.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace bipham;

namespace {

Matching identity(int a) {
  Matching m{MatchDirection::kXToY, std::vector<Vertex>(2 * a)};
  for (int i = 0; i < a; ++i) {
    m.mate[i] = a + i;
    m.mate[a + i] = i;
  }
  return m;
}

std::vector<BipartiteDigraph> m_instances(int count, int a_min, int a_max, std::uint64_t base) {
  std::vector<BipartiteDigraph> out;
  for (int i = 0; i < count; ++i) {
    const int a = a_min + i % (a_max - a_min + 1);
    out.push_back(gen_random_M(a, base + static_cast<std::uint64_t>(i), -1).digraph);
  }
  return out;
}

}  // namespace

TEST(Decompose, CompleteDigraphsGiveOneCycle) {
  for (int a : {2, 3, 5}) {
    const auto d = BipartiteDigraph::complete(a);
    const auto dec = decompose(d);
    ASSERT_EQ(dec.stages.size(), 1U);
    EXPECT_EQ(dec.stages[0].cycle.length(), 2 * a);
    EXPECT_TRUE(dec.leftover.empty());
    EXPECT_TRUE(dec.hamiltonian(d));
    EXPECT_TRUE(validate_decomposition(d, dec, true).empty());
  }
}

TEST(Decompose, ThrowsWithoutMatching) {
  const auto d = BipartiteDigraph::complete(3).without_arc({0, 3}).without_arc({0, 4}).without_arc({0, 5});
  try {
    decompose(d);
    FAIL();
  } catch (const NoCompleteMatching& e) {
    EXPECT_EQ(e.violator().s, VertexSet::single(0));
  }
}

TEST(Decompose, RandomConditionMInstancesValidate) {
  for (const auto& d : m_instances(40, 4, 6, 500)) {
    for (auto strategy : {DecomposeStrategy::kAnyMatching, DecomposeStrategy::kVertexSetDp,
                          DecomposeStrategy::kFixedMatching, DecomposeStrategy::kHeuristic}) {
      if (!std::holds_alternative<Matching>(find_complete_matching(d))) continue;
      const auto dec = decompose(d, {strategy});
      const bool maximal = strategy == DecomposeStrategy::kAnyMatching ||
                           strategy == DecomposeStrategy::kVertexSetDp;
      const auto problems = validate_decomposition(d, dec, maximal);
      EXPECT_TRUE(problems.empty()) << problems.front();
      EXPECT_TRUE(dec.complete());
    }
  }
}

TEST(Decompose, StagesOfNonMInstancesStillValidate) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto d = gen_random_arcs(3 + seed % 4, seed, 0.55);
    if (!std::holds_alternative<Matching>(find_complete_matching(d))) continue;
    const auto dec = decompose(d);
    for (const auto& problem : validate_decomposition(d, dec, true)) {
      // Non-(M) inputs may stop early or have short later cycles; the
      // structural checks must hold regardless.
      EXPECT_TRUE(problem.find("below a_j") != std::string::npos ||
                  problem.find("leftover has") != std::string::npos ||
                  problem.find("exceeds c_") != std::string::npos)
          << problem;
    }
  }
}

TEST(Decompose, FixedMatchingRemaindersKeepConditionA) {
  for (const auto& d : m_instances(150, 4, 8, 900)) {
    if (!std::holds_alternative<Matching>(find_complete_matching(d))) continue;
    const auto dec = decompose(d, {DecomposeStrategy::kFixedMatching});
    EXPECT_FALSE(check_stage_condition_A(d, dec));
    EXPECT_TRUE(validate_decomposition(d, dec).empty());
  }
}

// The heredity argument, without (M): when every stage cycle is a longest
// compatible cycle of its remainder, a quadruple of D' joined by compatible
// paths loses at most 3 |C_j| degree to each removed cycle C_j.
TEST(Decompose, RemovedCyclesCostAtMostThreeTheirLength) {
  long exercised = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int a = 4 + static_cast<int>(seed % 3);
    const auto d = gen_random_arcs(a, seed, 0.45 + 0.05 * (seed % 5));
    if (!std::holds_alternative<Matching>(find_complete_matching(d))) continue;
    const auto dec = decompose(d, {DecomposeStrategy::kFixedMatching});
    int removed = 0;
    for (const Stage& stage : dec.stages) {
      removed += stage.cycle.length();
      VertexSet rest = stage.remainder;
      for (Vertex v : stage.cycle.vertices) rest.erase(v);
      if (rest.size() < 4) continue;
      const Matching& m = stage.matching;
      auto sum = [&](std::initializer_list<Vertex> vs, VertexSet within) {
        int total = 0;
        for (Vertex v : vs) total += degree(d, v, within).total();
        return total;
      };
      const auto xs = (rest & d.x_class()).members();
      const auto ys = (rest & d.y_class()).members();
      for (Vertex x1 : xs) {
        for (Vertex y1 : ys) {
          if (!reference::brute_compatible_path(d, m, x1, y1, rest)) continue;
          for (Vertex x2 : xs) {
            for (Vertex y2 : ys) {
              if (x2 == x1 || y2 == y1) continue;
              if (!reference::brute_compatible_path(d, m, x2, y2, rest)) continue;
              ++exercised;
              EXPECT_GE(sum({x1, y1, x2, y2}, rest),
                        sum({x1, y1, x2, y2}, d.vertices()) - 3 * removed)
                  << "seed " << seed;
            }
          }
        }
      }
    }
  }
  RecordProperty("quadruples", static_cast<int>(exercised));
  EXPECT_GT(exercised, 100);
}

TEST(Bridge, TrivialBridgeThroughLeftoverPair) {
  // C1 = (x0 y0 x1 y1), leftover {x2, y2}; y0 -> x2 -> y2 -> x1 bridges it.
  const BipartiteDigraph d(3, {{0, 3}, {1, 4}, {2, 5}, {3, 1}, {4, 0}, {3, 2}, {5, 1}});
  const Matching m = identity(3);
  Decomposition dec;
  dec.matching = m;
  dec.leftover = VertexSet::single(2) | VertexSet::single(5);
  dec.stages.push_back(Stage{d.vertices(), m, make_cycle_certificate(m, {0, 3, 1, 4})});
  ASSERT_TRUE(validate_decomposition(d, dec).empty());

  const auto outcome = find_bridge_path(d, dec);
  ASSERT_TRUE(std::holds_alternative<MergePlan>(outcome));
  const auto& plan = std::get<MergePlan>(outcome);
  EXPECT_EQ(plan.target, 0);
  EXPECT_EQ(plan.kind, SpliceKind::kChord);
  EXPECT_EQ(plan.path.vertices, (std::vector<Vertex>{3, 2, 5, 1}));
  EXPECT_TRUE(plan.covers_later);

  const auto next = splice(d, dec, plan);
  EXPECT_TRUE(next.hamiltonian(d));
  EXPECT_TRUE(next.leftover.empty());
  EXPECT_EQ(next.stages[0].cycle.vertices, (std::vector<Vertex>{0, 3, 2, 5, 1, 4}));
  EXPECT_TRUE(validate_decomposition(d, next).empty());
}

TEST(Bridge, MissingArcGivesTerminalReport) {
  // As above without y2 -> x1: nothing leaves the leftover.
  const BipartiteDigraph d(3, {{0, 3}, {1, 4}, {2, 5}, {3, 1}, {4, 0}, {3, 2}});
  const Matching m = identity(3);
  Decomposition dec;
  dec.matching = m;
  dec.leftover = VertexSet::single(2) | VertexSet::single(5);
  dec.stages.push_back(Stage{d.vertices(), m, make_cycle_certificate(m, {0, 3, 1, 4})});
  const auto outcome = find_bridge_path(d, dec);
  ASSERT_TRUE(std::holds_alternative<TerminalReport>(outcome));
  const auto& report = std::get<TerminalReport>(outcome);
  EXPECT_NE(std::find(report.missing.begin(), report.missing.end(), MissingLink{1, 0}),
            report.missing.end());
  EXPECT_NE(report.describe(dec).find("no arc from Y(Vr) to X(C1)"), std::string::npos)
      << report.describe(dec);
}

TEST(Bridge, DprimeReportsTheMissingLink) {
  const auto result = find_hamiltonian_cycle(gen_Dprime(4));
  ASSERT_TRUE(result.terminal);
  ASSERT_TRUE(result.final);
  EXPECT_FALSE(result.terminal->missing.empty());
  for (const auto& link : result.terminal->missing) {
    // Recompute: no arc from the Y side of `from` to the X side of `to`.
    const auto side = [&](int c) {
      VertexSet s;
      if (c < static_cast<int>(result.final->stages.size())) {
        for (Vertex v : result.final->stages[c].cycle.vertices) s.insert(v);
      } else {
        s = result.final->leftover;
      }
      return s;
    };
    const auto d = gen_Dprime(4);
    const VertexSet ys = side(link.from) & d.y_class();
    const VertexSet xs = side(link.to) & d.x_class();
    EXPECT_TRUE((neighborhood(d, ys, Direction::kOut) & xs).empty());
  }
  EXPECT_NE(result.terminal->describe(*result.final).find("no arc from Y(C2) to X(C1)"),
            std::string::npos);
}

TEST(Splice, GrowsTheTargetUntilHamiltonian) {
  int spliced = 0;
  for (const auto& d : m_instances(120, 4, 8, 3000)) {
    if (!std::holds_alternative<Matching>(find_complete_matching(d))) continue;
    for (auto strategy : {DecomposeStrategy::kFixedMatching, DecomposeStrategy::kHeuristic}) {
      const DecomposeOptions options{strategy};
      Decomposition dec = decompose(d, options);
      int rounds = 0;
      while (!dec.hamiltonian(d) && rounds < d.class_size() * d.class_size()) {
        const auto outcome = find_bridge_path(d, dec);
        ASSERT_TRUE(std::holds_alternative<MergePlan>(outcome))
            << std::get<TerminalReport>(outcome).describe(dec);
        const auto& plan = std::get<MergePlan>(outcome);
        const int before = dec.stages[plan.target].cycle.length();
        EXPECT_GT(plan.result.length(), before);
        Decomposition next = splice(d, dec, plan, options);
        EXPECT_EQ(next.stages[plan.target].cycle, plan.result);
        for (int j = 0; j < plan.target; ++j) EXPECT_EQ(next.stages[j].cycle, dec.stages[j].cycle);
        EXPECT_TRUE(validate_decomposition(d, next).empty() || strategy == DecomposeStrategy::kHeuristic);
        dec = std::move(next);
        ++rounds;
        ++spliced;
      }
      EXPECT_TRUE(dec.hamiltonian(d));
      EXPECT_TRUE(verify_cycle(d, dec.stages[0].cycle.vertices));
    }
  }
  EXPECT_GT(spliced, 0);
}

TEST(Splice, RejectsForeignPlan) {
  const auto d = BipartiteDigraph::complete(3);
  const auto dec = decompose(d);
  MergePlan plan;
  plan.target = 3;
  EXPECT_THROW(splice(d, dec, plan), GraphError);
}

TEST(Oracle, AgreesWithPermutationSearch) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = gen_random_arcs(2 + seed % 3, seed, 0.4 + 0.1 * (seed % 4));
    const auto r = oracle_hamiltonian(d);
    EXPECT_EQ(r.hamiltonian, reference::brute_hamiltonian(d)) << "seed " << seed;
    if (r.hamiltonian) {
      EXPECT_TRUE(verify_cycle(d, r.cycle));
      EXPECT_EQ(r.cycle.front(), 0);
    } else {
      EXPECT_TRUE(r.cycle.empty());
    }
  }
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(oracle_hamiltonian(BipartiteDigraph::complete(2)).hamiltonian);
  EXPECT_FALSE(oracle_hamiltonian(gen_Dprime(2)).hamiltonian);
  EXPECT_FALSE(oracle_hamiltonian(gen_Dak(3, 1)).hamiltonian);
  EXPECT_THROW(oracle_hamiltonian(BipartiteDigraph::complete(13)), GraphError);
}

TEST(VerifyCycle, Examples) {
  const auto k3 = BipartiteDigraph::complete(3);
  EXPECT_TRUE(verify_cycle(k3, oracle_hamiltonian(k3).cycle));
  EXPECT_FALSE(verify_cycle(k3, std::vector<Vertex>{0, 3, 1, 3, 2, 5}));
  EXPECT_FALSE(verify_cycle(k3, std::vector<Vertex>{0, 3, 1, 4, 2}));
  const auto missing = k3.without_arc({4, 2});
  EXPECT_FALSE(verify_cycle(missing, std::vector<Vertex>{0, 3, 1, 4, 2, 5}));
  EXPECT_TRUE(verify_cycle(k3, std::vector<Vertex>{0, 3, 1, 4, 2, 5}));
  EXPECT_FALSE(verify_cycle(k3, std::vector<Vertex>{}));
}

TEST(LongestMatchableCycle, AgreesWithBestOverAllMatchings) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto d = gen_random_arcs(3 + seed % 2, seed, 0.6);
    int best = 0;
    for (const auto& m : all_complete_matchings(d, d.vertices())) {
      best = std::max(best, reference::brute_longest_compatible_cycle(d, m, d.vertices()));
    }
    const auto found = longest_matchable_cycle(d, d.vertices());
    EXPECT_EQ(found.length, best) << "seed " << seed;
  }
}

TEST(Driver, Examples) {
  const auto k2 = find_hamiltonian_cycle(BipartiteDigraph::complete(2));
  EXPECT_EQ(k2.verdict, Verdict::kHamiltonian);
  EXPECT_EQ(k2.source, VerdictSource::kConstructor);
  EXPECT_EQ(k2.cycle.size(), 4U);
  EXPECT_TRUE(k2.condition_M);

  for (const auto& d : {gen_Dprime(4), gen_Tak(4, 1), gen_Dak(3, 1), gen_Tak(3, 1)}) {
    const auto r = find_hamiltonian_cycle(d);
    EXPECT_EQ(r.verdict, Verdict::kNonHamiltonian);
    EXPECT_EQ(r.source, VerdictSource::kOracle);
    EXPECT_TRUE(r.cycle.empty());
  }
}

TEST(Driver, MirrorsWhenOnlyYToXMatches) {
  // x0 has no out-arcs, so X->Y fails; Y->X still matches.
  auto d = BipartiteDigraph::complete(3);
  for (Vertex y = 3; y < 6; ++y) d = d.without_arc({0, y});
  const auto r = find_hamiltonian_cycle(d);
  EXPECT_TRUE(r.mirrored);
  EXPECT_EQ(r.verdict, Verdict::kNonHamiltonian);
  EXPECT_EQ(r.source, VerdictSource::kOracle);

  // Mirror of a hamiltonian digraph without an X->Y matching is impossible,
  // so check the mirrored path on a hamiltonian instance by construction.
  const auto mirrored = find_hamiltonian_cycle(mirror(gen_random_M(4, 7, -1).digraph));
  EXPECT_EQ(mirrored.verdict, Verdict::kHamiltonian);
}

TEST(Driver, HallCertificateWhenBothDirectionsFail) {
  auto d = BipartiteDigraph::complete(3);
  for (Vertex y = 3; y < 6; ++y) d = d.without_arc({0, y});
  for (Vertex x = 0; x < 3; ++x) d = d.without_arc({3, x});
  const auto r = find_hamiltonian_cycle(d);
  EXPECT_EQ(r.verdict, Verdict::kNonHamiltonian);
  EXPECT_EQ(r.source, VerdictSource::kHallCertificate);
  ASSERT_TRUE(r.violator);
  EXPECT_TRUE(is_valid_violator(d, *r.violator));
}

TEST(Driver, UnknownAboveTheOracleCap) {
  HamiltonOptions options;
  options.oracle_cap = 0;
  const auto r = find_hamiltonian_cycle(gen_Tak(3, 1), options);
  EXPECT_EQ(r.verdict, Verdict::kUnknown);
  EXPECT_EQ(r.source, VerdictSource::kNone);
}

TEST(Driver, HeuristicModeCertifiesConditionMInstances) {
  HamiltonOptions options;
  options.mode = SearchMode::kHeuristic;
  for (const auto& d : m_instances(60, 4, 9, 7000)) {
    const auto r = find_hamiltonian_cycle(d, options);
    EXPECT_EQ(r.verdict, Verdict::kHamiltonian);
    EXPECT_EQ(r.source, VerdictSource::kConstructor);
    EXPECT_TRUE(verify_cycle(d, r.cycle));
  }
}

TEST(Driver, CertificateJson) {
  const auto d = BipartiteDigraph::complete(3);
  const auto r = find_hamiltonian_cycle(d);
  const auto doc = nlohmann::json::parse(certificate_json(d, r));
  EXPECT_EQ(doc["verdict"], "hamiltonian");
  EXPECT_EQ(doc["source"], "constructor");
  EXPECT_EQ(doc["cycle"].size(), 6U);
  EXPECT_EQ(doc["cycle"][0], "x0");
  EXPECT_EQ(doc["matching"].size(), 3U);
  ASSERT_EQ(doc["stages"].size(), 1U);
  EXPECT_EQ(doc["stages"][0]["cycle_len"], 6);
  EXPECT_EQ(doc["stages"][0]["remainder"], 6);
}

TEST(Bridge, ReportWithoutStagesSaysSo) {
  const auto result = find_hamiltonian_cycle(gen_Dprime(2));
  ASSERT_TRUE(result.terminal);
  EXPECT_TRUE(result.final->stages.empty());
  EXPECT_EQ(result.terminal->describe(*result.final), "no compatible cycle of length at least 4");
}
