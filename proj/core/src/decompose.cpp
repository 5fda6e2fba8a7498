#include <algorithm>
#include <numeric>

#include "bipham/hamilton.hpp"
#include "bipham/oracle.hpp"

namespace bipham {

namespace {

std::string set_text(int a, VertexSet s) {
  std::string text = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    text += (first ? "" : ", ") + label(a, v);
    first = false;
  });
  return text + "}";
}

struct Choice {
  CycleCertificate cycle;
  Matching matching;
};

bool better(const CycleCertificate& candidate, const CycleCertificate& best) {
  if (candidate.length() != best.length()) return candidate.length() > best.length();
  return lex_less(candidate, best);
}

std::optional<Choice> exact_for(const BipartiteDigraph& d, const Matching& m, VertexSet r) {
  auto cycle = longest_compatible_cycle(d, m, SearchMode::kExact, r);
  if (!cycle) return std::nullopt;
  return Choice{std::move(*cycle), m};
}

std::optional<Choice> rematch_pair(const BipartiteDigraph& d, VertexSet r) {
  for (const Matching& m : all_complete_matchings(d, r)) {
    if (auto choice = exact_for(d, m, r)) return choice;
  }
  return std::nullopt;
}

std::optional<Choice> any_matching(const BipartiteDigraph& d, VertexSet r, const Matching& start,
                                   const DecomposeOptions& options) {
  std::optional<Choice> best;
  auto offer = [&](std::optional<Choice> candidate) {
    if (candidate && (!best || better(candidate->cycle, best->cycle))) {
      best = std::move(candidate);
      return true;
    }
    return false;
  };
  if (r.size() / 2 <= options.exhaustive_max_class) {
    for (const Matching& m : all_complete_matchings(d, r)) offer(exact_for(d, m, r));
    return best;
  }
  // Swap two pairs whenever both cross arcs exist; keep strict improvements.
  Matching current = start;
  offer(exact_for(d, current, r));
  const std::vector<Vertex> xs = (r & d.x_class()).members();
  for (bool improved = true; improved && (!best || best->cycle.length() < r.size());) {
    improved = false;
    for (std::size_t i = 0; i < xs.size() && !improved; ++i) {
      for (std::size_t j = i + 1; j < xs.size() && !improved; ++j) {
        const Vertex xi = xs[i];
        const Vertex xj = xs[j];
        const Vertex yi = current.partner(xi);
        const Vertex yj = current.partner(xj);
        if (!d.has_arc(xi, yj) || !d.has_arc(xj, yi)) continue;
        Matching swapped = current;
        swapped.mate[xi] = yj;
        swapped.mate[yj] = xi;
        swapped.mate[xj] = yi;
        swapped.mate[yi] = xj;
        auto candidate = exact_for(d, swapped, r);
        if (candidate && (!best || candidate->cycle.length() > best->cycle.length())) {
          best = std::move(candidate);
          current = swapped;
          improved = true;
        }
      }
    }
  }
  return best;
}

std::optional<Choice> vertex_set_dp(const BipartiteDigraph& d, VertexSet r) {
  const MatchableCycle found = longest_matchable_cycle(d, r);
  if (found.length == 0) return std::nullopt;
  const auto rest = find_complete_matching(d, r - found.vertices);
  Matching m{MatchDirection::kXToY, std::get<Matching>(rest).mate};
  for (std::size_t i = 0; i < found.cycle.size(); ++i) {
    const Vertex v = found.cycle[i];
    const Vertex w = found.cycle[(i + 1) % found.cycle.size()];
    if (d.is_x(v)) {
      m.mate[v] = w;
      m.mate[w] = v;
    }
  }
  return Choice{make_cycle_certificate(m, found.cycle), m};
}

std::optional<Choice> heuristic_for(const BipartiteDigraph& d, const Matching& m, VertexSet r) {
  auto cycle = longest_compatible_cycle(d, m, SearchMode::kHeuristic, r);
  if (!cycle) return std::nullopt;
  return Choice{std::move(*cycle), m};
}

std::optional<Choice> choose(const BipartiteDigraph& d, VertexSet r, const Matching& current,
                             const DecomposeOptions& options) {
  switch (options.strategy) {
    case DecomposeStrategy::kAnyMatching:
      return any_matching(d, r, current, options);
    case DecomposeStrategy::kVertexSetDp:
      return vertex_set_dp(d, r);
    case DecomposeStrategy::kFixedMatching:
      if (auto choice = exact_for(d, current, r)) return choice;
      break;
    case DecomposeStrategy::kHeuristic:
      if (auto choice = heuristic_for(d, current, r)) return choice;
      break;
  }
  // A 4-vertex remainder may switch matchings to close its 4-cycle.
  if (r.size() == 4) return rematch_pair(d, r);
  return std::nullopt;
}

void copy_pairs(Matching& into, const Matching& from, VertexSet on) {
  on.for_each([&](Vertex v) { into.mate[v] = from.mate[v]; });
}

}  // namespace

NoCompleteMatching::NoCompleteMatching(VertexSet within, HallViolator violator)
    : GraphError("no complete X->Y matching: |N+(S)| = " + std::to_string(violator.n.size()) +
                 " < |S| = " + std::to_string(violator.s.size())),
      within_(within),
      violator_(violator) {}

Decomposition decompose(const BipartiteDigraph& d, const DecomposeOptions& options) {
  return decompose_within(d, d.vertices(), options);
}

Decomposition decompose_within(const BipartiteDigraph& d, VertexSet within,
                               const DecomposeOptions& options,
                               const std::optional<Matching>& start) {
  within &= d.vertices();
  Matching current;
  if (start) {
    if (start->direction != MatchDirection::kXToY ||
        !is_valid_matching(d, restrict_matching(*start, within), within)) {
      throw GraphError("start matching is not a complete X->Y matching of " +
                       set_text(d.class_size(), within));
    }
    current = restrict_matching(*start, within);
  } else {
    auto outcome = find_complete_matching(d, within);
    if (auto* violator = std::get_if<HallViolator>(&outcome)) {
      throw NoCompleteMatching(within, *violator);
    }
    current = std::get<Matching>(std::move(outcome));
  }

  Decomposition dec;
  dec.matching = Matching{MatchDirection::kXToY, std::vector<Vertex>(d.order(), -1)};
  VertexSet r = within;
  while (r.size() > 2) {
    auto choice = choose(d, r, current, options);
    if (!choice) break;
    const VertexSet on_cycle(std::accumulate(
        choice->cycle.vertices.begin(), choice->cycle.vertices.end(), std::uint64_t{0},
        [](std::uint64_t acc, Vertex v) { return acc | (std::uint64_t{1} << v); }));
    copy_pairs(dec.matching, choice->matching, on_cycle);
    dec.stages.push_back(Stage{r, restrict_matching(choice->matching, r), choice->cycle});
    r -= on_cycle;
    current = restrict_matching(choice->matching, r);
  }
  dec.leftover = r;
  copy_pairs(dec.matching, current, r);
  return dec;
}

std::vector<std::string> validate_decomposition(const BipartiteDigraph& d,
                                                const Decomposition& dec,
                                                bool check_maximality) {
  std::vector<std::string> problems;
  auto report = [&](int j, const std::string& what) {
    problems.push_back("stage " + std::to_string(j + 1) + ": " + what);
  };
  VertexSet r = d.vertices();
  for (std::size_t j = 0; j < dec.stages.size(); ++j) {
    const Stage& stage = dec.stages[j];
    const int jj = static_cast<int>(j);
    if (stage.remainder != r) report(jj, "remainder does not match the earlier cycles");
    if (!is_valid_matching(d, stage.matching, r) ||
        stage.matching.direction != MatchDirection::kXToY ||
        restrict_matching(stage.matching, r) != stage.matching) {
      report(jj, "stage matching is not a complete X->Y matching of the remainder");
    }
    if (!validate_cycle(d, stage.matching, stage.cycle)) {
      report(jj, "cycle is not compatible with the stage matching");
    }
    if (!validate_cycle(d, dec.matching, stage.cycle)) {
      report(jj, "cycle is not compatible with the assembled matching");
    }
    VertexSet on_cycle;
    for (Vertex v : stage.cycle.vertices) on_cycle.insert(v);
    if (!on_cycle.is_subset_of(r)) report(jj, "cycle leaves the remainder");
    if (stage.cycle.length() < 4) report(jj, "cycle shorter than 4");
    if (stage.cycle.length() < stage.a()) {
      report(jj, "c_j = " + std::to_string(stage.c()) + " below a_j / 2 = " +
                     std::to_string(stage.a()) + " / 2");
    }
    if (j > 0 && stage.c() > dec.stages[j - 1].c()) {
      report(jj, "c_j = " + std::to_string(stage.c()) + " exceeds c_{j-1} = " +
                     std::to_string(dec.stages[j - 1].c()));
    }
    if (check_maximality && r.size() <= kMatchableCycleMaxOrder) {
      const int longest = longest_matchable_cycle(d, r).length;
      if (longest != stage.cycle.length()) {
        report(jj, "cycle length " + std::to_string(stage.cycle.length()) +
                       " but the longest matchable cycle has length " + std::to_string(longest));
      }
    }
    r -= on_cycle;
  }
  if (dec.leftover != r) problems.push_back("leftover does not match the remaining vertices");
  if (dec.leftover.size() != 0 && dec.leftover.size() != 2) {
    problems.push_back("leftover has " + std::to_string(dec.leftover.size()) + " vertices");
  }
  if (!is_complete_matching(d, dec.matching) || dec.matching.direction != MatchDirection::kXToY) {
    problems.push_back("assembled matching is not a complete X->Y matching");
  }
  return problems;
}

std::optional<StageConditionFailure> check_stage_condition_A(const BipartiteDigraph& d,
                                                             const Decomposition& dec) {
  for (std::size_t j = 0; j < dec.stages.size(); ++j) {
    const Stage& stage = dec.stages[j];
    VertexSet next = stage.remainder;
    for (Vertex v : stage.cycle.vertices) next.erase(v);
    if (next.size() < 4) continue;
    ConditionReport report = check_condition_A(d, stage.matching, next);
    if (!report.satisfied) return StageConditionFailure{static_cast<int>(j), std::move(report)};
  }
  return std::nullopt;
}

}  // namespace bipham
