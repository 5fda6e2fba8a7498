#include "bipham/conditions.hpp"

#include <algorithm>

#include "bipham/compat.hpp"

namespace bipham {

namespace {

ConditionReport fail(std::vector<Vertex> vertices, int achieved, int required) {
  return ConditionReport{false, Witness{std::move(vertices), achieved, required}};
}

}  // namespace

int condition_M_bound(int a) { return 3 * a + 1; }
int min_degree_bound(int a) { return (3 * a + 2) / 2; }
int half_degree_bound(int a) { return (a + 3) / 2; }

ConditionReport check_condition_M(const BipartiteDigraph& d) {
  const int required = condition_M_bound(d.class_size());
  std::vector<int> total(d.order());
  for (Vertex v = 0; v < d.order(); ++v) total[v] = degree(d, v).total();
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      if (d.adjacent(u, v)) continue;
      if (total[u] + total[v] < required) return fail({u, v}, total[u] + total[v], required);
    }
  }
  return {};
}

ConditionReport check_condition_A(const BipartiteDigraph& d, const Matching& m,
                                  VertexSet within) {
  within &= d.vertices();
  const VertexSet xs = within & d.x_class();
  const VertexSet ys = within & d.y_class();
  if (xs.size() != ys.size() || m.direction != MatchDirection::kXToY ||
      !is_valid_matching(d, restrict_matching(m, within), within)) {
    throw GraphError("condition (A) needs a complete X->Y matching of the vertex set");
  }
  const int required = 6 * xs.size() + 2;
  const std::vector<VertexSet> targets = compatible_targets(d, m, within);
  std::vector<int> total(d.order(), 0);
  within.for_each([&](Vertex v) { total[v] = degree(d, v, within).total(); });

  // Smallest achievable completion for a fixed (x', y'), used to skip
  // prefixes that cannot fail.
  int min_x = 0;
  int min_y = 0;
  {
    std::vector<int> tx, ty;
    xs.for_each([&](Vertex v) { tx.push_back(total[v]); });
    ys.for_each([&](Vertex v) { ty.push_back(total[v]); });
    min_x = tx.empty() ? 0 : *std::min_element(tx.begin(), tx.end());
    min_y = ty.empty() ? 0 : *std::min_element(ty.begin(), ty.end());
  }
  for (Vertex x1 : xs.members()) {
    for (Vertex y1 : targets[x1].members()) {
      if (total[x1] + total[y1] + min_x + min_y >= required) continue;
      for (Vertex x2 : xs.members()) {
        if (x2 == x1) continue;
        for (Vertex y2 : targets[x2].members()) {
          if (y2 == y1) continue;
          const int sum = total[x1] + total[y1] + total[x2] + total[y2];
          if (sum < required) return fail({x1, y1, x2, y2}, sum, required);
        }
      }
    }
  }
  return {};
}

ConditionReport check_min_degree(const BipartiteDigraph& d) {
  const int required = min_degree_bound(d.class_size());
  Vertex worst = 0;
  for (Vertex v = 1; v < d.order(); ++v) {
    if (degree(d, v).total() < degree(d, worst).total()) worst = v;
  }
  const int achieved = degree(d, worst).total();
  if (achieved >= required) return {};
  return fail({worst}, achieved, required);
}

ConditionReport check_half_degrees(const BipartiteDigraph& d) {
  const int required = half_degree_bound(d.class_size());
  auto half = [&](Vertex v) {
    const DegreeProfile p = degree(d, v);
    return std::min(p.out, p.in);
  };
  Vertex worst = 0;
  for (Vertex v = 1; v < d.order(); ++v) {
    if (half(v) < half(worst)) worst = v;
  }
  if (half(worst) >= required) return {};
  return fail({worst}, half(worst), required);
}

ConditionReport check_woodall_bipartite(const BipartiteDigraph& d) {
  const int required = d.class_size() + 2;
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = 0; v < d.order(); ++v) {
      if (d.is_x(u) == d.is_x(v) || d.has_arc(u, v)) continue;
      const int sum = degree(d, u).out + degree(d, v).in;
      if (sum < required) return fail({u, v}, sum, required);
    }
  }
  return {};
}

}  // namespace bipham
