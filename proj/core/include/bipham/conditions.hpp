#pragma once

#include <optional>
#include <vector>

#include "bipham/digraph.hpp"
#include "bipham/matching.hpp"

namespace bipham {

// The vertices behind a failed bound, with the value they reach and the
// value required.
struct Witness {
  std::vector<Vertex> vertices;
  int achieved = 0;
  int required = 0;
  bool operator==(const Witness&) const = default;
};

struct ConditionReport {
  bool satisfied = true;
  std::optional<Witness> witness;  // present iff !satisfied
};

// Every pair of distinct, mutually non-adjacent vertices u < v has
// d(u) + d(v) >= 3a + 1. Same-class pairs are always non-adjacent.
// Witness: the lexicographically first failing pair.
ConditionReport check_condition_M(const BipartiteDigraph& d);

// The four-vertex bound d(x') + d(y') + d(x'') + d(y'') >= 6a' + 2 over
// pairwise distinct x', x'', y', y'' with M-compatible paths x' -> y' and
// x'' -> y'', all inside `within` (a' = |within| / 2, degrees relative to
// `within`). Throws GraphError unless M is a complete X->Y matching of
// `within`. Witness order: (x', y', x'', y''), lexicographically first.
ConditionReport check_condition_A(const BipartiteDigraph& d, const Matching& m,
                                  VertexSet within);
inline ConditionReport check_condition_A(const BipartiteDigraph& d, const Matching& m) {
  return check_condition_A(d, m, d.vertices());
}

// delta(D) >= ceil((3a + 1) / 2). Witness: the smallest-id vertex of
// minimum degree.
ConditionReport check_min_degree(const BipartiteDigraph& d);

// delta+(D) and delta-(D) both >= ceil((a + 2) / 2). Witness: the
// smallest-id vertex with the lowest half-degree.
ConditionReport check_half_degrees(const BipartiteDigraph& d);

// d+(u) + d-(v) >= a + 2 whenever u, v lie in opposite classes and uv is
// not an arc. Witness: the first failing ordered pair (u, v).
ConditionReport check_woodall_bipartite(const BipartiteDigraph& d);

int condition_M_bound(int a);
int min_degree_bound(int a);
int half_degree_bound(int a);

}  // namespace bipham
