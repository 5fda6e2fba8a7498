#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bipham/digraph.hpp"

namespace bipham {

// Largest order the subset DP accepts (2^23 states of 32-bit end masks).
inline constexpr int kOracleMaxOrder = 24;

struct OracleResult {
  bool hamiltonian = false;
  std::vector<Vertex> cycle;  // starts at vertex 0; empty when not hamiltonian
};

// Exact hamiltonicity by dynamic programming over (visited set, last vertex)
// from vertex 0. Shares no code with the constructor. Throws GraphError when
// the order exceeds kOracleMaxOrder.
OracleResult oracle_hamiltonian(const BipartiteDigraph& d);

// True iff `cycle` visits every vertex exactly once and each step, including
// the closing one, is an arc.
bool verify_cycle(const BipartiteDigraph& d, std::span<const Vertex> cycle);

inline constexpr int kMatchableCycleMaxOrder = 22;

struct MatchableCycle {
  int length = 0;  // 0 when no cycle qualifies
  VertexSet vertices;
  std::vector<Vertex> cycle;  // starts at its smallest vertex
};

// Longest directed cycle C (length >= 4) inside `within` such that
// within - V(C) still has a complete X->Y matching, i.e. the longest cycle
// compatible with some complete matching of `within`. Subset DP; throws
// above kMatchableCycleMaxOrder vertices.
MatchableCycle longest_matchable_cycle(const BipartiteDigraph& d, VertexSet within);

}  // namespace bipham
