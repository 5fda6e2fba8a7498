#include "bipham/oracle.hpp"

#include <bit>
#include <variant>

#include "bipham/matching.hpp"

namespace bipham {

OracleResult oracle_hamiltonian(const BipartiteDigraph& d) {
  const int n = d.order();
  if (n > kOracleMaxOrder) {
    throw GraphError("oracle supports at most " + std::to_string(kOracleMaxOrder) +
                     " vertices, got " + std::to_string(n));
  }
  // Paths start at vertex 0; index a mask containing 0 by mask >> 1.
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> ends(std::size_t{1} << (n - 1), 0);
  ends[0] = 1;
  for (std::uint32_t rest = 0; rest < ends.size(); ++rest) {
    const std::uint32_t e = ends[rest];
    if (e == 0) continue;
    const std::uint32_t mask = (rest << 1) | 1U;
    for (std::uint32_t bits = e; bits != 0; bits &= bits - 1) {
      const int last = std::countr_zero(bits);
      std::uint32_t next = static_cast<std::uint32_t>(d.out_neighbors(last).bits()) & ~mask;
      for (; next != 0; next &= next - 1) {
        const int w = std::countr_zero(next);
        ends[(mask | (std::uint32_t{1} << w)) >> 1] |= std::uint32_t{1} << w;
      }
    }
  }
  const std::uint32_t closing = ends[full >> 1] & static_cast<std::uint32_t>(d.in_neighbors(0).bits());
  if (closing == 0) return {};

  OracleResult result{true, {}};
  std::vector<Vertex> reversed;
  std::uint32_t mask = full;
  int last = std::countr_zero(closing);
  while (last != 0) {
    reversed.push_back(last);
    mask &= ~(std::uint32_t{1} << last);
    const std::uint32_t before = ends[mask >> 1] & static_cast<std::uint32_t>(d.in_neighbors(last).bits());
    last = std::countr_zero(before);
  }
  result.cycle.push_back(0);
  result.cycle.insert(result.cycle.end(), reversed.rbegin(), reversed.rend());
  return result;
}

bool verify_cycle(const BipartiteDigraph& d, std::span<const Vertex> cycle) {
  if (static_cast<int>(cycle.size()) != d.order()) return false;
  VertexSet seen;
  for (Vertex v : cycle) {
    if (v < 0 || v >= d.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!d.has_arc(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

MatchableCycle longest_matchable_cycle(const BipartiteDigraph& d, VertexSet within) {
  within &= d.vertices();
  const std::vector<Vertex> ids = within.members();
  const int n = static_cast<int>(ids.size());
  if (n > kMatchableCycleMaxOrder) {
    throw GraphError("matchable-cycle search supports at most " +
                     std::to_string(kMatchableCycleMaxOrder) + " vertices");
  }
  std::vector<std::uint32_t> out(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (d.has_arc(ids[i], ids[j])) out[i] |= std::uint32_t{1} << j;
    }
  }
  // ends[mask]: possible last vertices of a path that starts at the lowest
  // member of mask and visits exactly mask.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int s = 0; s < n; ++s) ends[std::size_t{1} << s] = std::uint32_t{1} << s;
  MatchableCycle best;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < ends.size(); ++mask) {
    const std::uint32_t e = ends[mask];
    if (e == 0) continue;
    const int start = std::countr_zero(mask);
    const int size = std::popcount(mask);
    for (std::uint32_t bits = e; bits != 0; bits &= bits - 1) {
      const int last = std::countr_zero(bits);
      // Only vertices above the start keep the start minimal.
      std::uint32_t next = out[last] & ~mask & ~((std::uint32_t{2} << start) - 1);
      for (; next != 0; next &= next - 1) {
        const int w = std::countr_zero(next);
        ends[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
    if (size < 4 || size <= best.length) continue;
    bool closes = false;
    for (std::uint32_t bits = e; bits != 0 && !closes; bits &= bits - 1) {
      closes = (out[std::countr_zero(bits)] >> start) & 1U;
    }
    if (!closes) continue;
    VertexSet cycle;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) cycle.insert(ids[std::countr_zero(bits)]);
    const VertexSet rest = within - cycle;
    if ((rest & d.x_class()).size() != (rest & d.y_class()).size()) continue;
    if (std::holds_alternative<Matching>(find_complete_matching(d, rest))) {
      best = MatchableCycle{size, cycle, {}};
      best_mask = mask;
    }
  }
  if (best.length == 0) return best;
  // Walk the DP table back from a closing end vertex.
  const int start = std::countr_zero(best_mask);
  std::uint32_t mask = best_mask;
  std::uint32_t closing = 0;
  for (std::uint32_t bits = ends[mask]; bits != 0; bits &= bits - 1) {
    if ((out[std::countr_zero(bits)] >> start) & 1U) closing |= bits & -bits;
  }
  std::vector<Vertex> reversed;
  int last = std::countr_zero(closing);
  while (last != start) {
    reversed.push_back(ids[last]);
    mask &= ~(std::uint32_t{1} << last);
    for (std::uint32_t bits = ends[mask]; bits != 0; bits &= bits - 1) {
      if ((out[std::countr_zero(bits)] >> last) & 1U) {
        last = std::countr_zero(bits);
        break;
      }
    }
  }
  best.cycle.push_back(ids[start]);
  best.cycle.insert(best.cycle.end(), reversed.rbegin(), reversed.rend());
  return best;
}

}  // namespace bipham
