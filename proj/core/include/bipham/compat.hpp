#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bipham/digraph.hpp"
#include "bipham/matching.hpp"

namespace bipham {

// A path in D with, for each consecutive arc, whether it belongs to M.
struct PathCertificate {
  std::vector<Vertex> vertices;
  std::vector<bool> matching_arc;  // size vertices.size() - 1

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const PathCertificate&) const = default;
};

// A closed walk v1 -> v2 -> ... -> vm -> v1. matching_arc[i] describes the
// arc leaving vertices[i].
struct CycleCertificate {
  std::vector<Vertex> vertices;
  std::vector<bool> matching_arc;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const CycleCertificate&) const = default;
};

PathCertificate make_path_certificate(const Matching& m, std::vector<Vertex> vertices);
// Rotates the cycle so that it starts at its smallest vertex.
CycleCertificate make_cycle_certificate(const Matching& m, std::vector<Vertex> vertices);

// All arcs present, vertices distinct, flags agree with M and alternate.
bool validate_path(const BipartiteDigraph& d, const Matching& m, const PathCertificate& p);
// As above, plus closed, even and of length >= 4.
bool validate_cycle(const BipartiteDigraph& d, const Matching& m, const CycleCertificate& c);

// Lexicographic comparison of the vertex sequences.
bool lex_less(const CycleCertificate& lhs, const CycleCertificate& rhs);

// One node per matched pair (x, M(x)) with x in `within`; node p -> q iff
// p != q and M(x_p) x_q is an arc. Nodes are numbered by ascending x id, so
// node order and vertex order agree.
class ContractedDigraph {
 public:
  // M must be an X->Y matching covering `within`, with `within` closed
  // under M. Throws GraphError otherwise.
  ContractedDigraph(const BipartiteDigraph& d, const Matching& m, VertexSet within);
  ContractedDigraph(const BipartiteDigraph& d, const Matching& m)
      : ContractedDigraph(d, m, d.vertices()) {}

  int node_count() const { return static_cast<int>(x_.size()); }
  Vertex x_of(int node) const { return x_[node]; }
  Vertex y_of(int node) const { return m_.partner(x_[node]); }
  // Node holding v (either endpoint of its pair), or -1.
  int node_of(Vertex v) const;
  std::uint64_t successors(int node) const { return succ_[node]; }
  std::uint64_t predecessors(int node) const { return pred_[node]; }
  bool has_arc(int p, int q) const { return (succ_[p] >> q) & 1U; }
  int arc_count() const;
  VertexSet within() const { return within_; }
  const Matching& matching() const { return m_; }

  // Node path p1..pr -> (x_p1, y_p1, ..., x_pr, y_pr).
  PathCertificate expand_path(std::span<const int> nodes) const;
  CycleCertificate expand_cycle(std::span<const int> nodes) const;

 private:
  Matching m_;
  VertexSet within_;
  std::vector<Vertex> x_;
  std::vector<int> node_of_;
  std::vector<std::uint64_t> succ_;
  std::vector<std::uint64_t> pred_;
};

// M-compatible u -> v path, shortest, ties broken by lexicographic node
// order. Paths leave X and enter Y through M-arcs, so an X -> Y request is
// answered by M(u) ~> M^-1(v) unless uv is itself in M.
std::optional<PathCertificate> compatible_path(const BipartiteDigraph& d, const Matching& m,
                                               Vertex u, Vertex v);

// Y vertices other than y reachable from y by an M-compatible path of
// positive length.
VertexSet compatible_reach_set(const BipartiteDigraph& d, const Matching& m, Vertex y);

// For each x in `within`, the Y vertices y' such that an M-compatible path
// x -> y' exists inside `within` (first and last arcs in M). Indexed by
// vertex id; entries for non-X vertices are empty.
std::vector<VertexSet> compatible_targets(const BipartiteDigraph& d, const Matching& m,
                                          VertexSet within);

enum class SearchMode { kExact, kHeuristic };

inline constexpr int kExactCycleMaxNodes = kMaxClassSize;

// Node sequences on a contraction. Cycles start at their smallest node.
std::vector<int> shortest_node_path(const ContractedDigraph& c, int from, int to);
std::vector<int> longest_node_cycle(const ContractedDigraph& c);

struct CycleSearchResult {
  std::vector<int> nodes;  // empty when the contraction is acyclic
  int iterations = 0;
  bool used_exact_fallback = false;
};

// Maximal-path extension procedure: grow a compatible path until it cannot
// be extended, swap the last (or first) pair when the neighbour of the
// penultimate (second) node leaves the path, and close the longest chord.
// Stops after 4n^2 steps; with allow_exact_fallback it finishes with the
// exact search when the best cycle is shorter than n pairs' half.
CycleSearchResult extension_procedure(const ContractedDigraph& c, bool allow_exact_fallback);

// Longest M-compatible cycle (exact) or the extension procedure's best
// (heuristic). nullopt iff the contraction is acyclic.
std::optional<CycleCertificate> longest_compatible_cycle(const BipartiteDigraph& d,
                                                         const Matching& m, SearchMode mode,
                                                         VertexSet within);
inline std::optional<CycleCertificate> longest_compatible_cycle(const BipartiteDigraph& d,
                                                                const Matching& m,
                                                                SearchMode mode) {
  return longest_compatible_cycle(d, m, mode, d.vertices());
}

}  // namespace bipham
