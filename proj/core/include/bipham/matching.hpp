#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "bipham/digraph.hpp"

namespace bipham {

enum class MatchDirection { kXToY, kYToX };

// A matching from one class to the other, stored as a mate table over all
// vertex ids (-1 for unmatched). For kXToY every pair (x, mate[x]) is an arc
// x -> mate[x]; for kYToX the arcs run y -> mate[y].
struct Matching {
  MatchDirection direction = MatchDirection::kXToY;
  std::vector<Vertex> mate;

  // M(x) for X->Y matchings, or the image of a Y source otherwise.
  Vertex image(Vertex source) const { return mate.at(source); }
  Vertex partner(Vertex v) const { return mate.at(v); }
  bool matched(Vertex v) const { return mate.at(v) >= 0; }
  int size() const;
  // Pairs as (source, target) arcs, ascending by source.
  std::vector<Arc> arcs() const;
  bool operator==(const Matching&) const = default;
};

// Hall violator: a set S inside one class whose out-neighbourhood N is
// smaller than S.
struct HallViolator {
  VertexSet s;
  VertexSet n;
};

using MatchingOutcome = std::variant<Matching, HallViolator>;

// Augmenting-path search, sources and targets scanned in ascending id
// order, so the returned matching is reproducible.
MatchingOutcome find_complete_matching(const BipartiteDigraph& d,
                                       MatchDirection direction = MatchDirection::kXToY);

// Same search restricted to the vertices of `within` (sources and targets
// both taken from `within`). A complete result matches every source in
// `within`.
MatchingOutcome find_complete_matching(const BipartiteDigraph& d, VertexSet within,
                                       MatchDirection direction = MatchDirection::kXToY);

// Every pair is an arc in the stated direction, mates are symmetric, and
// each vertex of `covered` is matched.
bool is_valid_matching(const BipartiteDigraph& d, const Matching& m, VertexSet covered);
inline bool is_complete_matching(const BipartiteDigraph& d, const Matching& m) {
  return is_valid_matching(d, m, d.vertices());
}

bool is_valid_violator(const BipartiteDigraph& d, const HallViolator& h);

// Restriction of m to `within`; entries outside become -1.
Matching restrict_matching(const Matching& m, VertexSet within);

struct ExpansionReport {
  bool holds = true;
  std::optional<HallViolator> violator;
};

// Largest class size check_expansion accepts; it enumerates subsets.
inline constexpr int kExpansionMaxClassSize = 20;

// For every S within one class with |S| <= (a+1)/2, checks |N+(S)| >= |S|.
// Scans X before Y, smaller sets first, then colex order within a size.
ExpansionReport check_expansion(const BipartiteDigraph& d);

// All complete X->Y matchings of d restricted to `within`, in lexicographic
// order of the mate table. Intended for small classes.
std::vector<Matching> all_complete_matchings(const BipartiteDigraph& d, VertexSet within);

}  // namespace bipham
