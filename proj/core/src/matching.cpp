#include "bipham/matching.hpp"

#include <functional>

namespace bipham {

int Matching::size() const {
  int count = 0;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] >= 0) ++count;
  }
  return count / 2;
}

std::vector<Arc> Matching::arcs() const {
  std::vector<Arc> result;
  const int a = static_cast<int>(mate.size()) / 2;
  const bool from_x = direction == MatchDirection::kXToY;
  for (Vertex v = from_x ? 0 : a; v < (from_x ? a : 2 * a); ++v) {
    if (mate[v] >= 0) result.push_back({v, mate[v]});
  }
  return result;
}

namespace {

class Augmenter {
 public:
  Augmenter(const BipartiteDigraph& d, VertexSet within) : d_(d), within_(within) {
    mate_.assign(d.order(), -1);
  }

  bool augment(Vertex source) {
    visited_sources_ = VertexSet();
    visited_targets_ = VertexSet();
    return search(source);
  }

  VertexSet visited_sources() const { return visited_sources_; }
  VertexSet visited_targets() const { return visited_targets_; }
  std::vector<Vertex> mate() && { return std::move(mate_); }

 private:
  bool search(Vertex source) {
    visited_sources_.insert(source);
    const VertexSet targets = (d_.out_neighbors(source) & within_) - visited_targets_;
    // A free target is taken before any augmentation, so an identity
    // matching is kept when it exists greedily. Ascending order throughout.
    for (std::uint64_t rest = targets.bits(); rest != 0; rest &= rest - 1) {
      const Vertex t = std::countr_zero(rest);
      if (mate_[t] < 0) {
        visited_targets_.insert(t);
        mate_[t] = source;
        mate_[source] = t;
        return true;
      }
    }
    for (std::uint64_t rest = targets.bits(); rest != 0; rest &= rest - 1) {
      const Vertex t = std::countr_zero(rest);
      if (visited_targets_.contains(t)) continue;
      visited_targets_.insert(t);
      if (mate_[t] < 0 || search(mate_[t])) {
        mate_[t] = source;
        mate_[source] = t;
        return true;
      }
    }
    return false;
  }

  const BipartiteDigraph& d_;
  VertexSet within_;
  std::vector<Vertex> mate_;
  VertexSet visited_sources_;
  VertexSet visited_targets_;
};

}  // namespace

MatchingOutcome find_complete_matching(const BipartiteDigraph& d, VertexSet within,
                                       MatchDirection direction) {
  within &= d.vertices();
  const VertexSet sources = within & (direction == MatchDirection::kXToY ? d.x_class() : d.y_class());
  Augmenter augmenter(d, within);
  for (std::uint64_t rest = sources.bits(); rest != 0; rest &= rest - 1) {
    const Vertex s = std::countr_zero(rest);
    if (!augmenter.augment(s)) {
      // Every target reached is matched back into the visited sources, so
      // N+(visited) = visited targets has one element fewer.
      return HallViolator{augmenter.visited_sources(), augmenter.visited_targets()};
    }
  }
  return Matching{direction, std::move(augmenter).mate()};
}

MatchingOutcome find_complete_matching(const BipartiteDigraph& d, MatchDirection direction) {
  return find_complete_matching(d, d.vertices(), direction);
}

bool is_valid_matching(const BipartiteDigraph& d, const Matching& m, VertexSet covered) {
  if (static_cast<int>(m.mate.size()) != d.order()) return false;
  const bool from_x = m.direction == MatchDirection::kXToY;
  for (Vertex v = 0; v < d.order(); ++v) {
    const Vertex w = m.mate[v];
    if (w < 0) {
      if (covered.contains(v)) return false;
      continue;
    }
    if (w >= d.order() || m.mate[w] != v || d.is_x(v) == d.is_x(w)) return false;
    const Vertex source = d.is_x(v) == from_x ? v : w;
    const Vertex target = source == v ? w : v;
    if (!d.has_arc(source, target)) return false;
  }
  return true;
}

bool is_valid_violator(const BipartiteDigraph& d, const HallViolator& h) {
  if (h.s.empty() || !h.s.is_subset_of(d.vertices())) return false;
  if (!h.s.is_subset_of(d.x_class()) && !h.s.is_subset_of(d.y_class())) return false;
  return neighborhood(d, h.s, Direction::kOut) == h.n && h.n.size() < h.s.size();
}

Matching restrict_matching(const Matching& m, VertexSet within) {
  Matching result = m;
  for (std::size_t v = 0; v < result.mate.size(); ++v) {
    const Vertex w = result.mate[v];
    if (w >= 0 && (!within.contains(static_cast<Vertex>(v)) || !within.contains(w))) {
      result.mate[v] = -1;
    }
  }
  return result;
}

ExpansionReport check_expansion(const BipartiteDigraph& d) {
  const int a = d.class_size();
  if (a > kExpansionMaxClassSize) {
    throw GraphError("check_expansion enumerates subsets and supports a <= " +
                     std::to_string(kExpansionMaxClassSize));
  }
  const int bound = (a + 1) / 2;
  for (int offset : {0, a}) {
    for (int size = 1; size <= bound; ++size) {
      // Gosper's hack over a-bit masks with `size` bits.
      std::uint64_t combo = (std::uint64_t{1} << size) - 1;
      const std::uint64_t limit = std::uint64_t{1} << a;
      while (combo < limit) {
        const VertexSet s(combo << offset);
        const VertexSet n = neighborhood(d, s, Direction::kOut);
        if (n.size() < s.size()) return ExpansionReport{false, HallViolator{s, n}};
        const std::uint64_t low = combo & -combo;
        const std::uint64_t ripple = combo + low;
        combo = (((ripple ^ combo) >> 2) / low) | ripple;
      }
    }
  }
  return ExpansionReport{};
}

std::vector<Matching> all_complete_matchings(const BipartiteDigraph& d, VertexSet within) {
  within &= d.vertices();
  const std::vector<Vertex> xs = (within & d.x_class()).members();
  const VertexSet ys = within & d.y_class();
  std::vector<Matching> result;
  if (static_cast<int>(xs.size()) != ys.size()) return result;
  std::vector<Vertex> mate(d.order(), -1);
  std::function<void(std::size_t, VertexSet)> extend = [&](std::size_t i, VertexSet free) {
    if (i == xs.size()) {
      result.push_back(Matching{MatchDirection::kXToY, mate});
      return;
    }
    const Vertex x = xs[i];
    (d.out_neighbors(x) & free).for_each([&](Vertex y) {
      mate[x] = y;
      mate[y] = x;
      extend(i + 1, free - VertexSet::single(y));
      mate[y] = -1;
    });
    mate[x] = -1;
  };
  extend(0, ys);
  return result;
}

}  // namespace bipham
