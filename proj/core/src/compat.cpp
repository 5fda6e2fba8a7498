#include "bipham/compat.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace bipham {

namespace {

bool is_m_arc(const Matching& m, Vertex from, Vertex to) {
  if (from < 0 || from >= static_cast<int>(m.mate.size()) || m.mate[from] != to) return false;
  const int a = static_cast<int>(m.mate.size()) / 2;
  return (from < a) == (m.direction == MatchDirection::kXToY);
}

bool all_distinct(const std::vector<Vertex>& vertices) {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

PathCertificate make_path_certificate(const Matching& m, std::vector<Vertex> vertices) {
  PathCertificate p;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    p.matching_arc.push_back(is_m_arc(m, vertices[i], vertices[i + 1]));
  }
  p.vertices = std::move(vertices);
  return p;
}

CycleCertificate make_cycle_certificate(const Matching& m, std::vector<Vertex> vertices) {
  if (!vertices.empty()) {
    std::rotate(vertices.begin(), std::min_element(vertices.begin(), vertices.end()),
                vertices.end());
  }
  CycleCertificate c;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    c.matching_arc.push_back(is_m_arc(m, vertices[i], vertices[(i + 1) % vertices.size()]));
  }
  c.vertices = std::move(vertices);
  return c;
}

bool validate_path(const BipartiteDigraph& d, const Matching& m, const PathCertificate& p) {
  if (p.vertices.empty() || p.matching_arc.size() + 1 != p.vertices.size()) return false;
  for (Vertex v : p.vertices) {
    if (v < 0 || v >= d.order()) return false;
  }
  if (!all_distinct(p.vertices)) return false;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const Vertex from = p.vertices[i];
    const Vertex to = p.vertices[i + 1];
    if (!d.has_arc(from, to)) return false;
    if (p.matching_arc[i] != is_m_arc(m, from, to)) return false;
    if (i > 0 && p.matching_arc[i] == p.matching_arc[i - 1]) return false;
  }
  return true;
}

bool validate_cycle(const BipartiteDigraph& d, const Matching& m, const CycleCertificate& c) {
  const std::size_t n = c.vertices.size();
  if (n < 4 || n % 2 != 0 || c.matching_arc.size() != n) return false;
  for (Vertex v : c.vertices) {
    if (v < 0 || v >= d.order()) return false;
  }
  if (!all_distinct(c.vertices)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex from = c.vertices[i];
    const Vertex to = c.vertices[(i + 1) % n];
    if (!d.has_arc(from, to)) return false;
    if (c.matching_arc[i] != is_m_arc(m, from, to)) return false;
    if (c.matching_arc[i] == c.matching_arc[(i + 1) % n]) return false;
  }
  return true;
}

bool lex_less(const CycleCertificate& lhs, const CycleCertificate& rhs) {
  return lhs.vertices < rhs.vertices;
}

ContractedDigraph::ContractedDigraph(const BipartiteDigraph& d, const Matching& m,
                                     VertexSet within)
    : m_(m), within_(within & d.vertices()) {
  if (m.direction != MatchDirection::kXToY || static_cast<int>(m.mate.size()) != d.order()) {
    throw GraphError("contraction needs an X->Y matching over the digraph's vertex ids");
  }
  if (!is_valid_matching(d, restrict_matching(m, within_), within_)) {
    throw GraphError("matching is not complete on the contracted vertex set");
  }
  node_of_.assign(d.order(), -1);
  (within_ & d.x_class()).for_each([&](Vertex x) {
    node_of_[x] = node_of_[m.partner(x)] = static_cast<int>(x_.size());
    x_.push_back(x);
  });
  succ_.assign(x_.size(), 0);
  pred_.assign(x_.size(), 0);
  for (int p = 0; p < node_count(); ++p) {
    (d.out_neighbors(y_of(p)) & within_).for_each([&](Vertex x) {
      const int q = node_of_[x];
      if (q != p) {
        succ_[p] |= std::uint64_t{1} << q;
        pred_[q] |= std::uint64_t{1} << p;
      }
    });
  }
}

int ContractedDigraph::node_of(Vertex v) const {
  return v >= 0 && v < static_cast<int>(node_of_.size()) ? node_of_[v] : -1;
}

int ContractedDigraph::arc_count() const {
  int count = 0;
  for (std::uint64_t s : succ_) count += std::popcount(s);
  return count;
}

PathCertificate ContractedDigraph::expand_path(std::span<const int> nodes) const {
  std::vector<Vertex> vertices;
  for (int p : nodes) {
    vertices.push_back(x_of(p));
    vertices.push_back(y_of(p));
  }
  return make_path_certificate(m_, std::move(vertices));
}

CycleCertificate ContractedDigraph::expand_cycle(std::span<const int> nodes) const {
  std::vector<Vertex> vertices;
  for (int p : nodes) {
    vertices.push_back(x_of(p));
    vertices.push_back(y_of(p));
  }
  return make_cycle_certificate(m_, std::move(vertices));
}

std::vector<int> shortest_node_path(const ContractedDigraph& c, int from, int to) {
  const int n = c.node_count();
  // Distances to `to` along arcs, by BFS over predecessors.
  std::vector<int> dist(n, -1);
  dist[to] = 0;
  std::deque<int> queue{to};
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (std::uint64_t rest = c.predecessors(q); rest != 0; rest &= rest - 1) {
      const int p = std::countr_zero(rest);
      if (dist[p] < 0) {
        dist[p] = dist[q] + 1;
        queue.push_back(p);
      }
    }
  }
  std::vector<int> path{from};
  int current = from;
  if (from == to) {
    // Shortest closed walk back to `from`: best first step, then descend.
    int best = -1;
    for (std::uint64_t rest = c.successors(from); rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (dist[w] >= 0 && (best < 0 || dist[w] < dist[best])) best = w;
    }
    if (best < 0) return {};
    path.push_back(best);
    current = best;
  } else if (dist[from] < 0) {
    return {};
  }
  while (current != to) {
    for (std::uint64_t rest = c.successors(current); rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (dist[w] == dist[current] - 1) {
        current = w;
        break;
      }
    }
    path.push_back(current);
  }
  return path;
}

std::optional<PathCertificate> compatible_path(const BipartiteDigraph& d, const Matching& m,
                                               Vertex u, Vertex v) {
  check_vertex(d, u);
  check_vertex(d, v);
  if (u == v) throw GraphError("compatible_path needs distinct endpoints");
  const ContractedDigraph c(d, m);
  if (d.is_x(u) && d.is_y(v) && m.partner(u) == v) {
    return make_path_certificate(m, {u, v});
  }
  // A single non-matching arc, possibly closing its own pair.
  if (d.is_y(u) && d.is_x(v) && d.has_arc(u, v)) return make_path_certificate(m, {u, v});
  const std::vector<int> nodes = shortest_node_path(c, c.node_of(u), c.node_of(v));
  if (nodes.empty()) return std::nullopt;
  std::vector<Vertex> vertices;
  for (int p : nodes) {
    vertices.push_back(c.x_of(p));
    vertices.push_back(c.y_of(p));
  }
  // Y sources skip their pair's X; X targets drop their pair's Y.
  if (d.is_x(v)) vertices.pop_back();
  if (d.is_y(u)) vertices.erase(vertices.begin());
  return make_path_certificate(m, std::move(vertices));
}

namespace {

std::uint64_t node_reach(const ContractedDigraph& c, std::uint64_t frontier) {
  std::uint64_t seen = 0;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
      next |= c.successors(std::countr_zero(rest));
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

VertexSet compatible_reach_set(const BipartiteDigraph& d, const Matching& m, Vertex y) {
  check_vertex(d, y);
  if (!d.is_y(y)) throw GraphError("compatible_reach_set expects a Y vertex");
  const ContractedDigraph c(d, m);
  const std::uint64_t nodes = node_reach(c, std::uint64_t{1} << c.node_of(y));
  VertexSet result;
  for (std::uint64_t rest = nodes; rest != 0; rest &= rest - 1) {
    result.insert(c.y_of(std::countr_zero(rest)));
  }
  result.erase(y);
  return result;
}

std::vector<VertexSet> compatible_targets(const BipartiteDigraph& d, const Matching& m,
                                          VertexSet within) {
  const ContractedDigraph c(d, m, within);
  std::vector<VertexSet> result(d.order());
  for (int p = 0; p < c.node_count(); ++p) {
    const std::uint64_t nodes = node_reach(c, std::uint64_t{1} << p) | (std::uint64_t{1} << p);
    VertexSet ys;
    for (std::uint64_t rest = nodes; rest != 0; rest &= rest - 1) {
      ys.insert(c.y_of(std::countr_zero(rest)));
    }
    result[c.x_of(p)] = ys;
  }
  return result;
}

namespace {

class LongestCycleSearch {
 public:
  explicit LongestCycleSearch(const ContractedDigraph& c) : c_(c), n_(c.node_count()) {}

  std::vector<int> run() {
    for (int s = 0; s < n_; ++s) {
      if (n_ - s <= static_cast<int>(best_.size())) break;
      start_ = s;
      allowed_ = ~((std::uint64_t{1} << s) - 1) & all_nodes();
      memo_.clear();
      path_.assign(1, s);
      dfs(s, std::uint64_t{1} << s);
      if (static_cast<int>(best_.size()) == n_) break;
    }
    return best_;
  }

 private:
  std::uint64_t all_nodes() const {
    return n_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  bool done() const { return static_cast<int>(best_.size()) == n_ - start_; }

  void dfs(int node, std::uint64_t visited) {
    if (path_.size() >= 2 && c_.has_arc(node, start_) && path_.size() > best_.size()) {
      best_ = path_;
      if (done()) return;
    }
    const std::uint64_t open = allowed_ & ~visited;
    // Nodes still reachable through unvisited ones bound any extension.
    std::uint64_t reach = 0;
    std::uint64_t frontier = c_.successors(node) & open;
    bool can_close = c_.has_arc(node, start_);
    while (frontier != 0) {
      reach |= frontier;
      std::uint64_t next = 0;
      for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
        const int q = std::countr_zero(rest);
        next |= c_.successors(q);
        can_close = can_close || c_.has_arc(q, start_);
      }
      frontier = next & open & ~reach;
    }
    if (!can_close || reach == 0) return;
    if (path_.size() + std::popcount(reach) <= best_.size()) return;
    const std::uint64_t key = (visited << 6) | static_cast<std::uint64_t>(node);
    if (n_ <= 58 && !memo_.insert(key).second) return;
    for (std::uint64_t rest = c_.successors(node) & open; rest != 0; rest &= rest - 1) {
      const int q = std::countr_zero(rest);
      path_.push_back(q);
      dfs(q, visited | (std::uint64_t{1} << q));
      path_.pop_back();
      if (done()) return;
    }
  }

  const ContractedDigraph& c_;
  int n_;
  int start_ = 0;
  std::uint64_t allowed_ = 0;
  std::vector<int> path_;
  std::vector<int> best_;
  std::unordered_set<std::uint64_t> memo_;
};

// Smallest node of a cycle first.
std::vector<int> canonical_rotation(std::vector<int> cycle) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

bool better_cycle(const std::vector<int>& candidate, const std::vector<int>& best) {
  if (candidate.size() != best.size()) return candidate.size() > best.size();
  return candidate < best;
}

}  // namespace

std::vector<int> longest_node_cycle(const ContractedDigraph& c) {
  if (c.node_count() > kExactCycleMaxNodes) {
    throw GraphError("exact cycle search supports at most " +
                     std::to_string(kExactCycleMaxNodes) + " pairs");
  }
  return LongestCycleSearch(c).run();
}

CycleSearchResult extension_procedure(const ContractedDigraph& c, bool allow_exact_fallback) {
  const int n = c.node_count();
  CycleSearchResult result;
  if (n < 2) return result;
  const int cap = 4 * n * n;
  std::set<std::vector<int>> seen;
  std::vector<int>& best = result.nodes;

  auto in_path = [](const std::deque<int>& path) {
    std::uint64_t mask = 0;
    for (int p : path) mask |= std::uint64_t{1} << p;
    return mask;
  };
  auto record_chords = [&](const std::deque<int>& path) {
    // A chord from path[j] back to path[i] closes path[i..j].
    for (std::size_t j = 1; j < path.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!c.has_arc(path[j], path[i])) continue;
        std::vector<int> cycle(path.begin() + i, path.begin() + j + 1);
        cycle = canonical_rotation(std::move(cycle));
        if (better_cycle(cycle, best)) best = std::move(cycle);
      }
    }
  };

  for (int start = 0; start < n && result.iterations < cap; ++start) {
    std::deque<int> path{start};
    while (result.iterations < cap) {
      ++result.iterations;
      // Extend to a maximal path, smallest neighbour first.
      for (bool grew = true; grew;) {
        grew = false;
        const std::uint64_t used = in_path(path);
        if (const std::uint64_t out = c.successors(path.back()) & ~used; out != 0) {
          path.push_back(std::countr_zero(out));
          grew = true;
        } else if (const std::uint64_t in = c.predecessors(path.front()) & ~used; in != 0) {
          path.push_front(std::countr_zero(in));
          grew = true;
        }
      }
      record_chords(path);
      if (static_cast<int>(best.size()) == n) return result;
      if (!seen.insert(std::vector<int>(path.begin(), path.end())).second || path.size() < 2) break;

      // Swap the last pair for an outside successor of the penultimate one,
      // or the first pair for an outside predecessor of the second one.
      const std::uint64_t used = in_path(path);
      std::optional<std::deque<int>> next;
      const std::size_t s = path.size();
      for (std::uint64_t rest = c.successors(path[s - 2]) & ~used; rest != 0 && !next;
           rest &= rest - 1) {
        std::deque<int> candidate(path.begin(), path.end() - 1);
        candidate.push_back(std::countr_zero(rest));
        if (!seen.contains(std::vector<int>(candidate.begin(), candidate.end()))) next = candidate;
      }
      for (std::uint64_t rest = c.predecessors(path[1]) & ~used; rest != 0 && !next;
           rest &= rest - 1) {
        std::deque<int> candidate(path.begin() + 1, path.end());
        candidate.push_front(std::countr_zero(rest));
        if (!seen.contains(std::vector<int>(candidate.begin(), candidate.end()))) next = candidate;
      }
      if (!next) break;
      path = std::move(*next);
    }
  }
  // The guaranteed bound is a cycle through at least half of the pairs.
  if (allow_exact_fallback && 2 * static_cast<int>(best.size()) < n &&
      n <= kExactCycleMaxNodes) {
    best = longest_node_cycle(c);
    result.used_exact_fallback = true;
  }
  return result;
}

std::optional<CycleCertificate> longest_compatible_cycle(const BipartiteDigraph& d,
                                                         const Matching& m, SearchMode mode,
                                                         VertexSet within) {
  const ContractedDigraph c(d, m, within);
  const std::vector<int> nodes = mode == SearchMode::kExact
                                     ? longest_node_cycle(c)
                                     : extension_procedure(c, true).nodes;
  if (nodes.empty()) return std::nullopt;
  return c.expand_cycle(nodes);
}

}  // namespace bipham
