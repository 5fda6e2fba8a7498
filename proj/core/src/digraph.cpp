#include "bipham/digraph.hpp"

#include <charconv>
#include <utility>

namespace bipham {

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> result;
  result.reserve(size());
  for_each([&](Vertex v) { result.push_back(v); });
  return result;
}

namespace {

void check_class_size(int a) {
  if (a < 2) throw GraphError("class size must be at least 2, got " + std::to_string(a));
  if (a > kMaxClassSize) {
    throw GraphError("class size " + std::to_string(a) + " exceeds the supported maximum of " +
                     std::to_string(kMaxClassSize));
  }
}

std::string pair_text(int a, Arc arc) {
  auto name = [a](Vertex v) {
    return (v >= 0 && v < 2 * a) ? label(a, v) : std::to_string(v);
  };
  return "(" + name(arc.from) + ", " + name(arc.to) + ")";
}

}  // namespace

BipartiteDigraph::BipartiteDigraph(int a, std::span<const Arc> arcs) : a_(a) {
  check_class_size(a);
  out_.assign(2 * a, 0);
  in_.assign(2 * a, 0);
  for (const Arc& arc : arcs) {
    if (arc.from < 0 || arc.from >= 2 * a || arc.to < 0 || arc.to >= 2 * a) {
      throw GraphError("arc " + pair_text(a, arc) + " has an endpoint out of range");
    }
    if ((arc.from < a) == (arc.to < a)) {
      throw GraphError("arc " + pair_text(a, arc) + " joins two vertices of the same class");
    }
    if ((out_[arc.from] >> arc.to) & 1U) {
      throw GraphError("duplicate arc " + pair_text(a, arc));
    }
    out_[arc.from] |= std::uint64_t{1} << arc.to;
    in_[arc.to] |= std::uint64_t{1} << arc.from;
  }
}

BipartiteDigraph BipartiteDigraph::complete(int a) {
  check_class_size(a);
  std::vector<std::uint64_t> out(2 * a), in(2 * a);
  const std::uint64_t xs = VertexSet::range(0, a).bits();
  const std::uint64_t ys = VertexSet::range(a, 2 * a).bits();
  for (Vertex v = 0; v < 2 * a; ++v) {
    out[v] = in[v] = v < a ? ys : xs;
  }
  return BipartiteDigraph(a, std::move(out), std::move(in));
}

BipartiteDigraph BipartiteDigraph::from_out_masks(int a, std::vector<std::uint64_t> out) {
  check_class_size(a);
  if (static_cast<int>(out.size()) != 2 * a) {
    throw GraphError("expected " + std::to_string(2 * a) + " adjacency masks, got " +
                     std::to_string(out.size()));
  }
  const std::uint64_t xs = VertexSet::range(0, a).bits();
  const std::uint64_t ys = VertexSet::range(a, 2 * a).bits();
  std::vector<std::uint64_t> in(2 * a, 0);
  for (Vertex v = 0; v < 2 * a; ++v) {
    const std::uint64_t allowed = v < a ? ys : xs;
    if (out[v] & ~allowed) {
      const Vertex bad = std::countr_zero(out[v] & ~allowed);
      throw GraphError("arc " + pair_text(a, Arc{v, bad}) +
                       " joins two vertices of the same class or leaves the vertex range");
    }
    VertexSet(out[v]).for_each([&](Vertex w) { in[w] |= std::uint64_t{1} << v; });
  }
  return BipartiteDigraph(a, std::move(out), std::move(in));
}

int BipartiteDigraph::arc_count() const {
  int count = 0;
  for (std::uint64_t mask : out_) count += std::popcount(mask);
  return count;
}

std::vector<Arc> BipartiteDigraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count());
  for (Vertex v = 0; v < order(); ++v) {
    out_neighbors(v).for_each([&](Vertex w) { result.push_back({v, w}); });
  }
  return result;
}

BipartiteDigraph BipartiteDigraph::with_arc(Arc arc) const {
  std::vector<Arc> list = arcs();
  list.push_back(arc);
  return BipartiteDigraph(a_, list);
}

BipartiteDigraph BipartiteDigraph::without_arc(Arc arc) const {
  if (arc.from < 0 || arc.from >= order() || arc.to < 0 || arc.to >= order() ||
      !has_arc(arc.from, arc.to)) {
    throw GraphError("arc " + pair_text(a_, arc) + " is not present");
  }
  auto out = out_;
  auto in = in_;
  out[arc.from] &= ~(std::uint64_t{1} << arc.to);
  in[arc.to] &= ~(std::uint64_t{1} << arc.from);
  return BipartiteDigraph(a_, std::move(out), std::move(in));
}

std::string label(int class_size, Vertex v) {
  return v < class_size ? "x" + std::to_string(v) : "y" + std::to_string(v - class_size);
}

std::string label(const BipartiteDigraph& d, Vertex v) { return label(d.class_size(), v); }

Vertex parse_label(int class_size, std::string_view text) {
  if (text.size() < 2 || (text[0] != 'x' && text[0] != 'y')) {
    throw GraphError("malformed vertex label '" + std::string(text) + "'");
  }
  int index = -1;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [end, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || end != last || index < 0 || (text.size() > 2 && text[1] == '0')) {
    throw GraphError("malformed vertex label '" + std::string(text) + "'");
  }
  if (index >= class_size) {
    throw GraphError("vertex label '" + std::string(text) + "' out of range for class size " +
                     std::to_string(class_size));
  }
  return text[0] == 'x' ? index : class_size + index;
}

void check_vertex(const BipartiteDigraph& d, Vertex v) {
  if (v < 0 || v >= d.order()) {
    throw GraphError("vertex id " + std::to_string(v) + " out of range 0.." +
                     std::to_string(d.order() - 1));
  }
}

DegreeProfile degree(const BipartiteDigraph& d, Vertex v, VertexSet within) {
  check_vertex(d, v);
  return DegreeProfile{(d.out_neighbors(v) & within).size(), (d.in_neighbors(v) & within).size()};
}

VertexSet neighborhood(const BipartiteDigraph& d, VertexSet t, Direction direction) {
  VertexSet result;
  (t & d.vertices()).for_each([&](Vertex v) {
    result |= direction == Direction::kOut ? d.out_neighbors(v) : d.in_neighbors(v);
  });
  return result;
}

int InducedDigraph::arc_count() const {
  int count = 0;
  for (std::uint64_t mask : out) count += std::popcount(mask);
  return count;
}

std::optional<Vertex> InducedDigraph::from_original(Vertex v) const {
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (original[i] == v) return static_cast<Vertex>(i);
  }
  return std::nullopt;
}

std::optional<BipartiteDigraph> InducedDigraph::as_balanced() const {
  if (x_count != y_count || x_count < 2) return std::nullopt;
  return BipartiteDigraph::from_out_masks(x_count, out);
}

InducedDigraph induced(const BipartiteDigraph& d, VertexSet s) {
  s &= d.vertices();
  InducedDigraph view;
  view.x_count = (s & d.x_class()).size();
  view.y_count = (s & d.y_class()).size();
  view.original = s.members();
  std::vector<int> new_id(d.order(), -1);
  for (std::size_t i = 0; i < view.original.size(); ++i) new_id[view.original[i]] = static_cast<int>(i);
  view.out.assign(view.original.size(), 0);
  for (std::size_t i = 0; i < view.original.size(); ++i) {
    (d.out_neighbors(view.original[i]) & s).for_each([&](Vertex w) {
      view.out[i] |= std::uint64_t{1} << new_id[w];
    });
  }
  return view;
}

VertexSet reachable_from(const BipartiteDigraph& d, Vertex source, VertexSet within) {
  check_vertex(d, source);
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next = (neighborhood(d, frontier, Direction::kOut) & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_strongly_connected(const BipartiteDigraph& d) {
  const VertexSet all = d.vertices();
  if (reachable_from(d, 0, all) != all) return false;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next = neighborhood(d, frontier, Direction::kIn) - seen;
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

BipartiteDigraph mirror(const BipartiteDigraph& d) {
  const int a = d.class_size();
  std::vector<std::uint64_t> out(d.order(), 0);
  for (Vertex v = 0; v < d.order(); ++v) {
    d.out_neighbors(v).for_each([&](Vertex w) {
      out[mirror_vertex(a, v)] |= std::uint64_t{1} << mirror_vertex(a, w);
    });
  }
  return BipartiteDigraph::from_out_masks(a, std::move(out));
}

}  // namespace bipham
