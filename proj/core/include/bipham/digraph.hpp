#pragma once

#include <bit>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bipham {

// Vertex ids are dense: 0..a-1 is the X class, a..2a-1 is the Y class.
using Vertex = int;

// Adjacency is stored as 64-bit masks, so a class holds at most 32 vertices.
inline constexpr int kMaxClassSize = 32;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  // Vertices first..last-1.
  static constexpr VertexSet range(Vertex first, Vertex last) {
    if (last <= first) return VertexSet();
    const std::uint64_t upto = last >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << last) - 1;
    return VertexSet(upto & ~((std::uint64_t{1} << first) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  std::vector<Vertex> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) fn(std::countr_zero(rest));
  }

 private:
  std::uint64_t bits_ = 0;
};

struct DegreeProfile {
  int out = 0;
  int in = 0;
  int total() const { return out + in; }
  bool operator==(const DegreeProfile&) const = default;
};

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Arc&) const = default;
};

// Balanced bipartite digraph with class size a >= 2. Immutable once built.
class BipartiteDigraph {
 public:
  // Throws GraphError for a < 2, a > kMaxClassSize, out-of-range or
  // same-class arcs, and duplicate arcs. Messages name the offending pair.
  BipartiteDigraph(int a, std::span<const Arc> arcs);
  BipartiteDigraph(int a, std::initializer_list<Arc> arcs)
      : BipartiteDigraph(a, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  static BipartiteDigraph complete(int a);
  // out[v] is the out-neighbourhood bitmask of v; validated like the arc list.
  static BipartiteDigraph from_out_masks(int a, std::vector<std::uint64_t> out);

  int class_size() const { return a_; }
  int order() const { return 2 * a_; }
  bool is_x(Vertex v) const { return v < a_; }
  bool is_y(Vertex v) const { return v >= a_; }
  VertexSet x_class() const { return VertexSet::range(0, a_); }
  VertexSet y_class() const { return VertexSet::range(a_, 2 * a_); }
  VertexSet vertices() const { return VertexSet::range(0, 2 * a_); }
  VertexSet same_class(Vertex v) const { return is_x(v) ? x_class() : y_class(); }

  bool has_arc(Vertex from, Vertex to) const { return (out_[from] >> to) & 1U; }
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }
  VertexSet out_neighbors(Vertex v) const { return VertexSet(out_[v]); }
  VertexSet in_neighbors(Vertex v) const { return VertexSet(in_[v]); }

  int arc_count() const;
  // Sorted by (from, to).
  std::vector<Arc> arcs() const;

  BipartiteDigraph with_arc(Arc arc) const;
  BipartiteDigraph without_arc(Arc arc) const;

  bool operator==(const BipartiteDigraph& other) const {
    return a_ == other.a_ && out_ == other.out_;
  }

 private:
  BipartiteDigraph(int a, std::vector<std::uint64_t> out, std::vector<std::uint64_t> in)
      : a_(a), out_(std::move(out)), in_(std::move(in)) {}

  int a_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

// "x3" / "y0" style label of a vertex.
std::string label(const BipartiteDigraph& d, Vertex v);
std::string label(int class_size, Vertex v);
// Inverse of label(); throws GraphError on malformed or out-of-range labels.
Vertex parse_label(int class_size, std::string_view text);

void check_vertex(const BipartiteDigraph& d, Vertex v);

// Out/in degree of v counting only neighbours inside `within`.
DegreeProfile degree(const BipartiteDigraph& d, Vertex v, VertexSet within);
inline DegreeProfile degree(const BipartiteDigraph& d, Vertex v) {
  return degree(d, v, d.vertices());
}

enum class Direction { kOut, kIn };

// N+(T) or N-(T) over all of V(D).
VertexSet neighborhood(const BipartiteDigraph& d, VertexSet t, Direction direction);

// Subdigraph induced by a vertex set, relabelled so that the X members come
// first (ascending), then the Y members. Not necessarily balanced.
struct InducedDigraph {
  int x_count = 0;
  int y_count = 0;
  std::vector<Vertex> original;      // new id -> original id
  std::vector<std::uint64_t> out;    // out masks in new ids

  int order() const { return x_count + y_count; }
  bool balanced() const { return x_count == y_count; }
  int arc_count() const;
  Vertex to_original(Vertex v) const { return original.at(v); }
  std::optional<Vertex> from_original(Vertex v) const;
  // The view as a balanced digraph, when x_count == y_count >= 2.
  std::optional<BipartiteDigraph> as_balanced() const;
};

InducedDigraph induced(const BipartiteDigraph& d, VertexSet s);

// Vertices reachable from `source` along directed paths inside `within`.
VertexSet reachable_from(const BipartiteDigraph& d, Vertex source, VertexSet within);
bool is_strongly_connected(const BipartiteDigraph& d);

// Swap the roles of the two classes: x_i <-> y_i. Arcs keep their direction.
BipartiteDigraph mirror(const BipartiteDigraph& d);
inline Vertex mirror_vertex(int class_size, Vertex v) {
  return v < class_size ? v + class_size : v - class_size;
}

}  // namespace bipham
