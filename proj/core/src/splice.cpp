#include <algorithm>
#include <functional>
#include <tuple>

#include "bipham/hamilton.hpp"

namespace bipham {

namespace {

VertexSet vertex_set(std::span<const Vertex> vertices) {
  VertexSet s;
  for (Vertex v : vertices) s.insert(v);
  return s;
}

// Depth-first enumeration of simple paths inside `allowed` that begin at a
// member of `starts`; `visit` sees every prefix with an even vertex count.
// Returns false once `budget` paths have been produced.
bool for_each_path(const BipartiteDigraph& d, VertexSet starts, VertexSet allowed, int& budget,
                   const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> path;
  std::function<bool(VertexSet)> extend = [&](VertexSet used) {
    if (path.size() % 2 == 0) {
      if (budget-- <= 0) return false;
      visit(path);
    }
    const VertexSet next = (d.out_neighbors(path.back()) & allowed) - used;
    for (std::uint64_t rest = next.bits(); rest != 0; rest &= rest - 1) {
      const Vertex w = std::countr_zero(rest);
      path.push_back(w);
      const bool more = extend(used | VertexSet::single(w));
      path.pop_back();
      if (!more) return false;
    }
    return true;
  };
  for (std::uint64_t rest = (starts & allowed).bits(); rest != 0; rest &= rest - 1) {
    const Vertex s = std::countr_zero(rest);
    path.assign(1, s);
    if (!extend(VertexSet::single(s))) return false;
  }
  return true;
}

// A complete X->Y matching of `rest`: m itself when `rest` is closed under
// m, otherwise a fresh augmenting-path search.
std::optional<Matching> match_rest(const BipartiteDigraph& d, const Matching& m, VertexSet rest) {
  bool closed = true;
  rest.for_each([&](Vertex v) { closed = closed && m.mate[v] >= 0 && rest.contains(m.mate[v]); });
  if (closed) return restrict_matching(m, rest);
  auto outcome = find_complete_matching(d, rest);
  if (auto* found = std::get_if<Matching>(&outcome)) return std::move(*found);
  return std::nullopt;
}

class BridgeSearch {
 public:
  BridgeSearch(const BipartiteDigraph& d, const Decomposition& dec, int target, int budget)
      : d_(d), dec_(dec), t_(target), budget_(budget) {
    const Stage& stage = dec.stages[t_];
    cycle_ = stage.cycle.vertices;
    c_ = static_cast<int>(cycle_.size()) / 2;
    r_ = stage.remainder;
    later_ = r_ - vertex_set(cycle_);
    later_matching_ = restrict_matching(dec.matching, later_);
    for (std::size_t u = t_ + 1; u < dec.stages.size(); ++u) {
      components_.push_back(vertex_set(dec.stages[u].cycle.vertices));
    }
    if (!dec.leftover.empty()) components_.push_back(dec.leftover);
  }

  std::optional<MergePlan> run() {
    if (later_.empty()) return std::nullopt;
    VertexSet cycle_y;
    for (int p = 0; p < c_; ++p) cycle_y.insert(y(p));
    const VertexSet chord_starts =
        neighborhood(d_, cycle_y, Direction::kOut) & later_ & d_.x_class();
    bool more = for_each_path(d_, chord_starts, later_, budget_,
                              [&](const std::vector<Vertex>& p) { try_chords(p); });
    for (int i = 0; i < c_ && more; ++i) {
      const VertexSet starts = d_.out_neighbors(x(i)) & later_;
      more = for_each_path(d_, starts, later_, budget_,
                           [&](const std::vector<Vertex>& q) { try_insert(i, q); });
    }
    return best_;
  }

 private:
  Vertex x(int p) const { return cycle_[2 * ((p % c_ + c_) % c_)]; }
  Vertex y(int p) const { return cycle_[2 * ((p % c_ + c_) % c_) + 1]; }

  bool covers(const std::vector<Vertex>& path) const {
    const VertexSet on = vertex_set(path);
    return std::all_of(components_.begin(), components_.end(),
                       [&](VertexSet comp) { return !(comp & on).empty(); });
  }

  // Matching of R_t: the X->Y arcs of `sequence` (a cycle), the cycle's
  // own pairs elsewhere on C_t, and `rest` on the unused later vertices.
  Matching assemble(const std::vector<Vertex>& sequence, const Matching& rest) const {
    Matching m{MatchDirection::kXToY, rest.mate};
    for (int p = 0; p < c_; ++p) {
      m.mate[x(p)] = y(p);
      m.mate[y(p)] = x(p);
    }
    for (std::size_t k = 0; k < sequence.size(); ++k) {
      const Vertex v = sequence[k];
      const Vertex w = sequence[(k + 1) % sequence.size()];
      if (d_.is_x(v)) {
        m.mate[v] = w;
        m.mate[w] = v;
      }
    }
    return m;
  }

  void offer(MergePlan plan) {
    auto key = [](const MergePlan& p) {
      return std::make_tuple(-p.result.length(), !p.covers_later);
    };
    if (!best_ || key(plan) < key(*best_) ||
        (key(plan) == key(*best_) && lex_less(plan.result, best_->result))) {
      best_ = std::move(plan);
    }
  }

  // Append the run of C_t from x_from through y_to (cyclically).
  void append_run(std::vector<Vertex>& out, int from, int to) const {
    const int pairs = ((to - from) % c_ + c_) % c_ + 1;
    for (int k = 0; k < pairs; ++k) {
      out.push_back(x(from + k));
      out.push_back(y(from + k));
    }
  }

  void try_chords(const std::vector<Vertex>& p) {
    const Vertex u = p.front();
    const Vertex v = p.back();
    std::optional<std::optional<Matching>> rest;
    const bool covers_later = covers(p);
    for (int i = 0; i < c_; ++i) {
      if (!d_.has_arc(y(i), u)) continue;
      for (int j = 0; j < c_; ++j) {
        if (!d_.has_arc(v, x(j))) continue;
        const int kept = ((i - j) % c_ + c_) % c_ + 1;
        const int mu = c_ - kept;
        auto matching_rest = [&]() -> const std::optional<Matching>& {
          if (!rest) rest = match_rest(d_, later_matching_, later_ - vertex_set(p));
          return *rest;
        };
        if (2 * kept + static_cast<int>(p.size()) > 2 * c_ && matching_rest()) {
          std::vector<Vertex> seq;
          append_run(seq, j, i);
          seq.insert(seq.end(), p.begin(), p.end());
          emit(SpliceKind::kChord, i, j, -1, mu, p, seq, *matching_rest(), covers_later);
        }
        if (mu == 0) continue;
        // Re-route the skipped run x_{i+1}..y_{j-1} between y_s and x_{s+1}.
        for (int step = 0; step + 1 < kept; ++step) {
          const int s = j + step;
          if (!d_.has_arc(y(s), x(i + 1)) || !d_.has_arc(y(j - 1), x(s + 1))) continue;
          if (!matching_rest()) break;
          std::vector<Vertex> seq;
          append_run(seq, s + 1, i);
          seq.insert(seq.end(), p.begin(), p.end());
          append_run(seq, j, s);
          append_run(seq, i + 1, j - 1);
          emit(SpliceKind::kDoubleChord, i, j, (s % c_ + c_) % c_, mu, p, seq, *matching_rest(),
               covers_later);
          break;
        }
      }
    }
  }

  void try_insert(int i, const std::vector<Vertex>& q) {
    if (!d_.has_arc(q.back(), y(i))) return;
    const auto rest = match_rest(d_, later_matching_, later_ - vertex_set(q));
    if (!rest) return;
    std::vector<Vertex> seq{x(i)};
    seq.insert(seq.end(), q.begin(), q.end());
    seq.push_back(y(i));
    for (int k = 1; k < c_; ++k) {
      seq.push_back(x(i + k));
      seq.push_back(y(i + k));
    }
    emit(SpliceKind::kPairInsert, i, i, -1, 0, q, seq, *rest, covers(q));
  }

  void emit(SpliceKind kind, int i, int j, int s, int mu, const std::vector<Vertex>& inner,
            const std::vector<Vertex>& seq, const Matching& rest, bool covers_later) {
    MergePlan plan;
    plan.target = t_;
    plan.kind = kind;
    plan.i0 = (i % c_ + c_) % c_;
    plan.j0 = (j % c_ + c_) % c_;
    plan.s = s;
    plan.mu = mu;
    plan.covers_later = covers_later;
    plan.matching = assemble(seq, rest);
    std::vector<Vertex> bridge;
    if (kind == SpliceKind::kPairInsert) {
      bridge.push_back(x(i));
      bridge.insert(bridge.end(), inner.begin(), inner.end());
      bridge.push_back(y(i));
    } else {
      bridge.push_back(y(i));
      bridge.insert(bridge.end(), inner.begin(), inner.end());
      bridge.push_back(x(j));
    }
    plan.path = make_path_certificate(plan.matching, std::move(bridge));
    plan.result = make_cycle_certificate(plan.matching, seq);
    offer(std::move(plan));
  }

  const BipartiteDigraph& d_;
  const Decomposition& dec_;
  int t_;
  int budget_;
  std::vector<Vertex> cycle_;
  int c_ = 0;
  VertexSet r_;
  VertexSet later_;
  Matching later_matching_;
  std::vector<VertexSet> components_;
  std::optional<MergePlan> best_;
};

}  // namespace

std::string TerminalReport::describe(const Decomposition& dec) const {
  const int k = static_cast<int>(dec.stages.size());
  auto name = [k](int c) { return c == k ? std::string("Vr") : "C" + std::to_string(c + 1); };
  std::string text;
  for (const MissingLink& link : missing) {
    if (!text.empty()) text += "; ";
    text += "no arc from Y(" + name(link.from) + ") to X(" + name(link.to) + ")";
  }
  if (!text.empty()) return text;
  if (k == 0) return "no compatible cycle of length at least 4";
  return "every component pair is linked, but no bridge lengthens a cycle";
}

BridgeOutcome find_bridge_path(const BipartiteDigraph& d, const Decomposition& dec,
                               const BridgeOptions& options) {
  for (int t = static_cast<int>(dec.stages.size()) - 1; t >= 0; --t) {
    if (auto plan = BridgeSearch(d, dec, t, options.path_cap).run()) return std::move(*plan);
  }
  std::vector<VertexSet> components;
  for (const Stage& stage : dec.stages) components.push_back(vertex_set(stage.cycle.vertices));
  if (!dec.leftover.empty()) components.push_back(dec.leftover);
  TerminalReport report;
  for (std::size_t f = 0; f < components.size(); ++f) {
    const VertexSet reach =
        neighborhood(d, components[f] & d.y_class(), Direction::kOut) & d.x_class();
    for (std::size_t g = 0; g < components.size(); ++g) {
      if (f != g && (reach & components[g]).empty()) {
        report.missing.push_back({static_cast<int>(f), static_cast<int>(g)});
      }
    }
  }
  return report;
}

Decomposition splice(const BipartiteDigraph& d, const Decomposition& dec, const MergePlan& plan,
                     const DecomposeOptions& options) {
  if (plan.target < 0 || plan.target >= static_cast<int>(dec.stages.size())) {
    throw GraphError("merge plan targets a missing stage");
  }
  const Stage& target = dec.stages[plan.target];
  const VertexSet on_cycle = vertex_set(plan.result.vertices);
  if (!on_cycle.is_subset_of(target.remainder) ||
      plan.result.length() <= target.cycle.length() ||
      !is_valid_matching(d, restrict_matching(plan.matching, target.remainder), target.remainder) ||
      !validate_cycle(d, plan.matching, plan.result)) {
    throw GraphError("merge plan is inconsistent with the decomposition");
  }
  Decomposition out;
  out.matching = Matching{MatchDirection::kXToY, std::vector<Vertex>(d.order(), -1)};
  for (int j = 0; j < plan.target; ++j) {
    out.stages.push_back(dec.stages[j]);
    for (Vertex v : dec.stages[j].cycle.vertices) out.matching.mate[v] = dec.matching.mate[v];
  }
  const Matching grown = restrict_matching(plan.matching, target.remainder);
  out.stages.push_back(Stage{target.remainder, grown, plan.result});
  on_cycle.for_each([&](Vertex v) { out.matching.mate[v] = grown.mate[v]; });
  const VertexSet rest = target.remainder - on_cycle;
  Decomposition tail = decompose_within(d, rest, options, restrict_matching(grown, rest));
  for (Stage& stage : tail.stages) out.stages.push_back(std::move(stage));
  rest.for_each([&](Vertex v) { out.matching.mate[v] = tail.matching.mate[v]; });
  out.leftover = tail.leftover;
  return out;
}

}  // namespace bipham
