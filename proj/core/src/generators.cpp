#include "bipham/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "bipham/conditions.hpp"
#include "bipham/oracle.hpp"

namespace bipham {

std::string to_string(Family f) {
  switch (f) {
    case Family::kDprime: return "Dprime";
    case Family::kDak: return "Dak";
    case Family::kTak: return "Tak";
    case Family::kComplete: return "complete";
    case Family::kFig1: return "fig1";
    case Family::kRandom: return "random";
  }
  return "complete";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::kDprime, Family::kDak, Family::kTak, Family::kComplete, Family::kFig1,
                   Family::kRandom}) {
    if (to_string(f) == name) return f;
  }
  throw GraphError("unknown family '" + name + "' (expected Dprime, Dak, Tak, complete, fig1 or random)");
}

namespace {

void check_block_size(int a, int k) {
  if (a < 2) throw GraphError("class size must be at least 2, got " + std::to_string(a));
  if (k < 1 || 2 * k >= a) {
    throw GraphError("need 1 <= k < a/2, got a = " + std::to_string(a) + ", k = " +
                     std::to_string(k));
  }
}

// Arcs from every member of `from` to every member of `to`.
void connect(std::vector<std::uint64_t>& out, VertexSet from, VertexSet to) {
  from.for_each([&](Vertex v) { out[v] |= to.bits(); });
}

}  // namespace

BipartiteDigraph gen_Dprime(int a) {
  if (a < 2 || a % 2 != 0) {
    throw GraphError("Dprime needs an even class size >= 2, got " + std::to_string(a));
  }
  const int h = a / 2;
  const VertexSet r = VertexSet::range(0, h), s = VertexSet::range(h, a);
  const VertexSet u = VertexSet::range(a, a + h), w = VertexSet::range(a + h, 2 * a);
  std::vector<std::uint64_t> out(2 * a, 0);
  connect(out, r, u | w);
  connect(out, u, r | s);
  connect(out, s, w);
  connect(out, w, s);
  return BipartiteDigraph::from_out_masks(a, std::move(out));
}

BipartiteDigraph gen_Dak(int a, int k) {
  check_block_size(a, k);
  const VertexSet r = VertexSet::range(0, k), s = VertexSet::range(k, a);
  const VertexSet u = VertexSet::range(a, a + k), w = VertexSet::range(a + k, 2 * a);
  std::vector<std::uint64_t> out(2 * a, 0);
  connect(out, r, u | w);
  connect(out, u | w, r);
  connect(out, u, r | s);
  connect(out, r | s, u);
  connect(out, s, w);
  return BipartiteDigraph::from_out_masks(a, std::move(out));
}

BipartiteDigraph gen_Tak(int a, int k) {
  check_block_size(a, k);
  const VertexSet r = VertexSet::range(0, k), s = VertexSet::range(k, a);
  const VertexSet u = VertexSet::range(a, a + k), w = VertexSet::range(a + k, 2 * a);
  std::vector<std::uint64_t> out(2 * a, 0);
  connect(out, r, u);
  connect(out, u, s);
  connect(out, s, w);
  connect(out, w, r);
  return BipartiteDigraph::from_out_masks(a, std::move(out));
}

RandomSample gen_random_M(int a, std::uint64_t seed, int budget) {
  RandomSample sample{BipartiteDigraph::complete(a), {}};
  std::mt19937_64 rng(seed);
  std::vector<Arc> candidates = sample.digraph.arcs();
  int deleted = 0;
  while (!candidates.empty() && (budget < 0 || deleted < budget)) {
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const std::size_t index = pick(rng);
    const Arc arc = candidates[index];
    candidates[index] = candidates.back();
    candidates.pop_back();
    BipartiteDigraph next = sample.digraph.without_arc(arc);
    const bool keeps = check_condition_M(next).satisfied;
    if (keeps) {
      sample.digraph = std::move(next);
      ++deleted;
    }
    sample.log.push_back({arc, keeps});
  }
  return sample;
}

BipartiteDigraph gen_random_arcs(int a, std::uint64_t seed, double p) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(p);
  std::vector<Arc> arcs;
  for (const Arc& arc : BipartiteDigraph::complete(a).arcs()) {
    if (keep(rng)) arcs.push_back(arc);
  }
  return BipartiteDigraph(a, arcs);
}

BipartiteDigraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kDprime: return gen_Dprime(spec.a);
    case Family::kDak: return gen_Dak(spec.a, spec.k);
    case Family::kTak: return gen_Tak(spec.a, spec.k);
    case Family::kComplete: return BipartiteDigraph::complete(spec.a);
    case Family::kFig1:
      if (spec.a != 3) throw GraphError("fig1 exists only for a = 3");
      return fig1_digraph();
    case Family::kRandom: return gen_random_M(spec.a, spec.seed, spec.budget).digraph;
  }
  throw GraphError("unknown family");
}

namespace {

void check_mask_size(int a) {
  if (a < 2 || 2 * a * a > 64) {
    throw GraphError("arc masks need 2 <= a <= 5, got " + std::to_string(a));
  }
}

}  // namespace

std::uint64_t arc_mask(const BipartiteDigraph& d) {
  const int a = d.class_size();
  check_mask_size(a);
  std::uint64_t mask = 0;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      if (d.has_arc(i, a + j)) mask |= std::uint64_t{1} << (i * a + j);
      if (d.has_arc(a + j, i)) mask |= std::uint64_t{1} << (a * a + j * a + i);
    }
  }
  return mask;
}

BipartiteDigraph digraph_from_mask(int a, std::uint64_t mask) {
  check_mask_size(a);
  std::vector<std::uint64_t> out(2 * a, 0);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      if ((mask >> (i * a + j)) & 1U) out[i] |= std::uint64_t{1} << (a + j);
      if ((mask >> (a * a + j * a + i)) & 1U) out[a + j] |= std::uint64_t{1} << i;
    }
  }
  return BipartiteDigraph::from_out_masks(a, std::move(out));
}

std::uint64_t for_each_digraph(int a,
                               const std::function<void(std::uint64_t, const BipartiteDigraph&)>& fn) {
  if (a < 2 || a > kEnumerateMaxClass) {
    throw GraphError("enumeration supports 2 <= a <= " + std::to_string(kEnumerateMaxClass) +
                     ", got " + std::to_string(a));
  }
  const std::uint64_t count = std::uint64_t{1} << (2 * a * a);
  for (std::uint64_t mask = 0; mask < count; ++mask) fn(mask, digraph_from_mask(a, mask));
  return count;
}

std::vector<BipartiteDigraph> enumerate_all(int a, const DigraphFilter& filter) {
  std::vector<BipartiteDigraph> result;
  for_each_digraph(a, [&](std::uint64_t, const BipartiteDigraph& d) {
    if (!filter || filter(d)) result.push_back(d);
  });
  return result;
}

std::uint64_t canonical_form(const BipartiteDigraph& d) {
  const int a = d.class_size();
  if (a > kCanonicalMaxClass) {
    throw GraphError("canonical_form supports a <= " + std::to_string(kCanonicalMaxClass));
  }
  // fwd[i][j]: x_i -> y_j; back[j][i]: y_j -> x_i.
  bool fwd[kCanonicalMaxClass][kCanonicalMaxClass] = {};
  bool back[kCanonicalMaxClass][kCanonicalMaxClass] = {};
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      fwd[i][j] = d.has_arc(i, a + j);
      back[j][i] = d.has_arc(a + j, i);
    }
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> sigma(a), tau(a);
  for (bool swap : {false, true}) {
    // Swapping classes turns x_i -> y_j into y'_i -> x'_j and vice versa.
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::iota(tau.begin(), tau.end(), 0);
      do {
        std::uint64_t mask = 0;
        for (int i = 0; i < a; ++i) {
          for (int j = 0; j < a; ++j) {
            const bool xy = swap ? back[i][j] : fwd[i][j];
            const bool yx = swap ? fwd[j][i] : back[j][i];
            // New labels: X member i -> sigma[i], Y member j -> tau[j].
            const int ni = sigma[i];
            const int nj = tau[j];
            if (xy) mask |= std::uint64_t{1} << (ni * a + nj);
            if (yx) mask |= std::uint64_t{1} << (a * a + nj * a + ni);
          }
        }
        best = std::min(best, mask);
      } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return best;
}

std::vector<BipartiteDigraph> half_degree_exceptions() {
  std::set<std::uint64_t> classes;
  for_each_digraph(3, [&](std::uint64_t, const BipartiteDigraph& d) {
    for (Vertex v = 0; v < d.order(); ++v) {
      const DegreeProfile p = degree(d, v);
      if (p.out < 2 || p.in < 2) return;
    }
    if (!oracle_hamiltonian(d).hamiltonian) classes.insert(canonical_form(d));
  });
  std::vector<BipartiteDigraph> result;
  for (std::uint64_t mask : classes) result.push_back(digraph_from_mask(3, mask));
  return result;
}

const BipartiteDigraph& fig1_digraph() {
  static const BipartiteDigraph cached = [] {
    std::vector<BipartiteDigraph> found = half_degree_exceptions();
    if (found.size() != 1) {
      throw std::logic_error("expected one exceptional class at a = 3, found " +
                             std::to_string(found.size()));
    }
    return found.front();
  }();
  return cached;
}

}  // namespace bipham
