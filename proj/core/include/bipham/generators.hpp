#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bipham/digraph.hpp"

namespace bipham {

enum class Family { kDprime, kDak, kTak, kComplete, kFig1, kRandom };

std::string to_string(Family f);
// Accepts the names printed by to_string; throws GraphError otherwise.
Family parse_family(const std::string& name);

struct FamilySpec {
  Family family = Family::kComplete;
  int a = 2;
  int k = 0;
  std::uint64_t seed = 0;
  int budget = -1;  // random: successful deletions; negative means no limit
};

// Blocks: R = x0..x_{a/2-1}, S = the rest of X; U = y0..y_{a/2-1}, W = the
// rest of Y. Arcs r -> every y, u -> every x, s <-> w. Requires even a >= 2.
BipartiteDigraph gen_Dprime(int a);
// |R| = |U| = k: r <-> every y, u <-> every x, s -> w. Requires 1 <= k < a/2.
BipartiteDigraph gen_Dak(int a, int k);
// |R| = |U| = k: r -> u, u -> s, s -> w, w -> r. Requires 1 <= k < a/2.
BipartiteDigraph gen_Tak(int a, int k);

struct RandomStep {
  Arc arc;
  bool deleted = false;  // false: the deletion would have broken (M)
};

struct RandomSample {
  BipartiteDigraph digraph;
  std::vector<RandomStep> log;
};

// From the complete digraph, repeatedly pick a not-yet-tried arc uniformly
// and delete it unless that breaks condition (M). A rejected arc stays
// rejected, since later deletions only lower degrees. Stops after `budget`
// deletions or when every arc has been tried. mt19937_64 seeded by `seed`.
RandomSample gen_random_M(int a, std::uint64_t seed, int budget);

// Each cross arc present independently with probability p.
BipartiteDigraph gen_random_arcs(int a, std::uint64_t seed, double p);

BipartiteDigraph generate(const FamilySpec& spec);

// Arc bit layout for enumeration: x_i -> y_j is bit i*a + j, y_j -> x_i is
// bit a^2 + j*a + i. Needs 2a^2 <= 64.
std::uint64_t arc_mask(const BipartiteDigraph& d);
BipartiteDigraph digraph_from_mask(int a, std::uint64_t mask);

inline constexpr int kEnumerateMaxClass = 3;

// Calls fn on every digraph with class size a (a <= kEnumerateMaxClass) in
// increasing mask order. Returns how many were visited.
std::uint64_t for_each_digraph(int a,
                               const std::function<void(std::uint64_t, const BipartiteDigraph&)>& fn);

using DigraphFilter = std::function<bool(const BipartiteDigraph&)>;
std::vector<BipartiteDigraph> enumerate_all(int a, const DigraphFilter& filter = {});

inline constexpr int kCanonicalMaxClass = 4;

// Smallest arc mask over all relabelings that permute X, permute Y, and
// optionally swap the classes (a! * a! * 2 of them).
std::uint64_t canonical_form(const BipartiteDigraph& d);

// The non-hamiltonian digraphs with a = 3 and both half-degrees at least 2,
// grouped by canonical form; one representative (the canonical one) each.
std::vector<BipartiteDigraph> half_degree_exceptions();

// The unique member of half_degree_exceptions(), derived on first use and
// cached. Throws std::logic_error if the enumeration does not give exactly
// one class.
const BipartiteDigraph& fig1_digraph();

}  // namespace bipham
