#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bipham/compat.hpp"
#include "bipham/conditions.hpp"
#include "bipham/digraph.hpp"
#include "bipham/matching.hpp"

namespace bipham {

// One step of a decomposition: the cycle C_j chosen inside the remainder
// R_j, and a complete X->Y matching M_j of R_j it is compatible with.
struct Stage {
  VertexSet remainder;
  Matching matching;
  CycleCertificate cycle;

  int a() const { return remainder.size() / 2; }
  int c() const { return cycle.length() / 2; }
};

enum class DecomposeStrategy {
  // Longest cycle over every complete matching of R_j: all matchings for
  // small classes, otherwise swap-neighbourhood search from a start matching.
  kAnyMatching,
  // Longest cycle whose complement in R_j still has a complete matching,
  // by subset DP (small remainders only).
  kVertexSetDp,
  // One matching throughout, exact longest compatible cycle per stage.
  kFixedMatching,
  // One matching throughout, extension procedure per stage.
  kHeuristic,
};

struct DecomposeOptions {
  DecomposeStrategy strategy = DecomposeStrategy::kAnyMatching;
  // kAnyMatching enumerates all matchings while a_j is at most this.
  int exhaustive_max_class = 6;
};

struct Decomposition {
  std::vector<Stage> stages;
  // M_j on V(C_j); the last available stage matching on the leftover.
  Matching matching;
  VertexSet leftover;

  bool complete() const { return leftover.size() <= 2; }
  bool hamiltonian(const BipartiteDigraph& d) const {
    return stages.size() == 1 && stages.front().cycle.length() == d.order();
  }
};

// Thrown when a remainder has no complete X->Y matching.
class NoCompleteMatching : public GraphError {
 public:
  NoCompleteMatching(VertexSet within, HallViolator violator);
  VertexSet within() const { return within_; }
  const HallViolator& violator() const { return violator_; }

 private:
  VertexSet within_;
  HallViolator violator_;
};

// Decomposes D into disjoint compatible cycles until at most two vertices
// remain. Stops early, leaving a larger leftover, when a remainder has no
// qualifying cycle. Throws NoCompleteMatching when D itself has no X->Y
// complete matching.
Decomposition decompose(const BipartiteDigraph& d, const DecomposeOptions& options = {});

// Same, over the vertex set `within`; `start` (complete on `within`) seeds
// the fixed-matching strategies and the neighbourhood search.
Decomposition decompose_within(const BipartiteDigraph& d, VertexSet within,
                               const DecomposeOptions& options,
                               const std::optional<Matching>& start = std::nullopt);

// Structural problems of a decomposition of all of D, one message each:
// partition, certificates, matchings, cycle lengths c_j >= a_j / 2 and
// c_j <= c_{j-1}, leftover size. With check_maximality, also compares each
// |C_j| against longest_matchable_cycle on R_j.
std::vector<std::string> validate_decomposition(const BipartiteDigraph& d,
                                                const Decomposition& dec,
                                                bool check_maximality = false);

struct StageConditionFailure {
  int stage = 0;  // the failing remainder is R_{stage + 1}
  ConditionReport report;
};

// Condition (A) on every remainder R_{j+1} with at least 4 vertices, using
// M_j restricted to it. Returns the first failure.
std::optional<StageConditionFailure> check_stage_condition_A(const BipartiteDigraph& d,
                                                             const Decomposition& dec);

enum class SpliceKind {
  kChord,        // replace a run of the cycle by the path
  kDoubleChord,  // insert the path and re-route the skipped run
  kPairInsert,   // replace one matching arc by a detour, re-matching R_t
};

struct MergePlan {
  int target = 0;  // stage index t of the cycle that grows
  SpliceKind kind = SpliceKind::kChord;
  // The bridge with its endpoints on C_t: (y_i0, u, ..., v, x_j0) for the
  // chord forms, (x_i0, q, ..., q', y_i0) for a pair insert.
  PathCertificate path;
  int i0 = 0;   // pair indices into C_t (pair p is vertices 2p, 2p + 1)
  int j0 = 0;
  int s = -1;   // re-routing position of a double chord
  int mu = 0;   // pairs of C_t strictly between y_i0 and x_j0
  bool covers_later = false;  // the path meets every later component
  CycleCertificate result;
  Matching matching;  // complete on R_t, compatible with result
};

// No arc from Y(component from) to X(component to). Components are the
// stage indices 0..k-1, and k for the leftover.
struct MissingLink {
  int from = 0;
  int to = 0;
  bool operator==(const MissingLink&) const = default;
};

struct TerminalReport {
  std::vector<MissingLink> missing;
  std::string describe(const Decomposition& dec) const;
};

using BridgeOutcome = std::variant<MergePlan, TerminalReport>;

struct BridgeOptions {
  int path_cap = 20000;  // simple paths examined per target cycle
};

// Searches the targets C_k, C_{k-1}, ..., C_1 in turn for a bridge through
// the later components that lengthens the target. Returns the best plan of
// the first target that has one.
BridgeOutcome find_bridge_path(const BipartiteDigraph& d, const Decomposition& dec,
                               const BridgeOptions& options = {});

// Replaces C_t by the plan's cycle and re-derives every later stage.
// Throws GraphError when the plan does not fit dec.
Decomposition splice(const BipartiteDigraph& d, const Decomposition& dec, const MergePlan& plan,
                     const DecomposeOptions& options = {});

enum class Verdict { kHamiltonian, kNonHamiltonian, kUnknown };
enum class VerdictSource { kConstructor, kOracle, kHallCertificate, kNone };

std::string to_string(Verdict v);
std::string to_string(VerdictSource s);

struct HamiltonOptions {
  SearchMode mode = SearchMode::kExact;
  // Overrides the strategy implied by mode.
  std::optional<DecomposeStrategy> strategy;
  int oracle_cap = 24;       // largest order handed to the oracle
  int max_iterations = -1;   // splice rounds; negative means a^2
};

struct HamiltonResult {
  Verdict verdict = Verdict::kUnknown;
  VerdictSource source = VerdictSource::kNone;
  std::vector<Vertex> cycle;  // hamiltonian cycle, starting at x0
  std::optional<Matching> matching;  // constructor only
  // First and final decomposition, in the orientation actually used.
  std::optional<Decomposition> initial;
  std::optional<Decomposition> final;
  std::optional<TerminalReport> terminal;
  std::optional<HallViolator> violator;  // X->Y side when both directions fail
  int iterations = 0;
  bool condition_M = false;
  bool mirrored = false;  // matching runs Y->X in D
};

// Decompose, then bridge and splice until C_1 is hamiltonian. Without a
// certificate the oracle decides up to oracle_cap vertices; a Hall violator
// in both directions also settles non-hamiltonicity. Otherwise unknown.
HamiltonResult find_hamiltonian_cycle(const BipartiteDigraph& d,
                                      const HamiltonOptions& options = {});

// {"cycle":[...],"matching":[[x,y],...],"stages":[{"cycle_len":..,"remainder":..}]}
std::string certificate_json(const BipartiteDigraph& d, const HamiltonResult& result);

}  // namespace bipham
