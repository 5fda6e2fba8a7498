#include "bipham/hamilton.hpp"

#include <algorithm>
#include <stdexcept>

#include "bipham/oracle.hpp"
#include "json.hpp"

namespace bipham {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHamiltonian: return "hamiltonian";
    case Verdict::kNonHamiltonian: return "non-hamiltonian";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(VerdictSource s) {
  switch (s) {
    case VerdictSource::kConstructor: return "constructor";
    case VerdictSource::kOracle: return "oracle";
    case VerdictSource::kHallCertificate: return "hall-certificate";
    case VerdictSource::kNone: return "none";
  }
  return "none";
}

namespace {

std::vector<Vertex> rotate_to_zero(std::vector<Vertex> cycle) {
  std::rotate(cycle.begin(), std::find(cycle.begin(), cycle.end(), 0), cycle.end());
  return cycle;
}

Matching unmirror(const Matching& m, int a) {
  Matching out{m.direction == MatchDirection::kXToY ? MatchDirection::kYToX
                                                    : MatchDirection::kXToY,
               std::vector<Vertex>(m.mate.size(), -1)};
  for (std::size_t v = 0; v < m.mate.size(); ++v) {
    if (m.mate[v] >= 0) out.mate[mirror_vertex(a, static_cast<Vertex>(v))] = mirror_vertex(a, m.mate[v]);
  }
  return out;
}

DecomposeStrategy strategy_for(const HamiltonOptions& options) {
  if (options.strategy) return *options.strategy;
  return options.mode == SearchMode::kExact ? DecomposeStrategy::kAnyMatching
                                            : DecomposeStrategy::kHeuristic;
}

}  // namespace

HamiltonResult find_hamiltonian_cycle(const BipartiteDigraph& d, const HamiltonOptions& options) {
  HamiltonResult result;
  result.condition_M = check_condition_M(d).satisfied;
  const int a = d.class_size();

  // Decompose along an X->Y matching; fall back to the mirror image, whose
  // X->Y matchings are the Y->X matchings of D.
  std::optional<BipartiteDigraph> mirrored;
  auto forward = find_complete_matching(d, MatchDirection::kXToY);
  if (auto* violator = std::get_if<HallViolator>(&forward)) {
    if (std::holds_alternative<HallViolator>(find_complete_matching(d, MatchDirection::kYToX))) {
      result.verdict = Verdict::kNonHamiltonian;
      result.source = VerdictSource::kHallCertificate;
      result.violator = *violator;
      return result;
    }
    mirrored = mirror(d);
    result.mirrored = true;
  }
  const BipartiteDigraph& work = mirrored ? *mirrored : d;

  const DecomposeOptions decompose_options{strategy_for(options)};
  Decomposition dec = decompose(work, decompose_options);
  result.initial = dec;
  const int cap = options.max_iterations < 0 ? a * a : options.max_iterations;
  while (!dec.hamiltonian(work) && result.iterations < cap) {
    BridgeOutcome outcome = find_bridge_path(work, dec);
    if (auto* report = std::get_if<TerminalReport>(&outcome)) {
      result.terminal = *report;
      break;
    }
    dec = splice(work, dec, std::get<MergePlan>(outcome), decompose_options);
    ++result.iterations;
  }
  result.final = dec;

  if (dec.hamiltonian(work)) {
    std::vector<Vertex> cycle = dec.stages.front().cycle.vertices;
    Matching m = dec.matching;
    if (mirrored) {
      for (Vertex& v : cycle) v = mirror_vertex(a, v);
      m = unmirror(m, a);
    }
    result.cycle = rotate_to_zero(std::move(cycle));
    if (!verify_cycle(d, result.cycle)) {
      throw std::logic_error("constructor produced a cycle that fails verification");
    }
    result.verdict = Verdict::kHamiltonian;
    result.source = VerdictSource::kConstructor;
    result.matching = std::move(m);
    return result;
  }
  if (d.order() <= std::min(options.oracle_cap, kOracleMaxOrder)) {
    OracleResult oracle = oracle_hamiltonian(d);
    result.source = VerdictSource::kOracle;
    result.verdict = oracle.hamiltonian ? Verdict::kHamiltonian : Verdict::kNonHamiltonian;
    result.cycle = std::move(oracle.cycle);
  }
  return result;
}

std::string certificate_json(const BipartiteDigraph& d, const HamiltonResult& result) {
  nlohmann::json doc;
  doc["verdict"] = to_string(result.verdict);
  doc["source"] = to_string(result.source);
  doc["cycle"] = nlohmann::json::array();
  for (Vertex v : result.cycle) doc["cycle"].push_back(label(d, v));
  doc["matching"] = nlohmann::json::array();
  if (result.matching) {
    for (const Arc& arc : result.matching->arcs()) {
      doc["matching"].push_back({label(d, arc.from), label(d, arc.to)});
    }
  }
  doc["stages"] = nlohmann::json::array();
  if (result.initial) {
    for (const Stage& stage : result.initial->stages) {
      doc["stages"].push_back({{"cycle_len", stage.cycle.length()},
                               {"remainder", stage.remainder.size()}});
    }
  }
  doc["iterations"] = result.iterations;
  return doc.dump();
}

}  // namespace bipham
