#include "bipham/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "bipham/conditions.hpp"
#include "bipham/generators.hpp"
#include "bipham/hamilton.hpp"
#include "bipham/io.hpp"
#include "bipham/matching.hpp"
#include "bipham/oracle.hpp"
#include "json.hpp"

namespace bipham::cli {

namespace {

using nlohmann::json;

std::string labels(const BipartiteDigraph& d, const std::vector<Vertex>& vertices) {
  std::string text;
  for (Vertex v : vertices) text += (text.empty() ? "" : " ") + label(d, v);
  return text;
}

json label_array(const BipartiteDigraph& d, const std::vector<Vertex>& vertices) {
  json array = json::array();
  for (Vertex v : vertices) array.push_back(label(d, v));
  return array;
}

struct CheckLine {
  std::string name;
  std::optional<bool> satisfied;  // nullopt: not applicable
  std::optional<Witness> witness;
  std::string note;
};

int cmd_check(const std::string& path, bool as_json, std::ostream& out) {
  const BipartiteDigraph d = read_graph_file(path);
  std::vector<CheckLine> lines;
  auto add = [&](const std::string& name, const ConditionReport& report) {
    lines.push_back({name, report.satisfied, report.witness, ""});
  };
  add("condition-M", check_condition_M(d));
  auto matching = find_complete_matching(d);
  if (auto* m = std::get_if<Matching>(&matching)) {
    add("condition-A", check_condition_A(d, *m));
  } else {
    lines.push_back({"condition-A", std::nullopt, std::nullopt, "no complete X->Y matching"});
  }
  add("min-degree", check_min_degree(d));
  add("half-degrees", check_half_degrees(d));
  add("woodall", check_woodall_bipartite(d));
  lines.push_back({"strongly-connected", is_strongly_connected(d), std::nullopt, ""});

  if (as_json) {
    json doc;
    doc["a"] = d.class_size();
    doc["checks"] = json::array();
    for (const CheckLine& line : lines) {
      json entry{{"name", line.name}};
      entry["satisfied"] = line.satisfied ? json(*line.satisfied) : json(nullptr);
      if (line.witness) {
        entry["witness"] = {{"vertices", label_array(d, line.witness->vertices)},
                            {"achieved", line.witness->achieved},
                            {"required", line.witness->required}};
      }
      if (!line.note.empty()) entry["note"] = line.note;
      doc["checks"].push_back(entry);
    }
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "a " << d.class_size() << '\n';
  for (const CheckLine& line : lines) {
    out << line.name << ' ' << (!line.satisfied ? "n/a" : *line.satisfied ? "pass" : "fail");
    if (line.witness) {
      out << ' ' << labels(d, line.witness->vertices) << " achieved " << line.witness->achieved
          << " required " << line.witness->required;
    }
    if (!line.note.empty()) out << ' ' << line.note;
    out << '\n';
  }
  return kOk;
}

int cmd_hamilton(const std::string& path, bool heuristic, int cap, bool as_json,
                 std::ostream& out) {
  const BipartiteDigraph d = read_graph_file(path);
  HamiltonOptions options;
  options.mode = heuristic ? SearchMode::kHeuristic : SearchMode::kExact;
  options.oracle_cap = cap;
  const HamiltonResult result = find_hamiltonian_cycle(d, options);
  const bool verified = !result.cycle.empty() && verify_cycle(d, result.cycle);
  if (as_json) {
    json doc = json::parse(certificate_json(d, result));
    doc["verified"] = verified;
    if (result.terminal && result.final) doc["terminal"] = result.terminal->describe(*result.final);
    out << doc.dump() << '\n';
  } else {
    out << "verdict " << to_string(result.verdict) << '\n';
    out << "source " << to_string(result.source) << '\n';
    if (!result.cycle.empty()) {
      out << "cycle " << labels(d, result.cycle) << '\n';
      out << "verified " << (verified ? "yes" : "no") << '\n';
    }
    if (result.source == VerdictSource::kConstructor) {
      out << "iterations " << result.iterations << '\n';
    }
    if (result.terminal && result.final) {
      out << "terminal " << result.terminal->describe(*result.final) << '\n';
    }
  }
  return result.verdict == Verdict::kUnknown ? kUnknown : kOk;
}

int cmd_oracle(const std::string& path, int cap, bool as_json, std::ostream& out) {
  const BipartiteDigraph d = read_graph_file(path);
  if (d.order() > cap) {
    if (as_json) {
      out << json{{"verdict", "unknown"}, {"reason", "order above cap"}}.dump() << '\n';
    } else {
      out << "verdict unknown (order " << d.order() << " above cap " << cap << ")\n";
    }
    return kUnknown;
  }
  const OracleResult result = oracle_hamiltonian(d);
  const std::string verdict = result.hamiltonian ? "hamiltonian" : "non-hamiltonian";
  if (as_json) {
    out << json{{"verdict", verdict}, {"cycle", label_array(d, result.cycle)}}.dump() << '\n';
  } else {
    out << "verdict " << verdict << '\n';
    if (result.hamiltonian) out << "cycle " << labels(d, result.cycle) << '\n';
  }
  return kOk;
}

int cmd_gen(const FamilySpec& spec, const std::string& out_path, bool as_json, std::ostream& out) {
  const BipartiteDigraph d = generate(spec);
  if (!out_path.empty()) {
    write_graph_file(out_path, d, as_json);
  } else {
    out << (as_json ? write_json(d) : write_text(d));
  }
  return kOk;
}

std::vector<Vertex> read_cycle(const BipartiteDigraph& d, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<Vertex> cycle;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("cycle") || !doc["cycle"].is_array()) {
      throw ParseError(0, "certificate needs a 'cycle' array");
    }
    for (const auto& item : doc["cycle"]) {
      if (!item.is_string()) throw ParseError(0, "cycle entries must be labels");
      cycle.push_back(parse_label(d.class_size(), item.get<std::string>()));
    }
    return cycle;
  }
  std::istringstream words(text);
  for (std::string word; words >> word;) {
    if (word == "cycle") continue;  // accepts the hamilton text line as-is
    cycle.push_back(parse_label(d.class_size(), word));
  }
  return cycle;
}

int cmd_verify(const std::string& graph_path, const std::string& cycle_path, bool as_json,
               std::ostream& out) {
  const BipartiteDigraph d = read_graph_file(graph_path);
  const std::vector<Vertex> cycle = read_cycle(d, cycle_path);
  const bool valid = verify_cycle(d, cycle);
  if (as_json) {
    out << json{{"valid", valid}, {"length", cycle.size()}}.dump() << '\n';
  } else {
    out << (valid ? "valid" : "invalid") << '\n';
  }
  return kOk;
}

int cmd_survey(int a, bool rows, bool as_json, std::ostream& out, std::ostream& err) {
  if (a < 2 || a > kEnumerateMaxClass) {
    throw GraphError("survey supports 2 <= a <= " + std::to_string(kEnumerateMaxClass));
  }
  // Both half-degrees at least ceil((a + 1) / 2).
  const int half_bound = (a + 2) / 2;
  std::map<std::string, std::uint64_t> counts;
  for (const char* key :
       {"total", "condition_M", "condition_M_hamiltonian", "condition_M_certified", "min_degree",
        "min_degree_without_M", "half_degree", "half_degree_nonhamiltonian"}) {
    counts[key] = 0;
  }
  std::set<std::uint64_t> exceptional;
  if (rows) out << "mask,condition_M,min_degree,half_degree,hamiltonian\n";
  const std::uint64_t total = std::uint64_t{1} << (2 * a * a);
  for_each_digraph(a, [&](std::uint64_t mask, const BipartiteDigraph& d) {
    if (mask % 65536 == 0 && mask > 0) err << "survey: " << mask << "/" << total << '\n';
    ++counts["total"];
    const bool m = check_condition_M(d).satisfied;
    const bool md = check_min_degree(d).satisfied;
    bool half = true;
    for (Vertex v = 0; v < d.order() && half; ++v) {
      const DegreeProfile p = degree(d, v);
      half = p.out >= half_bound && p.in >= half_bound;
    }
    std::optional<bool> ham;
    if (m || half || rows) ham = oracle_hamiltonian(d).hamiltonian;
    if (m) {
      ++counts["condition_M"];
      if (*ham) ++counts["condition_M_hamiltonian"];
      if (find_hamiltonian_cycle(d).source == VerdictSource::kConstructor) {
        ++counts["condition_M_certified"];
      }
    }
    if (md) {
      ++counts["min_degree"];
      if (!m) ++counts["min_degree_without_M"];
    }
    if (half) {
      ++counts["half_degree"];
      if (!*ham) {
        ++counts["half_degree_nonhamiltonian"];
        if (a <= kCanonicalMaxClass) exceptional.insert(canonical_form(d));
      }
    }
    if (rows) {
      out << mask << ',' << m << ',' << md << ',' << half << ',' << *ham << '\n';
    }
  });
  counts["half_degree_nonhamiltonian_classes"] = exceptional.size();
  if (rows) return kOk;
  if (as_json) {
    json doc{{"a", a}, {"counts", json::object()}};
    for (const auto& [key, value] : counts) doc["counts"][key] = value;
    out << doc.dump() << '\n';
  } else {
    out << "filter,count\n";
    for (const auto& [key, value] : counts) out << key << ',' << value << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonicity tools for balanced bipartite digraphs", "bipham"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string path;
  auto* check = app.add_subcommand("check", "Report every degree condition with witnesses");
  check->add_option("graph", path, "Graph file (text or JSON)")->required();

  bool exact = false;
  bool heuristic = false;
  int cap = kOracleMaxOrder;
  auto* hamilton = app.add_subcommand("hamilton", "Construct a hamiltonian cycle or decide none exists");
  hamilton->add_option("graph", path, "Graph file (text or JSON)")->required();
  auto* exact_flag = hamilton->add_flag("--exact", exact, "Exact cycle searches (default)");
  hamilton->add_flag("--heuristic", heuristic, "Extension procedure per stage")->excludes(exact_flag);
  hamilton->add_option("--cap", cap, "Largest order handed to the oracle")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Exact hamiltonicity by subset DP");
  oracle->add_option("graph", path, "Graph file (text or JSON)")->required();
  oracle->add_option("--cap", cap, "Largest order accepted")->capture_default_str();

  std::string family;
  FamilySpec spec;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a generated digraph");
  gen->add_option("family", family, "Dprime, Dak, Tak, complete, fig1 or random")->required();
  gen->add_option("--a", spec.a, "Class size")->required();
  gen->add_option("--k", spec.k, "Block size for Dak and Tak");
  gen->add_option("--seed", spec.seed, "Random seed");
  gen->add_option("--budget", spec.budget, "Deletions for random (negative: until stuck)");
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  int survey_a = 2;
  bool rows = false;
  auto* survey = app.add_subcommand("survey", "Exhaustive counts over all digraphs of a class size");
  survey->add_option("--a", survey_a, "Class size (at most 3)")->required();
  survey->add_flag("--rows", rows, "One CSV row per digraph instead of counts");

  std::string cycle_path;
  auto* verify = app.add_subcommand("verify", "Check a hamiltonian cycle certificate");
  verify->add_option("graph", path, "Graph file (text or JSON)")->required();
  verify->add_option("cycle", cycle_path, "Cycle labels or a JSON certificate")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  const bool as_json = format == "json";
  try {
    if (*check) return cmd_check(path, as_json, out);
    if (*hamilton || *oracle) {
      if (cap < 0 || cap > kOracleMaxOrder) {
        err << "error: --cap must lie in 0.." << kOracleMaxOrder << '\n';
        return kInputError;
      }
      return *hamilton ? cmd_hamilton(path, heuristic, cap, as_json, out)
                       : cmd_oracle(path, cap, as_json, out);
    }
    if (*gen) {
      spec.family = parse_family(family);
      return cmd_gen(spec, out_path, as_json, out);
    }
    if (*survey) return cmd_survey(survey_a, rows, as_json, out, err);
    if (*verify) return cmd_verify(path, cycle_path, as_json, out);
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace bipham::cli
