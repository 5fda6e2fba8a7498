#include "bipham/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace bipham {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) fields.push_back(s.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace

BipartiteDigraph read_text(std::string_view text) {
  int a = -1;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected two fields, got " + std::to_string(fields.size()));
    }
    if (a < 0) {
      if (fields[0] != "a") throw ParseError(line_no, "expected header 'a <int>'");
      int value = 0;
      auto [p, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), value);
      if (ec != std::errc() || p != fields[1].data() + fields[1].size()) {
        throw ParseError(line_no, "class size '" + std::string(fields[1]) + "' is not an integer");
      }
      if (value < 2 || value > kMaxClassSize) {
        throw ParseError(line_no, "class size " + std::to_string(value) + " outside 2.." +
                                      std::to_string(kMaxClassSize));
      }
      a = value;
    } else {
      Arc arc;
      try {
        arc = Arc{parse_label(a, fields[0]), parse_label(a, fields[1])};
      } catch (const GraphError& e) {
        throw ParseError(line_no, e.what());
      }
      if ((arc.from < a) == (arc.to < a)) {
        throw ParseError(line_no, "arc " + std::string(fields[0]) + " " + std::string(fields[1]) +
                                      " joins two vertices of the same class");
      }
      if (!seen.insert(arc).second) {
        throw ParseError(line_no, "duplicate arc " + std::string(fields[0]) + " " +
                                      std::string(fields[1]));
      }
      arcs.push_back(arc);
    }
    if (end == text.size()) break;
  }
  if (a < 0) throw ParseError(0, "missing header 'a <int>'");
  return BipartiteDigraph(a, arcs);
}

std::string write_text(const BipartiteDigraph& d) {
  std::ostringstream out;
  out << "a " << d.class_size() << '\n';
  for (const Arc& arc : d.arcs()) out << label(d, arc.from) << ' ' << label(d, arc.to) << '\n';
  return out.str();
}

BipartiteDigraph read_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("a") || !doc["a"].is_number_integer()) {
    throw ParseError(0, "JSON graph needs an integer field 'a'");
  }
  const int a = doc["a"].get<int>();
  if (a < 2 || a > kMaxClassSize) {
    throw ParseError(0, "class size " + std::to_string(a) + " outside 2.." +
                            std::to_string(kMaxClassSize));
  }
  std::vector<Arc> arcs;
  if (doc.contains("arcs")) {
    if (!doc["arcs"].is_array()) throw ParseError(0, "field 'arcs' must be an array");
    std::size_t index = 0;
    for (const auto& item : doc["arcs"]) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
        throw ParseError(0, "arcs[" + std::to_string(index) + "] must be a pair of labels");
      }
      try {
        arcs.push_back({parse_label(a, item[0].get<std::string>()),
                        parse_label(a, item[1].get<std::string>())});
      } catch (const GraphError& e) {
        throw ParseError(0, "arcs[" + std::to_string(index) + "]: " + e.what());
      }
      ++index;
    }
  }
  return BipartiteDigraph(a, arcs);
}

std::string write_json(const BipartiteDigraph& d) {
  nlohmann::json doc;
  doc["a"] = d.class_size();
  doc["arcs"] = nlohmann::json::array();
  for (const Arc& arc : d.arcs()) doc["arcs"].push_back({label(d, arc.from), label(d, arc.to)});
  return doc.dump() + "\n";
}

BipartiteDigraph read_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return read_json(text);
  return read_text(text);
}

BipartiteDigraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_graph(buffer.str());
}

void write_graph_file(const std::string& path, const BipartiteDigraph& d, bool json) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write '" + path + "'");
  out << (json ? write_json(d) : write_text(d));
}

}  // namespace bipham
