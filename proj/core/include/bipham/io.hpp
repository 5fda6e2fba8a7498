#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "bipham/digraph.hpp"

namespace bipham {

// Parse failure; line() is 1-based, or 0 when the error is not tied to a line.
class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& message)
      : GraphError(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   a <int>
//   <src> <dst>        one arc per line, x/y labels
// '#' starts a comment; blank lines are ignored; arcs must be unique.
BipartiteDigraph read_text(std::string_view text);
std::string write_text(const BipartiteDigraph& d);

// JSON mirror: {"a": <int>, "arcs": [["x0","y1"], ...]}.
BipartiteDigraph read_json(std::string_view text);
std::string write_json(const BipartiteDigraph& d);

// Picks the JSON reader when the first non-blank character is '{'.
BipartiteDigraph read_graph(std::string_view text);
BipartiteDigraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const BipartiteDigraph& d, bool json = false);

}  // namespace bipham
