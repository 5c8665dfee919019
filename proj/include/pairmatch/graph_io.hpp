// Copyright 2026 The pairmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pairmatch/graph.hpp"

namespace pairmatch {

/// Input error carrying the 1-based line it was found on (0 when the input is
/// a single token such as one graph6 string).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list text: one "u v" pair per line, an optional leading "n <count>"
/// line, '#' starts a comment, blank lines are ignored. Without a declared
/// count the vertex count is 1 + the largest index seen.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// Largest vertex count representable by the 1- and 4-byte graph6 headers.
inline constexpr Vertex kGraph6MaxVertices = 258047;

/// Decodes one graph6 string (surrounding whitespace and an optional
/// ">>graph6<<" prefix are accepted).
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// One graph per non-blank line; errors carry the line number.
std::vector<Graph> parse_graph6_lines(std::string_view text);

enum class GraphFormat { edge_list, graph6 };

/// Reads every graph in `text`: graph6 yields one per line, an edge list
/// yields exactly one.
std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format);
std::string read_file(const std::string& path);

}  // namespace pairmatch
