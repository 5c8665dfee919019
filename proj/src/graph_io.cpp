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

#include "pairmatch/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace pairmatch {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

Vertex parse_index(std::string_view token, std::size_t line) {
  Vertex value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line, "malformed vertex token '" + std::string(token) + "'");
  }
  return value;
}

constexpr int kGraph6Offset = 63;

int graph6_value(char c, std::size_t pos) {
  const int b = static_cast<unsigned char>(c);
  if (b < kGraph6Offset || b > 126) {
    throw ParseError(0, "graph6 byte " + std::to_string(b) + " at offset " + std::to_string(pos) +
                            " outside 63..126");
  }
  return b - kGraph6Offset;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Vertex> declared;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> first_seen;
  Vertex max_index = -1;
  bool seen_content = false;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    auto line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(trim(line));
    if (tokens.empty()) continue;

    if (tokens[0] == "n") {
      if (seen_content) throw ParseError(lineno, "vertex count must be declared on the first line");
      if (tokens.size() != 2) throw ParseError(lineno, "expected 'n <count>'");
      declared = parse_index(tokens[1], lineno);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) {
      throw ParseError(lineno, "expected two vertex indices, got " + std::to_string(tokens.size()) +
                                   " tokens");
    }
    const Vertex u = parse_index(tokens[0], lineno);
    const Vertex v = parse_index(tokens[1], lineno);
    if (u == v) throw ParseError(lineno, "loop edge at vertex " + std::to_string(u));
    if (declared && (u >= *declared || v >= *declared)) {
      throw ParseError(lineno, "endpoint exceeds declared vertex count " + std::to_string(*declared));
    }
    const Edge e = make_edge(u, v);
    if (auto [it, fresh] = first_seen.emplace(e, lineno); !fresh) {
      throw ParseError(lineno, "duplicate edge " + to_string(e) + " (first on line " +
                                   std::to_string(it->second) + ")");
    }
    edges.push_back(e);
    max_index = std::max(max_index, e.v);
  }
  return Graph(declared.value_or(max_index + 1), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  auto s = trim(text);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (s.empty()) throw ParseError(0, "empty graph6 string");

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (s[0] != '~') {
    n = graph6_value(s[0], 0);
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~') {
      throw ParseError(0, "graph6 8-byte header: vertex count above " +
                              std::to_string(kGraph6MaxVertices) + " is not supported");
    }
    if (s.size() < 4) throw ParseError(0, "truncated graph6 header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | graph6_value(s[i], i);
    if (n <= 62) throw ParseError(0, "non-canonical graph6 header for n=" + std::to_string(n));
    pos = 4;
  }

  const std::uint64_t bits = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - (n > 0)) / 2;
  const std::uint64_t payload = (bits + 5) / 6;
  if (s.size() - pos < payload) {
    throw ParseError(0, "truncated graph6 payload: expected " + std::to_string(payload) +
                            " bytes, got " + std::to_string(s.size() - pos));
  }
  if (s.size() - pos > payload) throw ParseError(0, "trailing bytes after graph6 payload");

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::uint64_t byte = 0; byte < payload; ++byte) {
    const int value = graph6_value(s[pos + byte], pos + byte);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool bit = (value >> shift) & 1;
      if (k >= bits) {
        if (bit) throw ParseError(0, "non-zero graph6 padding bits");
        continue;
      }
      if (bit) edges.push_back(Edge{i, j});
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n > kGraph6MaxVertices) {
    throw CeilingExceeded("graph6 encoding supports at most " + std::to_string(kGraph6MaxVertices) +
                          " vertices");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kGraph6Offset + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(kGraph6Offset + ((n >> shift) & 0x3f)));
    }
  }
  const std::uint64_t bits = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - (n > 0)) / 2;
  std::vector<std::uint8_t> bitstring(bits, 0);
  for (const auto& e : g.edges()) {
    // column order: (0,1),(0,2),(1,2),(0,3),...
    const std::uint64_t index = static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
    bitstring[index] = 1;
  }
  for (std::uint64_t k = 0; k < bits; k += 6) {
    int value = 0;
    for (std::uint64_t b = 0; b < 6; ++b) {
      value = (value << 1) | (k + b < bits ? bitstring[k + b] : 0);
    }
    out.push_back(static_cast<char>(kGraph6Offset + value));
  }
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> graphs;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(i + 1, e.what());
    } catch (const GraphError& e) {
      throw ParseError(i + 1, e.what());
    }
  }
  return graphs;
}

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::graph6) return parse_graph6_lines(text);
  return {parse_edge_list(text)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace pairmatch
