// Copyright 2026 The Rainbow Authors.
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

#include "rainbow/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

bool is_skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

int parse_int(const std::string& token, int line_no, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line_no, "expected non-negative integer for " + what +
                                  ", got '" + token + "'");
  }
  return value;
}

// "u-v" within the vertex budget. Endpoint order is normalized on input;
// serializers always emit u < v.
Edge parse_edge_token(const std::string& token, int vertex_count,
                      int line_no) {
  const auto dash = token.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
    throw ParseError(line_no, "malformed edge '" + token + "'");
  }
  const int u = parse_int(token.substr(0, dash), line_no, "edge endpoint");
  const int v = parse_int(token.substr(dash + 1), line_no, "edge endpoint");
  if (u == v) {
    throw ParseError(line_no, "self-loop edge '" + token + "'");
  }
  if (u >= vertex_count || v >= vertex_count) {
    throw ParseError(line_no, "edge '" + token + "' out of range for " +
                                  std::to_string(vertex_count) + " vertices");
  }
  return Edge(u, v);
}

struct LineReader {
  std::vector<std::pair<int, std::string>> lines;  // (line number, content)

  explicit LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!is_skippable(line)) lines.emplace_back(number, line);
    }
  }
};

int parse_vertices_header(const std::pair<int, std::string>& line) {
  const auto tokens = split_ws(line.second);
  if (tokens.size() != 2 || tokens[0] != "vertices") {
    throw ParseError(line.first, "expected 'vertices <N>'");
  }
  return parse_int(tokens[1], line.first, "vertex count");
}

}  // namespace

ColoredFamily parse_family(const std::string& text) {
  const LineReader reader(text);
  if (reader.lines.empty()) {
    throw ParseError(0, "empty family: missing 'vertices <N>' line");
  }
  ColoredFamily family;
  family.vertex_count = parse_vertices_header(reader.lines.front());

  for (std::size_t i = 1; i < reader.lines.size(); ++i) {
    const auto& [line_no, line] = reader.lines[i];
    auto tokens = split_ws(line);
    if (tokens.size() < 2 || tokens[0] != "matching" ||
        tokens[1].back() != ':') {
      throw ParseError(line_no, "expected 'matching <id>: <edges>'");
    }
    tokens[1].pop_back();
    const int id = parse_int(tokens[1], line_no, "matching id");
    if (id != static_cast<int>(family.matchings.size())) {
      throw ParseError(line_no, "matching id " + std::to_string(id) +
                                    " does not equal its position " +
                                    std::to_string(family.matchings.size()));
    }
    EdgeList edges;
    VertexSet used;
    for (std::size_t t = 2; t < tokens.size(); ++t) {
      const Edge e = parse_edge_token(tokens[t], family.vertex_count, line_no);
      if (used.count(e.u) || used.count(e.v)) {
        throw ParseError(line_no, "edge '" + tokens[t] +
                                      "' overlaps an earlier edge of the "
                                      "same matching");
      }
      used.insert(e.u);
      used.insert(e.v);
      edges.push_back(e);
    }
    family.matchings.emplace_back(std::move(edges));
  }
  return family;
}

std::string serialize_family(const ColoredFamily& family) {
  std::string out = "vertices " + std::to_string(family.vertex_count) + "\n";
  for (std::size_t c = 0; c < family.matchings.size(); ++c) {
    out += "matching " + std::to_string(c) + ":";
    for (const Edge& e : family.matchings[c].edges()) {
      out += " " + e.to_string();
    }
    out += "\n";
  }
  return out;
}

Graph parse_graph(const std::string& text) {
  const LineReader reader(text);
  if (reader.lines.empty()) {
    throw ParseError(0, "empty graph: missing 'vertices <N>' line");
  }
  const int vertex_count = parse_vertices_header(reader.lines.front());
  if (reader.lines.size() != 2) {
    throw ParseError(reader.lines.size() < 2 ? 0 : reader.lines[2].first,
                     "expected exactly one 'edges:' line");
  }
  const auto& [line_no, line] = reader.lines[1];
  const auto tokens = split_ws(line);
  if (tokens.empty() || tokens[0] != "edges:") {
    throw ParseError(line_no, "expected 'edges: <edges>'");
  }
  EdgeList edges;
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    edges.push_back(parse_edge_token(tokens[t], vertex_count, line_no));
  }
  return Graph(vertex_count, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
  out += "edges:";
  for (const Edge& e : g.edges()) {
    out += " " + e.to_string();
  }
  out += "\n";
  return out;
}

EdgeList parse_edge_tokens(const std::string& text, int vertex_count) {
  EdgeList edges;
  for (const std::string& token : split_ws(text)) {
    edges.push_back(parse_edge_token(token, vertex_count, 0));
  }
  return edges;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(0, "cannot open file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError(0, "cannot write file '" + path + "'");
  }
  out << content;
}

}  // namespace rainbow
