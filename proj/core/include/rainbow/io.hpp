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

#ifndef RAINBOW_IO_HPP
#define RAINBOW_IO_HPP

#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

// Line-based plain-text instance formats; the exact grammar lives in
// docs/formats.md. Edges are written "u-v" with u < v; "#" starts a comment
// line and blank lines are ignored. Parsers are strict (canonical edge
// order required, matching ids must equal their 0-based position) and throw
// ParseError with the offending line number. serialize_* emit the canonical
// byte-exact form, so parse(serialize(x)) == x.

// Family format:
//   vertices <N>
//   matching 0: <u>-<v> <u>-<v> ...
//   matching 1: ...
ColoredFamily parse_family(const std::string& text);
std::string serialize_family(const ColoredFamily& family);

// Graph format:
//   vertices <N>
//   edges: <u>-<v> <u>-<v> ...
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Parses a space-separated edge list "0-1 2-3" against a vertex budget;
// used for CLI flag values. Line numbers in errors are 0 (not from a file).
EdgeList parse_edge_tokens(const std::string& text, int vertex_count);

// Reads a whole file; throws ParseError (line 0) when unreadable.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rainbow

#endif  // RAINBOW_IO_HPP
