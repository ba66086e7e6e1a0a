// Copyright 2026 The leafdiam Authors
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

// Text formats for trees.
//
// Tree text:  "<n>\n" followed by one "u v\n" line per edge with u < v and
// the edges sorted lexicographically. The reader also tolerates blank lines,
// '#' comment lines, and edges in any order or orientation.
//
// DOT:        "graph T { 0 -- 1; 1 -- 2; }\n" with edges in the same order.

#pragma once

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "leafdiam/tree.hpp"

namespace leafdiam {

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Parses whitespace-separated non-negative decimal integers; nothing else may
// appear on the line.
inline std::vector<long long> parse_ints(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(line.data() + i, line.data() + line.size(), value);
    auto consumed = static_cast<std::size_t>(ptr - (line.data() + i));
    if (ec != std::errc{} || consumed == 0 || value < 0 ||
        (i + consumed < line.size() && line[i + consumed] != ' ' &&
         line[i + consumed] != '\t')) {
      throw ParseError(line_no, "expected non-negative integers, got \"" +
                                    std::string(line) + "\"");
    }
    out.push_back(value);
    i += consumed;
  }
  return out;
}

}  // namespace detail

inline Tree read_tree(std::istream& in) {
  std::string raw;
  int line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto ints = detail::parse_ints(line, line_no);
    if (n < 0) {
      if (ints.size() != 1) {
        throw ParseError(line_no, "expected the vertex count on its own line");
      }
      n = ints[0];
      if (n < 1 || n > 100'000'000) {
        throw ParseError(line_no, "vertex count out of range");
      }
      continue;
    }
    if (ints.size() != 2) {
      throw ParseError(line_no, "expected an edge \"u v\"");
    }
    if (ints[0] >= n || ints[1] >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex not in 0.." +
                      std::to_string(n - 1));
    }
    edges.emplace_back(static_cast<Vertex>(ints[0]),
                       static_cast<Vertex>(ints[1]));
  }
  if (n < 0) throw ParseError(line_no + 1, "missing vertex count");
  return build_tree(static_cast<int>(n), edges);
}

inline Tree read_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_tree(in);
}

inline std::string write_tree(const Tree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (const auto& [u, v] : t.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

inline std::string write_dot(const Tree& t) {
  std::string out = "graph T {";
  if (t.order() == 1) out += " 0;";
  for (const auto& [u, v] : t.edges()) {
    out += ' ' + std::to_string(u) + " -- " + std::to_string(v) + ';';
  }
  out += " }\n";
  return out;
}

}  // namespace leafdiam
