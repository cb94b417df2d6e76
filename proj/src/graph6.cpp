// Copyright 2026 The pstkit Authors
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

#include <fstream>

#include "pstkit/graph.hpp"

namespace pstkit {

namespace {

constexpr int kBias = 63;

int sextet(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < kBias || v > 126) throw ParseError("graph6: character out of range 63..126");
  return v - kBias;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");
  if (text.front() == ':' || text.front() == '&') throw ParseError("graph6: sparse6/digraph6 not supported");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("graph6: truncated vertex count");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i]));
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated vertex count");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i]));
    pos = 8;
  }
  if (n > 100000) throw ParseError("graph6: graph too large for dense storage");

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw ParseError("graph6: length does not match vertex count");

  IntMatrix adj(n, n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if (byte >> (5 - k % 6) & 1) adj(i, j) = adj(j, i) = 1;
    }
  }
  for (; k < bytes * 6; ++k) {
    if (sextet(text[pos + k / 6]) >> (5 - k % 6) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(std::move(adj), {}, std::string(text));
}

std::string write_graph6(const Graph &g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream &in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = trim(line);
    if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
    if (view.empty()) continue;
    graphs.push_back(parse_graph6(view));
  }
  return graphs;
}

std::vector<Graph> read_graph6_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph6 file '" + path + "'");
  return read_graph6_stream(in);
}

}  // namespace pstkit
