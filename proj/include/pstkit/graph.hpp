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

#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "pstkit/matrix.hpp"

namespace pstkit {

/// Simple undirected graph stored as a dense symmetric 01 adjacency matrix.
///
/// Immutable once built. Loops, multi-edges and weights are rejected by the
/// constructor. Labels are optional; product constructions label vertices
/// with tuples such as "(w,u)" in row-major order of the factors.
class Graph {
 public:
  Graph() = default;
  explicit Graph(IntMatrix adjacency, std::vector<std::string> labels = {}, std::string name = {});

  std::size_t order() const { return adj_.rows(); }
  const IntMatrix &adjacency() const { return adj_; }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &name() const { return name_; }

  /// Label of a vertex, or its index when the graph carries no labels.
  std::string label(std::size_t v) const;

  bool adjacent(std::size_t u, std::size_t v) const { return adj_(u, v) != 0; }
  std::size_t degree(std::size_t v) const;
  std::size_t max_degree() const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph &a, const Graph &b) { return a.adj_ == b.adj_; }

 private:
  IntMatrix adj_;
  std::vector<std::string> labels_;
  std::string name_;
};

enum class Family { path, cycle, complete, star, empty, hypercube };

/// Parses "path", "cycle", "complete", "star", "empty", "hypercube".
Family parse_family(std::string_view name);

/// Standard family member. `k` is the vertex count, except for star (number
/// of leaves) and hypercube (dimension).
Graph make_named(Family family, std::size_t k);

Graph tensor(const Graph &x, const Graph &y);
Graph cartesian(const Graph &x, const Graph &y);
/// Y□Y□...□Y with k factors.
Graph cartesian_power(const Graph &y, std::size_t k);
Graph complement(const Graph &x);

/// The 2n-vertex graph with block adjacency [[A(X), A(Y)], [A(Y), A(X)]].
Graph switching_pair(const Graph &x, const Graph &y);
/// Same block form with A(Y) = I: each vertex joined to its copy.
Graph matching_cover(const Graph &x);

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph &g);

/// Reads one graph per line. Blank lines and a leading ">>graph6<<" header
/// are ignored.
std::vector<Graph> read_graph6_stream(std::istream &in);
std::vector<Graph> read_graph6_file(const std::string &path);

}  // namespace pstkit
