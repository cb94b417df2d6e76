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

#include "pstkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace pstkit {

Graph::Graph(IntMatrix adjacency, std::vector<std::string> labels, std::string name)
    : adj_(std::move(adjacency)), labels_(std::move(labels)), name_(std::move(name)) {
  if (!adj_.square()) throw InvalidParameterError("adjacency matrix must be square");
  const std::size_t n = adj_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (adj_(i, i) != 0) throw InvalidParameterError("loops are not allowed");
    for (std::size_t j = 0; j < n; ++j) {
      auto a = adj_(i, j);
      if (a != 0 && a != 1) throw InvalidParameterError("adjacency entries must be 0 or 1");
      if (a != adj_(j, i)) throw InvalidParameterError("adjacency matrix must be symmetric");
    }
  }
  if (!labels_.empty()) {
    if (labels_.size() != n) throw InvalidParameterError("label count differs from vertex count");
    std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n) throw InvalidParameterError("vertex labels must be distinct");
  }
}

std::string Graph::label(std::size_t v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < order(); ++j) d += adj_(v, j) != 0;
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::edge_count() const {
  std::size_t e = 0;
  for (std::size_t v = 0; v < order(); ++v) e += degree(v);
  return e / 2;
}

Family parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "empty") return Family::empty;
  if (name == "hypercube") return Family::hypercube;
  throw ParseError("unknown graph family '" + std::string(name) + "'");
}

Graph make_named(Family family, std::size_t k) {
  if (k == 0) throw InvalidParameterError("family parameter must be positive");
  switch (family) {
    case Family::path: {
      IntMatrix a(k, k);
      for (std::size_t i = 0; i + 1 < k; ++i) a(i, i + 1) = a(i + 1, i) = 1;
      return Graph(std::move(a), {}, "P" + std::to_string(k));
    }
    case Family::cycle: {
      if (k < 3) throw InvalidParameterError("cycle needs at least 3 vertices");
      IntMatrix a(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = (i + 1) % k;
        a(i, j) = a(j, i) = 1;
      }
      return Graph(std::move(a), {}, "C" + std::to_string(k));
    }
    case Family::complete: {
      IntMatrix a(k, k, 1);
      for (std::size_t i = 0; i < k; ++i) a(i, i) = 0;
      return Graph(std::move(a), {}, "K" + std::to_string(k));
    }
    case Family::star: {
      // Center is vertex 0.
      IntMatrix a(k + 1, k + 1);
      for (std::size_t i = 1; i <= k; ++i) a(0, i) = a(i, 0) = 1;
      return Graph(std::move(a), {}, "S" + std::to_string(k));
    }
    case Family::empty:
      return Graph(IntMatrix(k, k), {}, "E" + std::to_string(k));
    case Family::hypercube: {
      if (k > 20) throw InvalidParameterError("hypercube dimension too large");
      const std::size_t n = std::size_t{1} << k;
      IntMatrix a(n, n);
      std::vector<std::string> labels(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = std::popcount(i ^ j) == 1;
        std::string bits(k, '0');
        for (std::size_t b = 0; b < k; ++b)
          if (i >> (k - 1 - b) & 1) bits[b] = '1';
        labels[i] = bits;
      }
      return Graph(std::move(a), std::move(labels), "Q" + std::to_string(k));
    }
  }
  throw InvalidParameterError("unknown family");
}

namespace {

std::vector<std::string> pair_labels(const Graph &x, const Graph &y) {
  std::vector<std::string> labels;
  labels.reserve(x.order() * y.order());
  for (std::size_t w = 0; w < x.order(); ++w)
    for (std::size_t u = 0; u < y.order(); ++u)
      labels.push_back("(" + x.label(w) + "," + y.label(u) + ")");
  return labels;
}

}  // namespace

Graph tensor(const Graph &x, const Graph &y) {
  return Graph(kronecker(x.adjacency(), y.adjacency()), pair_labels(x, y),
               "tensor(" + x.name() + "," + y.name() + ")");
}

Graph cartesian(const Graph &x, const Graph &y) {
  auto a = kronecker(x.adjacency(), IntMatrix::identity(y.order()));
  a += kronecker(IntMatrix::identity(x.order()), y.adjacency());
  return Graph(std::move(a), pair_labels(x, y), "cartesian(" + x.name() + "," + y.name() + ")");
}

Graph cartesian_power(const Graph &y, std::size_t k) {
  if (k == 0) throw InvalidParameterError("cartesian power needs k >= 1");
  Graph out = y;
  for (std::size_t i = 1; i < k; ++i) out = cartesian(out, y);
  return out;
}

Graph complement(const Graph &x) {
  const std::size_t n = x.order();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i != j && !x.adjacent(i, j)) ? 1 : 0;
  return Graph(std::move(a), x.labels(), "complement(" + x.name() + ")");
}

namespace {

Graph layered(const IntMatrix &a, const IntMatrix &b, const Graph &x, std::string name) {
  const std::size_t n = a.rows();
  IntMatrix m(2 * n, 2 * n);
  std::vector<std::string> labels(2 * n);
  for (std::size_t layer = 0; layer < 2; ++layer)
    for (std::size_t u = 0; u < n; ++u) labels[layer * n + u] = "(" + std::to_string(layer) + "," + x.label(u) + ")";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = m(n + i, n + j) = a(i, j);
      m(i, n + j) = m(n + i, j) = b(i, j);
    }
  return Graph(std::move(m), std::move(labels), std::move(name));
}

}  // namespace

Graph switching_pair(const Graph &x, const Graph &y) {
  if (x.order() != y.order()) throw SizeMismatchError("switching pair needs graphs of equal order");
  return layered(x.adjacency(), y.adjacency(), x, "switching(" + x.name() + "," + y.name() + ")");
}

Graph matching_cover(const Graph &x) {
  return layered(x.adjacency(), IntMatrix::identity(x.order()), x, "matching_cover(" + x.name() + ")");
}

}  // namespace pstkit
