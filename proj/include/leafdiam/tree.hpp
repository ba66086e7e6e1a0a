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

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leafdiam/error.hpp"

namespace leafdiam {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// An undirected labeled tree on vertices 0..n-1.
///
/// Instances are only produced by build_tree() (or by copying one that was),
/// so every Tree in circulation is connected, acyclic, and has sorted
/// neighbor lists. Trees are immutable values.
class Tree {
 public:
  int order() const noexcept { return static_cast<int>(adjacency_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(adjacency_.empty() ? 0 : adjacency_.size() - 1);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adjacency_[static_cast<std::size_t>(u)]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  bool adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  void check_vertex(Vertex v) const {
    if (!contains(v)) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in 0.." +
                      std::to_string(order() - 1));
    }
  }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  friend Tree build_tree(int n, std::span<const Edge> edges);
  explicit Tree(std::vector<std::vector<Vertex>> adjacency)
      : adjacency_(std::move(adjacency)) {}

  std::vector<std::vector<Vertex>> adjacency_;
};

/// An ordered sequence of vertices v_0..v_k; length() counts edges.
struct TreePath {
  std::vector<Vertex> vertices;

  int length() const noexcept {
    return static_cast<int>(vertices.size()) - 1;
  }
  Vertex operator[](std::size_t i) const { return vertices[i]; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  friend bool operator==(const TreePath&, const TreePath&) = default;
};

inline Tree build_tree(int n, std::span<const Edge> edges) {
  if (n < 1) {
    throw Error(ErrorCode::kNotATree,
                "order must be at least 1, got " + std::to_string(n));
  }
  for (const auto& [u, v] : edges) {
    for (Vertex x : {u, v}) {
      if (x < 0 || x >= n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "vertex " + std::to_string(x) + " not in 0.." +
                        std::to_string(n - 1));
      }
    }
  }
  if (edges.size() != static_cast<std::size_t>(n - 1)) {
    throw Error(ErrorCode::kNotATree,
                "expected " + std::to_string(n - 1) + " edges, got " +
                    std::to_string(edges.size()));
  }

  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u == v) {
      throw Error(ErrorCode::kNotATree, "self-loop at " + std::to_string(u));
    }
    adjacency[static_cast<std::size_t>(u)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(u);
  }
  for (Vertex u = 0; u < n; ++u) {
    auto& nb = adjacency[static_cast<std::size_t>(u)];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw Error(ErrorCode::kNotATree,
                  "duplicate edge at vertex " + std::to_string(u));
    }
  }

  // n-1 edges and connected implies acyclic.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adjacency[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::kNotATree, "graph is disconnected");
  }
  return Tree(std::move(adjacency));
}

inline Tree build_tree(int n, std::initializer_list<Edge> edges) {
  return build_tree(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Tree build_tree(int n, const std::vector<Edge>& edges) {
  return build_tree(n, std::span<const Edge>(edges));
}

inline int degree(const Tree& t, Vertex v) {
  return static_cast<int>(t.neighbors(v).size());
}

/// Vertices of degree exactly 1, ascending. The lone vertex of the order-1
/// tree has degree 0 and so has no leaves to report.
inline std::vector<Vertex> leaves(const Tree& t) {
  if (t.order() < 2) {
    throw Error(ErrorCode::kDegenerateOrder,
                "leaves are undefined for a tree of order 1");
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (degree(t, v) == 1) out.push_back(v);
  }
  return out;
}

namespace detail {

struct BfsResult {
  std::vector<int> distance;
  std::vector<Vertex> parent;  // -1 at the source
};

inline BfsResult bfs(const Tree& t, Vertex source) {
  t.check_vertex(source);
  const auto n = static_cast<std::size_t>(t.order());
  BfsResult r{std::vector<int>(n, -1), std::vector<Vertex>(n, -1)};
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(source);
  r.distance[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : t.neighbors(u)) {
      auto vi = static_cast<std::size_t>(v);
      if (r.distance[vi] < 0) {
        r.distance[vi] = r.distance[static_cast<std::size_t>(u)] + 1;
        r.parent[vi] = u;
        queue.push_back(v);
      }
    }
  }
  return r;
}

// Smallest id among the vertices at maximum distance.
inline Vertex farthest(std::span<const int> distance) {
  auto it = std::max_element(distance.begin(), distance.end());
  return static_cast<Vertex>(it - distance.begin());
}

inline TreePath walk_back(const BfsResult& r, Vertex target) {
  TreePath p;
  for (Vertex v = target; v >= 0; v = r.parent[static_cast<std::size_t>(v)]) {
    p.vertices.push_back(v);
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

}  // namespace detail

inline std::vector<int> bfs_distances(const Tree& t, Vertex source) {
  return detail::bfs(t, source).distance;
}

struct DiametralPath {
  int diameter = 0;
  TreePath path;
};

/// Double BFS: the farthest vertex from 0 (smallest id on ties) becomes v_0,
/// the farthest vertex from v_0 (smallest id on ties) becomes v_d.
inline DiametralPath diameter_and_path(const Tree& t) {
  auto first = detail::bfs(t, 0);
  Vertex a = detail::farthest(first.distance);
  auto second = detail::bfs(t, a);
  Vertex b = detail::farthest(second.distance);
  return {second.distance[static_cast<std::size_t>(b)],
          detail::walk_back(second, b)};
}

inline int diameter(const Tree& t) { return diameter_and_path(t).diameter; }

inline TreePath path_between(const Tree& t, Vertex x, Vertex y) {
  t.check_vertex(y);
  return detail::walk_back(detail::bfs(t, x), y);
}

}  // namespace leafdiam
