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

// Structure of a tree relative to a designated path (the stem).
//
// Every vertex x hangs off exactly one stem vertex v_i: the unique path from
// x to v_i meets the stem only at v_i. We say x originates from v_i. Stem
// vertices originate from themselves.

#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "leafdiam/tree.hpp"

namespace leafdiam {

struct StemDecomposition {
  TreePath stem;
  /// origin[x] = index i of the stem vertex x originates from.
  std::vector<int> origin;
  /// depth[x] = d(x, v_origin[x]).
  std::vector<int> depth;
  /// toward_stem[x] = neighbor of x one step closer to its origin; -1 on the
  /// stem.
  std::vector<Vertex> toward_stem;
  /// subtree_depth[i] = max depth over vertices originating from v_i.
  std::vector<int> subtree_depth;

  int stem_length() const noexcept { return stem.length(); }
  bool on_stem(Vertex x) const {
    return toward_stem[static_cast<std::size_t>(x)] < 0;
  }

  friend bool operator==(const StemDecomposition&,
                         const StemDecomposition&) = default;
};

inline void validate_path(const Tree& t, const TreePath& p) {
  if (p.vertices.empty()) {
    throw Error(ErrorCode::kInvalidStem, "empty path");
  }
  std::vector<char> used(static_cast<std::size_t>(t.order()), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (!t.contains(v)) {
      throw Error(ErrorCode::kInvalidStem,
                  "vertex " + std::to_string(v) + " not in tree");
    }
    if (used[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::kInvalidStem,
                  "vertex " + std::to_string(v) + " repeated");
    }
    used[static_cast<std::size_t>(v)] = 1;
    if (i > 0 && !t.adjacent(p.vertices[i - 1], v)) {
      throw Error(ErrorCode::kInvalidStem,
                  std::to_string(p.vertices[i - 1]) + " and " +
                      std::to_string(v) + " are not adjacent");
    }
  }
}

/// One multi-source BFS seeded with the stem vertices.
inline StemDecomposition decompose(const Tree& t, const TreePath& stem) {
  validate_path(t, stem);
  const auto n = static_cast<std::size_t>(t.order());
  StemDecomposition dec{stem, std::vector<int>(n, -1), std::vector<int>(n, 0),
                        std::vector<Vertex>(n, -1),
                        std::vector<int>(stem.vertices.size(), 0)};
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (std::size_t i = 0; i < stem.vertices.size(); ++i) {
    dec.origin[static_cast<std::size_t>(stem.vertices[i])] =
        static_cast<int>(i);
    queue.push_back(stem.vertices[i]);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    auto ui = static_cast<std::size_t>(u);
    for (Vertex v : t.neighbors(u)) {
      auto vi = static_cast<std::size_t>(v);
      if (dec.origin[vi] >= 0) continue;
      dec.origin[vi] = dec.origin[ui];
      dec.depth[vi] = dec.depth[ui] + 1;
      dec.toward_stem[vi] = u;
      auto& deepest = dec.subtree_depth[static_cast<std::size_t>(dec.origin[vi])];
      deepest = std::max(deepest, dec.depth[vi]);
      queue.push_back(v);
    }
  }
  return dec;
}

/// A path v_0..v_k is diametral iff every vertex originating from v_i is
/// within min(i, k-i) of it.
inline bool is_diametral(const StemDecomposition& dec) {
  const int k = dec.stem_length();
  for (int i = 0; i <= k; ++i) {
    if (dec.subtree_depth[static_cast<std::size_t>(i)] > std::min(i, k - i)) {
      return false;
    }
  }
  return true;
}

inline bool is_diametral_by_lemma1(const Tree& t, const TreePath& p) {
  return is_diametral(decompose(t, p));
}

/// b(leaf): walking from an off-stem leaf toward its origin y, the first
/// vertex of degree >= 3 (y included).
inline Vertex first_big_vertex(const Tree& t, const StemDecomposition& dec,
                               Vertex leaf) {
  t.check_vertex(leaf);
  if (degree(t, leaf) != 1) {
    throw Error(ErrorCode::kNotALeaf,
                "vertex " + std::to_string(leaf) + " has degree " +
                    std::to_string(degree(t, leaf)));
  }
  if (dec.on_stem(leaf)) {
    throw Error(ErrorCode::kLeafOnStem,
                "vertex " + std::to_string(leaf) + " lies on the stem");
  }
  Vertex x = leaf;
  do {
    x = dec.toward_stem[static_cast<std::size_t>(x)];
    if (degree(t, x) >= 3) return x;
  } while (!dec.on_stem(x));
  throw Error(ErrorCode::kNoBigVertex,
              "no vertex of degree >= 3 between leaf " + std::to_string(leaf) +
                  " and the stem");
}

}  // namespace leafdiam
