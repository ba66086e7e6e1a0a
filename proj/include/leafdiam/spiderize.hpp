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

// Turning an arbitrary tree into a spider with the same order, diameter and
// leaf set.
//
// Fix a diametral path P = v_0..v_d and z = v_c with c = floor(d/2). While
// some off-stem leaf u has first big vertex b(u) != z, let w be the neighbor
// of b(u) on the way to u and replace edge {w, b(u)} by {w, z}. Every vertex
// of the moved branch stays within c of z, so P stays diametral, and the
// leaf set is untouched. The potential sum_x d(x, z) drops by
// |branch| * d(b(u), z) >= 1 per step, so the loop terminates.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leafdiam/stem.hpp"
#include "leafdiam/tree.hpp"

namespace leafdiam {

struct RewireStep {
  Vertex leaf = -1;
  Vertex big = -1;
  Vertex w = -1;
  Vertex z = -1;
  std::int64_t potential_before = 0;
  std::int64_t potential_after = 0;

  friend bool operator==(const RewireStep&, const RewireStep&) = default;
};

struct RewireTrace {
  TreePath stem;
  int z_index = 0;
  std::vector<RewireStep> steps;
  Tree result;
};

struct SpiderCheck {
  bool is_spider = false;
  std::optional<Vertex> branch;
};

#ifdef NDEBUG
inline constexpr bool kValidateEachStepByDefault = false;
#else
inline constexpr bool kValidateEachStepByDefault = true;
#endif

struct SpiderizeOptions {
  /// Re-check after every step that the stem is still diametral and the leaf
  /// set is unchanged. The final result is always checked.
  bool validate_each_step = kValidateEachStepByDefault;
};

/// sum over x of d(x, z).
inline std::int64_t potential(const Tree& t, Vertex z) {
  std::int64_t total = 0;
  for (int dist : bfs_distances(t, z)) total += dist;
  return total;
}

/// The unique vertex of degree >= 3, or for a path the central vertex of the
/// canonical diametral path (the smaller id when there are two).
inline SpiderCheck is_spider(const Tree& t) {
  std::optional<Vertex> big;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (degree(t, v) >= 3) {
      if (big) return {false, std::nullopt};
      big = v;
    }
  }
  if (big) return {true, big};
  auto [d, path] = diameter_and_path(t);
  Vertex center = path[static_cast<std::size_t>(d / 2)];
  if (d % 2 == 1) {
    center = std::min(center, path[static_cast<std::size_t>(d / 2 + 1)]);
  }
  return {true, center};
}

namespace detail {

inline Tree replace_edge(const Tree& t, Edge removed, Edge added) {
  auto edges = t.edges();
  auto key = std::minmax(removed.first, removed.second);
  auto it = std::find(edges.begin(), edges.end(), Edge{key.first, key.second});
  *it = std::minmax(added.first, added.second);
  return build_tree(t.order(), edges);
}

// Smallest off-stem leaf whose first big vertex is not z.
inline std::optional<std::pair<Vertex, Vertex>> find_misplaced_leaf(
    const Tree& t, const StemDecomposition& dec, Vertex z) {
  for (Vertex u = 0; u < t.order(); ++u) {
    if (dec.on_stem(u) || degree(t, u) != 1) continue;
    Vertex big = first_big_vertex(t, dec, u);
    if (big != z) return std::pair{u, big};
  }
  return std::nullopt;
}

inline std::optional<std::pair<Tree, RewireStep>> rewire_unchecked(
    const Tree& t, const StemDecomposition& dec, Vertex z) {
  auto found = find_misplaced_leaf(t, dec, z);
  if (!found) return std::nullopt;
  auto [u, big] = *found;
  Vertex w = u;
  while (dec.toward_stem[static_cast<std::size_t>(w)] != big) {
    w = dec.toward_stem[static_cast<std::size_t>(w)];
  }
  RewireStep step{u, big, w, z, potential(t, z), 0};
  Tree next = replace_edge(t, {w, big}, {w, z});
  step.potential_after = potential(next, z);
  return std::pair{std::move(next), step};
}

inline void check_invariants(const Tree& t, const TreePath& stem,
                             const std::vector<Vertex>& leaf_set,
                             const std::string& where) {
  if (!is_diametral_by_lemma1(t, stem)) {
    throw Error(ErrorCode::kInvariantViolation,
                where + ": stem is no longer diametral");
  }
  if (leaves(t) != leaf_set) {
    throw Error(ErrorCode::kInvariantViolation, where + ": leaf set changed");
  }
}

}  // namespace detail

/// One rewiring step, or nullopt when every off-stem leaf already has z as
/// its first big vertex.
inline std::optional<std::pair<Tree, RewireStep>> rewire_once(
    const Tree& t, const StemDecomposition& dec, Vertex z) {
  if (!is_diametral(dec)) {
    throw Error(ErrorCode::kStemNotDiametral,
                "rewiring requires a diametral stem");
  }
  const auto& stem = dec.stem.vertices;
  if (std::find(stem.begin(), stem.end(), z) == stem.end()) {
    throw Error(ErrorCode::kInvalidStem,
                "target " + std::to_string(z) + " is not on the stem");
  }
  return detail::rewire_unchecked(t, dec, z);
}

inline RewireTrace spiderize(const Tree& t, SpiderizeOptions options = {}) {
  if (t.order() < 2) {
    throw Error(ErrorCode::kDegenerateOrder,
                "spiderize needs a tree of order at least 2");
  }
  auto [d, stem] = diameter_and_path(t);
  const int c = d / 2;
  // For odd d either central vertex can serve as v_c depending on which end
  // is v_0. Orient the stem so that v_c is the one of larger degree, which
  // makes spiders already branched at a center into fixpoints.
  if (d % 2 == 1 &&
      degree(t, stem[static_cast<std::size_t>(c + 1)]) >
          degree(t, stem[static_cast<std::size_t>(c)])) {
    std::reverse(stem.vertices.begin(), stem.vertices.end());
  }
  const Vertex z = stem[static_cast<std::size_t>(c)];
  const auto leaf_set = leaves(t);

  RewireTrace trace{stem, c, {}, t};
  while (true) {
    auto dec = decompose(trace.result, stem);
    auto next = detail::rewire_unchecked(trace.result, dec, z);
    if (!next) break;
    auto& [tree, step] = *next;
    if (step.potential_after >= step.potential_before) {
      throw Error(ErrorCode::kInvariantViolation,
                  "potential did not decrease at step " +
                      std::to_string(trace.steps.size()));
    }
    if (options.validate_each_step) {
      detail::check_invariants(tree, stem, leaf_set,
                               "step " + std::to_string(trace.steps.size()));
    }
    trace.steps.push_back(step);
    trace.result = std::move(tree);
  }
  detail::check_invariants(trace.result, stem, leaf_set, "result");
  return trace;
}

}  // namespace leafdiam
