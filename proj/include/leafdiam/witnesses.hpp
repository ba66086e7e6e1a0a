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

// Explicit trees attaining each extremal value.

#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "leafdiam/formulas.hpp"
#include "leafdiam/tree.hpp"

namespace leafdiam {

/// A subdivided star described by its leg lengths, kept nonincreasing.
///
/// A one-leg spider is a path whose branch vertex is an end; it has two
/// leaves, not one. Every other spider has exactly one leaf per leg.
class Spider {
 public:
  explicit Spider(std::vector<int> leg_lengths) : legs_(std::move(leg_lengths)) {
    if (legs_.empty()) {
      throw Error(ErrorCode::kEmptySpider, "a spider needs at least one leg");
    }
    for (int len : legs_) {
      if (len < 1) {
        throw Error(ErrorCode::kInvalidSpider,
                    "leg length " + std::to_string(len) + " is not positive");
      }
    }
    std::sort(legs_.begin(), legs_.end(), std::greater<>());
  }

  const std::vector<int>& leg_lengths() const noexcept { return legs_; }
  int leg_count() const noexcept { return static_cast<int>(legs_.size()); }

  int order() const {
    return 1 + std::accumulate(legs_.begin(), legs_.end(), 0);
  }
  int leaf_count() const { return legs_.size() == 1 ? 2 : leg_count(); }
  int diameter() const {
    return legs_.size() == 1 ? legs_[0] : legs_[0] + legs_[1];
  }

  friend bool operator==(const Spider&, const Spider&) = default;

 private:
  std::vector<int> legs_;
};

/// Branch vertex gets id 0; legs follow in nonincreasing length order, each
/// numbered consecutively outward from the branch.
inline Tree spider_to_tree(const Spider& s) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(s.order() - 1));
  Vertex next = 1;
  for (int len : s.leg_lengths()) {
    Vertex prev = 0;
    for (int step = 0; step < len; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return build_tree(s.order(), edges);
}

/// Spider with order n, diameter d and min_leaves(n, d) legs.
///
/// Legs have length c = floor(d/2), except that odd d gets one leg of length
/// c+1 up front; the last leg absorbs whatever budget is left over.
inline Spider min_leaf_spider(Count n, Count d) {
  detail::require_leaf_diameter(n, d);
  if (d == 1) return Spider({1});
  const Count c = d / 2;
  std::vector<int> legs;
  Count budget = n - 1;
  if (d % 2 == 1) {
    legs.push_back(static_cast<int>(c + 1));
    budget -= c + 1;
  }
  while (budget > 0) {
    const Count len = std::min(c, budget);
    legs.push_back(static_cast<int>(len));
    budget -= len;
  }
  return Spider(std::move(legs));
}

/// Spider with order n, exactly f legs and diameter min_diameter(n, f).
///
/// Writing n-1 = kf + s with 1 <= s <= f: when s = 1 one leg gets k+1 and the
/// rest k; otherwise s legs get k+1 and the rest k.
inline Spider min_diameter_spider(Count n, Count f) {
  detail::require_order_leaves(n, f);
  const Count k = (n - 2) / f;
  const Count r = (n - 2) % f;
  const Count long_legs = r == 0 ? 1 : r + 1;
  std::vector<int> legs(static_cast<std::size_t>(f), static_cast<int>(k));
  std::fill_n(legs.begin(), long_legs, static_cast<int>(k + 1));
  return Spider(std::move(legs));
}

/// Path v_0..v_d (ids 0..d) with the remaining n-d-1 vertices hung as
/// pendants on v_{floor(d/2)}.
inline Tree max_leaf_tree(Count n, Count d) {
  detail::require_leaf_diameter(n, d);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < d; ++i) edges.emplace_back(i, i + 1);
  const auto center = static_cast<Vertex>(d / 2);
  for (auto v = static_cast<Vertex>(d + 1); v < n; ++v) {
    edges.emplace_back(center, v);
  }
  return build_tree(static_cast<int>(n), edges);
}

/// Path v_0..v_{n-f+1} with f-2 pendants hung on v_1.
inline Tree max_diameter_tree(Count n, Count f) {
  detail::require_order_leaves(n, f);
  const auto length = static_cast<Vertex>(n - f + 1);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < length; ++i) edges.emplace_back(i, i + 1);
  for (Vertex v = length + 1; v < n; ++v) edges.emplace_back(1, v);
  return build_tree(static_cast<int>(n), edges);
}

}  // namespace leafdiam
