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

// Closed-form extremal values relating order n, diameter d and leaf count f
// of a tree. All arithmetic is exact integer arithmetic.

#pragma once

#include <cstdint>
#include <string>

#include "leafdiam/error.hpp"

namespace leafdiam {

using Count = std::int64_t;

/// ceil(a / b) for a >= 0, b > 0.
constexpr Count ceil_div(Count a, Count b) { return (a + b - 1) / b; }

/// A tree of order n and diameter d exists iff 1 <= d <= n-1, and diameter 1
/// only occurs for K_2.
constexpr bool feasible_leaf_diameter(Count n, Count d) {
  if (n < 2 || d < 1 || d > n - 1) return false;
  return d != 1 || n == 2;
}

/// A tree of order n with exactly f leaves exists (and the extremal problem
/// is non-trivial) iff f >= 2 and n >= f+1.
constexpr bool feasible_order_leaves(Count n, Count f) {
  return f >= 2 && n >= f + 1;
}

namespace detail {

inline void require_leaf_diameter(Count n, Count d) {
  if (feasible_leaf_diameter(n, d)) return;
  if (d == 1 && n >= 2) {
    throw Error(ErrorCode::kInfeasible, "d=1 requires n=2");
  }
  throw Error(ErrorCode::kInfeasible,
              "need n >= 2 and 1 <= d <= n-1, got n=" + std::to_string(n) +
                  " d=" + std::to_string(d));
}

inline void require_order_leaves(Count n, Count f) {
  if (feasible_order_leaves(n, f)) return;
  throw Error(ErrorCode::kInfeasible,
              "need f >= 2 and n >= f+1, got n=" + std::to_string(n) +
                  " f=" + std::to_string(f));
}

}  // namespace detail

/// Lower bound ceil(2(n-1)/d) on the leaf count. Tight for even d.
inline Count lesniak_bound(Count n, Count d) {
  detail::require_leaf_diameter(n, d);
  return ceil_div(2 * (n - 1), d);
}

/// L(n, d): the minimum number of leaves of a tree with order n and
/// diameter d.
///
/// With c = floor(d/2) every leg of an extremal spider has length at most c,
/// except that for odd d one leg may have length c+1. Packing n-1 (even d) or
/// n-2 (odd d) non-branch vertices into legs of length c gives the count.
inline Count min_leaves(Count n, Count d) {
  detail::require_leaf_diameter(n, d);
  if (d == 1) return 2;
  if (d % 2 == 0) return ceil_div(2 * (n - 1), d);
  return ceil_div(2 * (n - 2), d - 1);
}

inline Count max_leaves(Count n, Count d) {
  detail::require_leaf_diameter(n, d);
  if (d == 1) return 2;
  return n - d + 1;
}

/// D(n, f): the minimum diameter of a tree with order n and exactly f leaves.
/// With n-2 = kf + r (0 <= r < f) it is 2k+1 when r = 0 and 2k+2 otherwise.
inline Count min_diameter(Count n, Count f) {
  detail::require_order_leaves(n, f);
  const Count k = (n - 2) / f;
  const Count r = (n - 2) % f;
  return r == 0 ? 2 * k + 1 : 2 * k + 2;
}

inline Count max_diameter(Count n, Count f) {
  detail::require_order_leaves(n, f);
  return n - f + 1;
}

}  // namespace leafdiam
