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

// Exhaustive ground truth for small orders.
//
// Every labeled tree on n vertices is decoded from one of the n^(n-2) Prufer
// sequences. Diameter and leaf count are isomorphism invariants, so extremal
// values over labeled trees are the extremal values over all trees.
//
// The enumeration deliberately avoids the BFS machinery in tree.hpp: the
// diameter comes from repeatedly stripping leaves off a bitmask adjacency,
// and the leaf count is the number of labels missing from the sequence.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "leafdiam/formulas.hpp"
#include "leafdiam/tree.hpp"

namespace leafdiam {

inline constexpr int kDefaultOracleCap = 9;
inline constexpr int kHardOracleCap = 11;

namespace detail {

// Linear-time Prufer decoding. `degree` is scratch of size n.
template <class EdgeSink>
void decode_prufer(std::span<const Vertex> seq, std::span<int> degree,
                   EdgeSink&& sink) {
  const auto n = static_cast<Vertex>(seq.size() + 2);
  std::fill(degree.begin(), degree.end(), 1);
  for (Vertex v : seq) ++degree[static_cast<std::size_t>(v)];
  Vertex ptr = 0;
  while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex v : seq) {
    sink(leaf, v);
    if (--degree[static_cast<std::size_t>(v)] == 1 && v < ptr) {
      leaf = v;
    } else {
      do {
        ++ptr;
      } while (degree[static_cast<std::size_t>(ptr)] != 1);
      leaf = ptr;
    }
  }
  sink(leaf, n - 1);
}

// Diameter by peeling leaves layer by layer: after `rounds` layers the
// remaining center has one vertex (diameter 2*rounds) or two
// (2*rounds + 1).
inline int peel_diameter(std::span<const std::uint32_t> adjacency) {
  const auto n = static_cast<int>(adjacency.size());
  std::uint32_t alive = n == 32 ? ~0u : (1u << n) - 1u;
  int rounds = 0;
  while (std::popcount(alive) > 2) {
    std::uint32_t strip = 0;
    for (std::uint32_t rest = alive; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (std::popcount(adjacency[static_cast<std::size_t>(v)] & alive) <= 1) {
        strip |= 1u << v;
      }
    }
    alive &= ~strip;
    ++rounds;
  }
  return std::popcount(alive) == 1 ? 2 * rounds : 2 * rounds + 1;
}

inline std::uint64_t sequence_count(int n) {
  const auto base = static_cast<std::uint64_t>(n);
  std::uint64_t total = 1;
  for (std::uint64_t i = 2; i < base; ++i) total *= base;
  return total;
}

// Digits of `rank` in base n, most significant first.
inline std::vector<Vertex> sequence_from_rank(int n, std::uint64_t rank) {
  std::vector<Vertex> seq(static_cast<std::size_t>(std::max(n - 2, 0)));
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    *it = static_cast<Vertex>(rank % static_cast<std::uint64_t>(n));
    rank /= static_cast<std::uint64_t>(n);
  }
  return seq;
}

}  // namespace detail

/// Decodes a Prufer sequence of length n-2 into its labeled tree on n
/// vertices.
inline Tree prufer_decode(std::span<const Vertex> seq) {
  const auto n = static_cast<int>(seq.size()) + 2;
  for (Vertex v : seq) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kEntryOutOfRange,
                  "entry " + std::to_string(v) + " not in 0.." +
                      std::to_string(n - 1));
    }
  }
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  detail::decode_prufer(seq, degree,
                        [&](Vertex u, Vertex v) { edges.emplace_back(u, v); });
  return build_tree(n, edges);
}

inline Tree prufer_decode(const std::vector<Vertex>& seq) {
  return prufer_decode(std::span<const Vertex>(seq));
}

/// Min/max of one statistic, with the rank of the first Prufer sequence
/// attaining each.
struct Extent {
  int min = 0;
  int max = 0;
  std::uint64_t argmin = 0;
  std::uint64_t argmax = 0;

  void fold(int value, std::uint64_t rank) {
    if (value < min || (value == min && rank < argmin)) {
      min = value;
      argmin = rank;
    }
    if (value > max || (value == max && rank < argmax)) {
      max = value;
      argmax = rank;
    }
  }

  void merge(const Extent& other) {
    fold(other.min, other.argmin);
    fold(other.max, other.argmax);
  }

  friend bool operator==(const Extent&, const Extent&) = default;
};

struct ExtremalTable {
  int n = 0;
  /// d -> leaf-count extent over trees of diameter d.
  std::map<int, Extent> by_diameter;
  /// f -> diameter extent over trees with f leaves. Only f <= n-1 appears,
  /// which leaves K_2 out.
  std::map<int, Extent> by_leaves;

  void record(int diameter, int leaf_count, std::uint64_t rank) {
    auto fold_into = [rank](std::map<int, Extent>& m, int key, int value) {
      auto [it, inserted] = m.try_emplace(key, Extent{value, value, rank, rank});
      if (!inserted) it->second.fold(value, rank);
    };
    fold_into(by_diameter, diameter, leaf_count);
    if (leaf_count <= n - 1) fold_into(by_leaves, leaf_count, diameter);
  }

  void merge(const ExtremalTable& other) {
    auto merge_into = [](std::map<int, Extent>& into,
                         const std::map<int, Extent>& from) {
      for (const auto& [key, extent] : from) {
        auto [it, inserted] = into.try_emplace(key, extent);
        if (!inserted) it->second.merge(extent);
      }
    };
    merge_into(by_diameter, other.by_diameter);
    merge_into(by_leaves, other.by_leaves);
  }

  friend bool operator==(const ExtremalTable&, const ExtremalTable&) = default;
};

struct OracleOptions {
  int cap = kDefaultOracleCap;
  int jobs = 1;
};

namespace detail {

inline ExtremalTable scan_ranks(int n, std::uint64_t begin, std::uint64_t end) {
  ExtremalTable table;
  table.n = n;
  if (begin >= end) return table;

  auto seq = sequence_from_rank(n, begin);
  std::array<int, 32> degree{};
  std::array<std::uint32_t, 32> adjacency{};
  const auto un = static_cast<std::size_t>(n);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    std::fill_n(adjacency.begin(), un, 0u);
    decode_prufer(seq, std::span(degree.data(), un), [&](Vertex u, Vertex v) {
      adjacency[static_cast<std::size_t>(u)] |= 1u << v;
      adjacency[static_cast<std::size_t>(v)] |= 1u << u;
    });
    std::uint32_t present = 0;
    for (Vertex v : seq) present |= 1u << v;
    const int leaf_count = n - std::popcount(present);
    const int diameter = peel_diameter(std::span(adjacency.data(), un));
    table.record(diameter, leaf_count, rank);

    // Odometer increment, least significant digit last.
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      if (++*it < n) break;
      *it = 0;
    }
  }
  return table;
}

}  // namespace detail

/// Extremal statistics over all n^(n-2) labeled trees of order n.
inline ExtremalTable build_table(int n, OracleOptions options = {}) {
  if (options.cap > kHardOracleCap) {
    throw Error(ErrorCode::kCapExceeded,
                "cap " + std::to_string(options.cap) + " exceeds the limit " +
                    std::to_string(kHardOracleCap));
  }
  if (n > options.cap) {
    throw Error(ErrorCode::kCapExceeded,
                "n=" + std::to_string(n) + " exceeds cap " +
                    std::to_string(options.cap));
  }
  if (n < 2) {
    throw Error(ErrorCode::kDegenerateOrder, "enumeration needs n >= 2");
  }
  const std::uint64_t total = detail::sequence_count(n);
  const auto jobs = static_cast<std::uint64_t>(std::max(options.jobs, 1));
  const std::uint64_t workers = std::min(jobs, total);
  if (workers <= 1) return detail::scan_ranks(n, 0, total);

  std::vector<ExtremalTable> partial(workers);
  {
    std::vector<std::jthread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        partial[w] = detail::scan_ranks(n, total * w / workers,
                                        total * (w + 1) / workers);
      });
    }
  }
  ExtremalTable table;
  table.n = n;
  for (const auto& p : partial) table.merge(p);
  return table;
}

/// The formulas a sweep is checked against; replaceable so the harness can
/// be tested against deliberately wrong formulas.
struct FormulaSet {
  std::function<Count(Count, Count)> min_leaves = leafdiam::min_leaves;
  std::function<Count(Count, Count)> max_leaves = leafdiam::max_leaves;
  std::function<Count(Count, Count)> min_diameter = leafdiam::min_diameter;
  std::function<Count(Count, Count)> max_diameter = leafdiam::max_diameter;
};

struct Discrepancy {
  std::string quantity;  // "min_leaves", "max_diameter", ...
  int n = 0;
  int key = 0;  // d for leaf quantities, f for diameter quantities
  std::optional<Count> formula;  // nullopt when the formula rejected the input
  std::optional<int> enumerated;  // nullopt when no tree realizes the key
  std::optional<Tree> counterexample;
};

struct SweepReport {
  int max_n = 0;
  int checks = 0;
  std::vector<Discrepancy> discrepancies;

  bool ok() const noexcept { return discrepancies.empty(); }
};

namespace detail {

inline std::optional<Count> try_formula(
    const std::function<Count(Count, Count)>& f, Count n, Count key) {
  try {
    return f(n, key);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasible) throw;
    return std::nullopt;
  }
}

inline Tree tree_at_rank(int n, std::uint64_t rank) {
  return prufer_decode(sequence_from_rank(n, rank));
}

// Compares one key's enumerated extent against the min/max formulas.
inline void check_key(SweepReport& report, int n, int key, bool feasible,
                      const std::map<int, Extent>& column,
                      const std::function<Count(Count, Count)>& min_formula,
                      const std::function<Count(Count, Count)>& max_formula,
                      const std::string& min_name,
                      const std::string& max_name) {
  auto it = column.find(key);
  const bool realized = it != column.end();
  if (!feasible && !realized) return;
  ++report.checks;

  auto compare = [&](const std::string& name,
                     const std::function<Count(Count, Count)>& formula,
                     bool is_min) {
    auto expected = try_formula(formula, n, key);
    std::optional<int> actual;
    std::optional<Tree> witness;
    if (realized) {
      actual = is_min ? it->second.min : it->second.max;
      witness = tree_at_rank(n, is_min ? it->second.argmin : it->second.argmax);
    }
    if (expected && actual && *expected == *actual) return;
    report.discrepancies.push_back(
        {name, n, key, expected, actual, std::move(witness)});
  };
  compare(min_name, min_formula, true);
  compare(max_name, max_formula, false);
}

}  // namespace detail

/// Checks every formula against exhaustive enumeration for 2 <= n <= max_n.
/// One check is one (n, d) or (n, f) pair that is feasible or realized.
inline SweepReport verify_sweep(int max_n, OracleOptions options = {},
                                const FormulaSet& formulas = {}) {
  SweepReport report;
  report.max_n = max_n;
  for (int n = 2; n <= max_n; ++n) {
    const auto table = build_table(n, options);
    for (int d = 1; d <= n - 1; ++d) {
      detail::check_key(report, n, d, feasible_leaf_diameter(n, d),
                        table.by_diameter, formulas.min_leaves,
                        formulas.max_leaves, "min_leaves", "max_leaves");
    }
    for (int f = 2; f <= n - 1; ++f) {
      detail::check_key(report, n, f, feasible_order_leaves(n, f),
                        table.by_leaves, formulas.min_diameter,
                        formulas.max_diameter, "min_diameter", "max_diameter");
    }
  }
  return report;
}

inline std::string format_report(const SweepReport& report) {
  std::ostringstream out;
  for (const auto& d : report.discrepancies) {
    out << "MISMATCH " << d.quantity << " n=" << d.n
        << (d.quantity.ends_with("leaves") ? " d=" : " f=") << d.key
        << " formula=";
    if (d.formula) out << *d.formula; else out << "infeasible";
    out << " enumerated=";
    if (d.enumerated) out << *d.enumerated; else out << "none";
    if (d.counterexample) {
      out << " tree=";
      const char* sep = "";
      for (const auto& [u, v] : d.counterexample->edges()) {
        out << sep << u << '-' << v;
        sep = ",";
      }
    }
    out << '\n';
  }
  out << "checked n=2.." << report.max_n << ": " << report.checks
      << " (n, key) pairs, " << report.discrepancies.size()
      << " discrepancies\n";
  return out.str();
}

}  // namespace leafdiam
