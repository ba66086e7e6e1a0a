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

#include "leafdiam/oracle.hpp"

#include <map>
#include <set>
#include <utility>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace leafdiam {
namespace {

using MinMax = std::map<int, std::pair<int, int>>;

MinMax strip(const std::map<int, Extent>& column) {
  MinMax out;
  for (const auto& [k, e] : column) out[k] = {e.min, e.max};
  return out;
}

TEST(PruferDecodeTest, BaseCases) {
  EXPECT_EQ(prufer_decode(std::vector<Vertex>{}), build_tree(2, {{0, 1}}));
  EXPECT_EQ(prufer_decode(std::vector<Vertex>{0, 0}), testing::star_graph(4));
  // Sequence 3 3 3 4 on six vertices: leaves 0,1,2 join 3, then 3-4, 4-5.
  EXPECT_EQ(prufer_decode(std::vector<Vertex>{3, 3, 3, 4}),
            build_tree(6, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}));
}

TEST(PruferDecodeTest, EntryOutOfRange) {
  try {
    prufer_decode(std::vector<Vertex>{0, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEntryOutOfRange);
  }
  EXPECT_THROW(prufer_decode(std::vector<Vertex>{-1}), Error);
}

TEST(PruferDecodeTest, CayleyCountUpToSeven) {
  for (int n = 2; n <= 7; ++n) {
    std::set<std::vector<Edge>> distinct;
    testing::for_each_tree(n, [&](const Tree& t) { distinct.insert(t.edges()); });
    EXPECT_EQ(distinct.size(), detail::sequence_count(n)) << "n=" << n;
  }
  EXPECT_EQ(detail::sequence_count(5), 125u);
}

TEST(PruferDecodeTest, LeavesAreMissingLabels) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 20;
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::vector<Vertex> seq(static_cast<std::size_t>(n - 2));
    for (auto& v : seq) v = pick(rng);
    std::set<Vertex> present(seq.begin(), seq.end());
    std::vector<Vertex> missing;
    for (Vertex v = 0; v < n; ++v) {
      if (!present.count(v)) missing.push_back(v);
    }
    EXPECT_EQ(leaves(prufer_decode(seq)), missing);
  }
}

TEST(PeelDiameterTest, MatchesBruteForce) {
  for (int n = 2; n <= 7; ++n) {
    testing::for_each_tree(n, [&](const Tree& t) {
      std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
      for (auto [u, v] : t.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
      }
      ASSERT_EQ(detail::peel_diameter(adj), testing::brute_force_diameter(t));
    });
  }
}

TEST(BuildTableTest, OrderFour) {
  auto table = build_table(4);
  EXPECT_EQ(strip(table.by_diameter), (MinMax{{2, {3, 3}}, {3, {2, 2}}}));
  EXPECT_EQ(strip(table.by_leaves), (MinMax{{2, {3, 3}}, {3, {2, 2}}}));
}

TEST(BuildTableTest, OrderTwoSkipsLeafColumn) {
  auto table = build_table(2);
  EXPECT_EQ(strip(table.by_diameter), (MinMax{{1, {2, 2}}}));
  EXPECT_TRUE(table.by_leaves.empty());
}

// Expected tables frozen from an independent enumeration of non-isomorphic
// trees (networkx), not from this enumerator.
TEST(BuildTableTest, OrdersEightAndNineMatchFrozenTables) {
  auto t8 = build_table(8);
  EXPECT_EQ(strip(t8.by_diameter),
            (MinMax{{2, {7, 7}}, {3, {6, 6}}, {4, {4, 5}}, {5, {3, 4}},
                    {6, {3, 3}}, {7, {2, 2}}}));
  EXPECT_EQ(strip(t8.by_leaves),
            (MinMax{{2, {7, 7}}, {3, {5, 6}}, {4, {4, 5}}, {5, {4, 4}},
                    {6, {3, 3}}, {7, {2, 2}}}));

  auto t9 = build_table(9, {.cap = 9, .jobs = 3});
  EXPECT_EQ(strip(t9.by_diameter),
            (MinMax{{2, {8, 8}}, {3, {7, 7}}, {4, {4, 6}}, {5, {4, 5}},
                    {6, {3, 4}}, {7, {3, 3}}, {8, {2, 2}}}));
  EXPECT_EQ(strip(t9.by_leaves),
            (MinMax{{2, {8, 8}}, {3, {6, 7}}, {4, {4, 6}}, {5, {4, 5}},
                    {6, {4, 4}}, {7, {3, 3}}, {8, {2, 2}}}));
}

TEST(BuildTableTest, SevenDiameterFourHasThreeLeaves) {
  auto table = build_table(7);
  EXPECT_EQ(table.by_diameter.at(4).min, 3);
  EXPECT_EQ(table.by_diameter.at(4).min, min_leaves(7, 4));
}

TEST(BuildTableTest, ParallelMatchesSerial) {
  for (int jobs : {2, 3, 7, 50}) {
    EXPECT_EQ(build_table(7, {.cap = 9, .jobs = jobs}), build_table(7))
        << "jobs=" << jobs;
  }
  // More workers than sequences.
  EXPECT_EQ(build_table(3, {.cap = 9, .jobs = 8}), build_table(3));
}

TEST(BuildTableTest, ExtentsAreAttainedAndOrdered) {
  const int n = 7;
  auto table = build_table(n);
  for (const auto& column : {table.by_diameter, table.by_leaves}) {
    for (const auto& [key, e] : column) {
      EXPECT_LE(e.min, e.max);
      EXPECT_GE(key, column.begin() == table.by_diameter.begin() ? 1 : 2);
      EXPECT_LE(key, n - 1);
    }
  }
  for (const auto& [d, e] : table.by_diameter) {
    EXPECT_TRUE(feasible_leaf_diameter(n, d));
    Tree lo = detail::tree_at_rank(n, e.argmin);
    Tree hi = detail::tree_at_rank(n, e.argmax);
    EXPECT_EQ(testing::brute_force_diameter(lo), d);
    EXPECT_EQ(testing::leaf_count(lo), e.min);
    EXPECT_EQ(testing::brute_force_diameter(hi), d);
    EXPECT_EQ(testing::leaf_count(hi), e.max);
  }
}

TEST(BuildTableTest, CapGuards) {
  auto code_of = [](int n, OracleOptions options) {
    try {
      build_table(n, options);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvariantViolation;
  };
  EXPECT_EQ(code_of(10, {}), ErrorCode::kCapExceeded);
  EXPECT_EQ(code_of(15, {.cap = 15, .jobs = 1}), ErrorCode::kCapExceeded);
  EXPECT_EQ(code_of(1, {}), ErrorCode::kDegenerateOrder);
}

TEST(VerifySweepTest, NoDiscrepanciesUpToEight) {
  auto report = verify_sweep(8);
  EXPECT_TRUE(report.ok()) << format_report(report);
  EXPECT_GT(report.checks, 0);
}

TEST(VerifySweepTest, OrderTwoIsASingleCheck) {
  auto report = verify_sweep(2);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.checks, 1);
}

TEST(VerifySweepTest, InjectedFaultIsReportedWithCounterexample) {
  FormulaSet wrong;
  wrong.min_leaves = [](Count n, Count d) { return min_leaves(n, d) + 1; };
  auto report = verify_sweep(6, {}, wrong);
  ASSERT_FALSE(report.ok());
  for (const auto& d : report.discrepancies) {
    EXPECT_EQ(d.quantity, "min_leaves");
    ASSERT_TRUE(d.counterexample.has_value());
    ASSERT_TRUE(d.enumerated.has_value());
    EXPECT_EQ(testing::leaf_count(*d.counterexample), *d.enumerated);
    EXPECT_EQ(testing::brute_force_diameter(*d.counterexample), d.key);
    EXPECT_EQ(*d.formula, *d.enumerated + 1);
  }
  // Every feasible (n, d) with 2 <= n <= 6 is reported.
  EXPECT_EQ(report.discrepancies.size(), 1u + 1 + 2 + 3 + 4);
  EXPECT_NE(format_report(report).find("MISMATCH min_leaves n=2 d=1"),
            std::string::npos);
}

TEST(VerifySweepTest, FormulaRejectingRealizedKeyIsReported) {
  FormulaSet wrong;
  wrong.max_diameter = [](Count n, Count f) -> Count {
    if (f == 3) throw Error(ErrorCode::kInfeasible, "injected");
    return max_diameter(n, f);
  };
  auto report = verify_sweep(5, {}, wrong);
  ASSERT_EQ(report.discrepancies.size(), 2u);  // n = 4 and n = 5
  EXPECT_FALSE(report.discrepancies[0].formula.has_value());
}

}  // namespace
}  // namespace leafdiam
