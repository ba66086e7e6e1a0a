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

// Spiderizes a random tree and prints each rewiring step.

#include <cstdio>
#include <random>

#include "leafdiam/leafdiam.hpp"

int main() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<leafdiam::Vertex> pick(0, 19);
  std::vector<leafdiam::Vertex> seq(18);
  for (auto& v : seq) v = pick(rng);
  const auto tree = leafdiam::prufer_decode(seq);

  const auto trace = leafdiam::spiderize(tree);
  std::printf("diameter %d, z = v_%d\n", trace.stem.length(), trace.z_index);
  for (const auto& s : trace.steps) {
    std::printf("move leaf %d: cut %d-%d, join %d-%d, potential %lld -> %lld\n",
                s.leaf, s.w, s.big, s.w, s.z,
                static_cast<long long>(s.potential_before),
                static_cast<long long>(s.potential_after));
  }
  std::fputs(leafdiam::write_tree(trace.result).c_str(), stdout);
}
