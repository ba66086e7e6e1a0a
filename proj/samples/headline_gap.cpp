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

// Prints the minimum leaf count next to the classical lower bound for a range
// of diameters, with the witness spider for each.

#include <cstdio>
#include <cstdlib>

#include "leafdiam/leafdiam.hpp"

int main(int argc, char** argv) {
  const long long n = argc > 1 ? std::atoll(argv[1]) : 21;
  std::printf("order %lld\n  d   bound  min  max  legs\n", n);
  for (long long d = 2; d < n; ++d) {
    const auto spider = leafdiam::min_leaf_spider(n, d);
    std::printf("%3lld  %5lld  %3lld  %3lld  ", d,
                static_cast<long long>(leafdiam::lesniak_bound(n, d)),
                static_cast<long long>(leafdiam::min_leaves(n, d)),
                static_cast<long long>(leafdiam::max_leaves(n, d)));
    for (int len : spider.leg_lengths()) std::printf("%d ", len);
    std::printf("\n");
  }
}
