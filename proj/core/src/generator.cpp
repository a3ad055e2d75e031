// Copyright 2026 The dicolor Authors
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

#include "dicolor/generator.hpp"

#include <random>
#include <vector>

#include "dicolor/error.hpp"

namespace dicolor {

Digraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("arc probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  // 53 high bits as a uniform double in [0, 1); strictly below 1, so p = 1
  // always fires and p = 0 never does.
  const auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (uniform() < p) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace dicolor
