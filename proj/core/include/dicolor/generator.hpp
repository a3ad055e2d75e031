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

#ifndef DICOLOR_GENERATOR_HPP_
#define DICOLOR_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>

#include "dicolor/digraph.hpp"

namespace dicolor {

// Each ordered pair (u, v), u != v, gets an arc with probability p, visited
// in (u, v) lexicographic order. Uses std::mt19937_64 so the output is a
// pure function of (n, p, seed). Throws InvalidArgument unless 0 <= p <= 1.
Digraph random_digraph(std::size_t n, double p, std::uint64_t seed);

}  // namespace dicolor

#endif  // DICOLOR_GENERATOR_HPP_
