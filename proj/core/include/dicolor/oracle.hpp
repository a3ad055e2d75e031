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

#ifndef DICOLOR_ORACLE_HPP_
#define DICOLOR_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "dicolor/coloring.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/ordering.hpp"

// Brute-force ground truth for small digraphs. Slow and obvious on purpose.
namespace dicolor::oracle {

inline constexpr std::size_t kDefaultCircuitCap = 1'000'000;
inline constexpr std::size_t kDefaultColoringMaxVertices = 12;
inline constexpr std::size_t kDefaultOrderingMaxVertices = 8;

struct CircuitList {
  // Canonical, sorted, one entry per arc-id sequence. Parallel arcs give
  // several entries sharing a vertex sequence.
  std::vector<Circuit> circuits;

  // Distinct vertex sequences, sorted.
  std::vector<std::vector<Vertex>> vertex_cycles() const;
};

// Johnson's algorithm on the underlying simple digraph, then every choice
// of parallel arc along each vertex cycle. Throws CapExceeded past cap.
CircuitList enumerate_circuits(const Digraph& d,
                               std::size_t cap = kDefaultCircuitCap);

// Lexicographically first acyclic k-coloring, by backtracking in vertex
// order with a reachability check on every assignment.
std::optional<Coloring> is_k_dicolorable_bruteforce(
    const Digraph& d, std::size_t k,
    std::size_t max_vertices = kDefaultColoringMaxVertices);

// Least k with an acyclic k-coloring; 1 for the empty digraph.
std::size_t dichromatic_number(
    const Digraph& d, std::size_t max_vertices = kDefaultColoringMaxVertices);

// dichromatic_number together with the witnessing coloring.
Coloring optimal_coloring(
    const Digraph& d, std::size_t max_vertices = kDefaultColoringMaxVertices);

// min over all n! orderings of min_forward_ratio(d, order).least_k().
std::size_t best_k_over_orderings(
    const Digraph& d, std::size_t max_vertices = kDefaultOrderingMaxVertices);

// Literal circuit condition: forward(C) * k >= |C| for every enumerated C.
bool check_ordering_bruteforce(const Digraph& d, const Ordering& order,
                               std::size_t k,
                               std::size_t cap = kDefaultCircuitCap);

// First enumerated circuit violating the condition, if any.
std::optional<Circuit> violating_circuit_bruteforce(
    const Digraph& d, const Ordering& order, std::size_t k,
    std::size_t cap = kDefaultCircuitCap);

}  // namespace dicolor::oracle

#endif  // DICOLOR_ORACLE_HPP_
