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

#ifndef DICOLOR_DIGRAPH_HPP_
#define DICOLOR_DIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dicolor {

using Vertex = std::size_t;
using ArcId = std::size_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Finite loopless multidigraph on vertices 0..n-1. Arc ids are positions in
// the arc list and never change; reversing a circuit swaps tail and head in
// place. Parallel arcs are representable; use validate_simple() to test for
// them.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t vertex_count);
  // Throws InvalidArgument on a loop or an endpoint >= vertex_count.
  Digraph(std::size_t vertex_count, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arc_count() const { return arcs_.size(); }

  const Arc& arc(ArcId id) const { return arcs_[id]; }
  std::span<const Arc> arcs() const { return arcs_; }

  // Arc ids leaving / entering v, in increasing id order.
  std::span<const ArcId> out_arcs(Vertex v) const;
  std::span<const ArcId> in_arcs(Vertex v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arcs_ == b.arcs_;
  }

 private:
  void build_adjacency();

  std::size_t vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_;
  std::vector<ArcId> out_list_;
  std::vector<std::size_t> in_offsets_;
  std::vector<ArcId> in_list_;
};

// Elementary directed circuit, stored as arc ids together with the visited
// vertices (vertices()[i] is the tail of arcs()[i]). Always rotated so that
// the smallest vertex comes first, which makes equality and ordering
// deterministic.
class Circuit {
 public:
  // Throws InvalidArgument unless the arcs form a closed walk in d through
  // pairwise distinct vertices, of length at least 2.
  static Circuit from_arcs(const Digraph& d, std::vector<ArcId> arcs);

  std::span<const ArcId> arcs() const { return arcs_; }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t length() const { return arcs_.size(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;
  // Lexicographic on the vertex sequence, then on arc ids.
  friend std::strong_ordering operator<=>(const Circuit& a, const Circuit& b);

 private:
  Circuit() = default;

  std::vector<ArcId> arcs_;
  std::vector<Vertex> vertices_;
};

// True iff every arc of c joins the recorded vertices in d.
bool is_circuit_of(const Digraph& d, const Circuit& c);

// No two arcs share the same (tail, head) pair. Antiparallel pairs are fine.
bool validate_simple(const Digraph& d);

bool is_acyclic(const Digraph& d);

// Some circuit of d, or nullopt when d is acyclic. Deterministic.
std::optional<Circuit> find_circuit(const Digraph& d);
// Same, restricted to the subdigraph induced by the given vertices.
std::optional<Circuit> find_circuit(const Digraph& d,
                                    std::span<const Vertex> subset);

struct InducedSubdigraph {
  Digraph digraph;
  // original_vertex[i] is the vertex of the parent digraph labelled i here.
  std::vector<Vertex> original_vertex;
  std::vector<ArcId> original_arc;
};

// Vertices are relabelled by increasing original id; duplicates in subset
// are ignored. Throws InvalidArgument on an out-of-range vertex.
InducedSubdigraph induced_subdigraph(const Digraph& d,
                                     std::span<const Vertex> subset);

// Swaps tail and head of every arc of c. Arc ids are kept.
// Throws InvalidArgument if c is not a circuit of d.
Digraph reverse_circuit(const Digraph& d, const Circuit& c);

// Sorted multiset of {min, max} endpoint pairs.
std::vector<std::pair<Vertex, Vertex>> underlying_edges(const Digraph& d);

}  // namespace dicolor

#endif  // DICOLOR_DIGRAPH_HPP_
