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

#include "dicolor/digraph.hpp"

#include <algorithm>
#include <string>

#include "dicolor/error.hpp"

namespace dicolor {

Digraph::Digraph(std::size_t vertex_count) : vertex_count_(vertex_count) {
  build_adjacency();
}

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
  for (std::size_t id = 0; id < arcs_.size(); ++id) {
    const Arc& a = arcs_[id];
    if (a.tail >= vertex_count_ || a.head >= vertex_count_) {
      throw InvalidArgument("arc " + std::to_string(id) +
                            " has an endpoint out of range");
    }
    if (a.tail == a.head) {
      throw InvalidArgument("arc " + std::to_string(id) + " is a loop");
    }
  }
  build_adjacency();
}

void Digraph::build_adjacency() {
  // Counting sort into CSR; ids stay increasing within each list.
  out_offsets_.assign(vertex_count_ + 1, 0);
  in_offsets_.assign(vertex_count_ + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offsets_[a.tail + 1];
    ++in_offsets_[a.head + 1];
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_list_.resize(arcs_.size());
  in_list_.resize(arcs_.size());
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (ArcId id = 0; id < arcs_.size(); ++id) {
    out_list_[out_fill[arcs_[id].tail]++] = id;
    in_list_[in_fill[arcs_[id].head]++] = id;
  }
}

std::span<const ArcId> Digraph::out_arcs(Vertex v) const {
  return std::span<const ArcId>(out_list_).subspan(
      out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const ArcId> Digraph::in_arcs(Vertex v) const {
  return std::span<const ArcId>(in_list_).subspan(
      in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
}

Circuit Circuit::from_arcs(const Digraph& d, std::vector<ArcId> arcs) {
  if (arcs.size() < 2) {
    throw InvalidArgument("a circuit needs at least two arcs");
  }
  const std::size_t len = arcs.size();
  std::vector<Vertex> vertices(len);
  std::vector<bool> seen(d.vertex_count(), false);
  for (ArcId id : arcs) {
    if (id >= d.arc_count()) {
      throw InvalidArgument("arc id " + std::to_string(id) + " out of range");
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    const Arc& a = d.arc(arcs[i]);
    if (a.head != d.arc(arcs[(i + 1) % len]).tail) {
      throw InvalidArgument("arcs do not form a closed walk");
    }
    if (seen[a.tail]) {
      throw InvalidArgument("circuit repeats vertex " + std::to_string(a.tail));
    }
    seen[a.tail] = true;
    vertices[i] = a.tail;
  }
  const auto first = static_cast<std::ptrdiff_t>(
      std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  std::rotate(arcs.begin(), arcs.begin() + first, arcs.end());
  std::rotate(vertices.begin(), vertices.begin() + first, vertices.end());
  Circuit c;
  c.arcs_ = std::move(arcs);
  c.vertices_ = std::move(vertices);
  return c;
}

std::strong_ordering operator<=>(const Circuit& a, const Circuit& b) {
  if (auto cmp = a.vertices_ <=> b.vertices_; cmp != 0) return cmp;
  return a.arcs_ <=> b.arcs_;
}

bool is_circuit_of(const Digraph& d, const Circuit& c) {
  const auto arcs = c.arcs();
  const auto verts = c.vertices();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i] >= d.arc_count()) return false;
    const Arc& a = d.arc(arcs[i]);
    if (a.tail != verts[i] || a.head != verts[(i + 1) % verts.size()]) {
      return false;
    }
  }
  return true;
}

bool validate_simple(const Digraph& d) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) pairs.emplace_back(a.tail, a.head);
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool is_acyclic(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> indegree(n);
  for (Vertex v = 0; v < n; ++v) indegree[v] = d.in_arcs(v).size();
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (ArcId id : d.out_arcs(v)) {
      if (--indegree[d.arc(id).head] == 0) ready.push_back(d.arc(id).head);
    }
  }
  return removed == n;
}

namespace {

std::optional<Circuit> find_circuit_masked(const Digraph& d,
                                           const std::vector<bool>& member) {
  enum class Mark : unsigned char { kWhite, kGray, kBlack };
  const std::size_t n = d.vertex_count();
  std::vector<Mark> mark(n, Mark::kWhite);
  std::vector<std::size_t> stack_index(n, 0);

  struct Frame {
    Vertex vertex;
    std::size_t next;  // index into out_arcs
    ArcId entry;       // arc used to reach vertex; unused for the root
  };
  std::vector<Frame> stack;

  for (Vertex root = 0; root < n; ++root) {
    if (!member[root] || mark[root] != Mark::kWhite) continue;
    stack.push_back({root, 0, 0});
    mark[root] = Mark::kGray;
    stack_index[root] = 0;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto out = d.out_arcs(top.vertex);
      if (top.next == out.size()) {
        mark[top.vertex] = Mark::kBlack;
        stack.pop_back();
        continue;
      }
      const ArcId id = out[top.next++];
      const Vertex w = d.arc(id).head;
      if (!member[w] || mark[w] == Mark::kBlack) continue;
      if (mark[w] == Mark::kGray) {
        std::vector<ArcId> arcs;
        for (std::size_t i = stack_index[w] + 1; i < stack.size(); ++i) {
          arcs.push_back(stack[i].entry);
        }
        arcs.push_back(id);
        return Circuit::from_arcs(d, std::move(arcs));
      }
      mark[w] = Mark::kGray;
      stack_index[w] = stack.size();
      stack.push_back({w, 0, id});
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Circuit> find_circuit(const Digraph& d) {
  return find_circuit_masked(d, std::vector<bool>(d.vertex_count(), true));
}

std::optional<Circuit> find_circuit(const Digraph& d,
                                    std::span<const Vertex> subset) {
  std::vector<bool> member(d.vertex_count(), false);
  for (Vertex v : subset) {
    if (v >= d.vertex_count()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
    member[v] = true;
  }
  return find_circuit_masked(d, member);
}

InducedSubdigraph induced_subdigraph(const Digraph& d,
                                     std::span<const Vertex> subset) {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(d.vertex_count(), kAbsent);
  for (Vertex v : subset) {
    if (v >= d.vertex_count()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
    label[v] = 0;
  }
  InducedSubdigraph result;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (label[v] == kAbsent) continue;
    label[v] = result.original_vertex.size();
    result.original_vertex.push_back(v);
  }
  std::vector<Arc> arcs;
  for (ArcId id = 0; id < d.arc_count(); ++id) {
    const Arc& a = d.arc(id);
    if (label[a.tail] == kAbsent || label[a.head] == kAbsent) continue;
    arcs.push_back({label[a.tail], label[a.head]});
    result.original_arc.push_back(id);
  }
  result.digraph = Digraph(result.original_vertex.size(), std::move(arcs));
  return result;
}

Digraph reverse_circuit(const Digraph& d, const Circuit& c) {
  if (!is_circuit_of(d, c)) {
    throw InvalidArgument("not a circuit of this digraph");
  }
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (ArcId id : c.arcs()) std::swap(arcs[id].tail, arcs[id].head);
  return Digraph(d.vertex_count(), std::move(arcs));
}

std::vector<std::pair<Vertex, Vertex>> underlying_edges(const Digraph& d) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) {
    edges.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace dicolor
