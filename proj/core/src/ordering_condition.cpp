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

#include "dicolor/ordering_condition.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "dicolor/error.hpp"

namespace dicolor {

namespace {

constexpr ArcId kNoArc = static_cast<ArcId>(-1);

std::int64_t floor_mod(std::int64_t value, std::int64_t k) {
  const std::int64_t r = value % k;
  return r < 0 ? r + k : r;
}

// Looks for a cycle in the predecessor graph v -> tail(pred[v]). Any such
// cycle has negative weight. Returned arcs are in forward direction.
std::optional<std::vector<ArcId>> predecessor_cycle(
    const Digraph& d, const std::vector<ArcId>& pred) {
  const std::size_t n = d.vertex_count();
  constexpr std::size_t kFresh = 0;
  std::vector<std::size_t> stamp(n, kFresh);
  for (Vertex start = 0; start < n; ++start) {
    if (stamp[start] != kFresh) continue;
    const std::size_t walk_id = start + 1;
    Vertex v = start;
    while (stamp[v] == kFresh && pred[v] != kNoArc) {
      stamp[v] = walk_id;
      v = d.arc(pred[v]).tail;
    }
    if (stamp[v] != walk_id) {
      stamp[v] = std::max<std::size_t>(stamp[v], 1);
      continue;
    }
    std::vector<ArcId> cycle;
    Vertex u = v;
    do {
      cycle.push_back(pred[u]);
      u = d.arc(pred[u]).tail;
    } while (u != v);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
  }
  return std::nullopt;
}

}  // namespace

ScaledWeights arc_weights(const Digraph& d, const Ordering& order,
                          std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  if (order.size() != d.vertex_count()) {
    throw InvalidArgument("ordering has " + std::to_string(order.size()) +
                          " vertices, digraph has " +
                          std::to_string(d.vertex_count()));
  }
  ScaledWeights w;
  w.k = k;
  w.weights.reserve(d.arc_count());
  const auto forward_weight = static_cast<std::int64_t>(k) - 1;
  for (const Arc& a : d.arcs()) {
    w.weights.push_back(order.is_forward(a) ? forward_weight : -1);
  }
  return w;
}

CheckOutcome check_weights(const Digraph& d, const ScaledWeights& w) {
  if (w.weights.size() != d.arc_count()) {
    throw InvalidArgument("weight vector does not match arc count");
  }
  const std::size_t n = d.vertex_count();
  const auto arcs = d.arcs();
  std::vector<std::int64_t> dist(n, 0);
  std::vector<ArcId> pred(n, kNoArc);
  while (true) {
    bool changed = false;
    for (ArcId id = 0; id < arcs.size(); ++id) {
      const std::int64_t candidate = dist[arcs[id].tail] + w.weights[id];
      if (candidate < dist[arcs[id].head]) {
        dist[arcs[id].head] = candidate;
        pred[arcs[id].head] = id;
        changed = true;
      }
    }
    if (!changed) return CheckOutcome(Potential{std::move(dist)});
    if (auto cycle = predecessor_cycle(d, pred)) {
      std::int64_t total = 0;
      for (ArcId id : *cycle) total += w.weights[id];
      if (total >= 0) {
        throw InternalError("predecessor cycle with nonnegative weight");
      }
      return CheckOutcome(Circuit::from_arcs(d, std::move(*cycle)));
    }
  }
}

CheckOutcome check_ordering(const Digraph& d, const Ordering& order,
                            std::size_t k) {
  return check_weights(d, arc_weights(d, order, k));
}

Coloring coloring_from_potentials(const Digraph& d, const ScaledWeights& w,
                                  const Potential& z) {
  if (z.values.size() != d.vertex_count()) {
    throw CertificateError("potential has " + std::to_string(z.values.size()) +
                           " entries, digraph has " +
                           std::to_string(d.vertex_count()) + " vertices");
  }
  if (w.weights.size() != d.arc_count() || w.k == 0) {
    throw InvalidArgument("weights do not match the digraph");
  }
  for (ArcId id = 0; id < d.arc_count(); ++id) {
    const Arc& a = d.arc(id);
    if (z.values[a.head] - z.values[a.tail] > w.weights[id]) {
      throw CertificateError("potential violates arc " + std::to_string(id) +
                             " (" + std::to_string(a.tail) + "->" +
                             std::to_string(a.head) + ")");
    }
  }
  const auto k = static_cast<std::int64_t>(w.k);
  std::vector<std::size_t> colors(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    colors[v] = static_cast<std::size_t>(floor_mod(z.values[v], k));
  }
  Coloring col(w.k, std::move(colors));
  if (find_monochromatic_circuit(d, col)) {
    throw InternalError("potential coloring has a monochromatic circuit");
  }
  return col;
}

ColoringOutcome color_with_ordering(const Digraph& d, const Ordering& order,
                                    std::size_t k) {
  const ScaledWeights w = arc_weights(d, order, k);
  CheckOutcome outcome = check_weights(d, w);
  if (!outcome.feasible()) return outcome.witness();
  return coloring_from_potentials(d, w, outcome.potential());
}

Ordering ordering_from_coloring(const Digraph& d, const Coloring& col) {
  if (col.size() != d.vertex_count()) {
    throw InvalidArgument("coloring covers " + std::to_string(col.size()) +
                          " vertices, digraph has " +
                          std::to_string(d.vertex_count()));
  }
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  for (const Arc& a : d.arcs()) {
    if (col.color(a.tail) == col.color(a.head)) ++indegree[a.head];
  }
  std::vector<std::vector<Vertex>> classes(col.k());
  for (Vertex v = 0; v < n; ++v) classes[col.color(v)].push_back(v);

  std::vector<Vertex> sequence;
  sequence.reserve(n);
  for (const auto& members : classes) {
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v : members) {
      if (indegree[v] == 0) ready.push(v);
    }
    std::size_t placed = 0;
    while (!ready.empty()) {
      const Vertex v = ready.top();
      ready.pop();
      sequence.push_back(v);
      ++placed;
      for (ArcId id : d.out_arcs(v)) {
        const Vertex h = d.arc(id).head;
        if (col.color(h) == col.color(v) && --indegree[h] == 0) ready.push(h);
      }
    }
    if (placed != members.size()) {
      auto circuit = find_circuit(d, members);
      if (!circuit) throw InternalError("topological sort stalled");
      throw InvalidColoring("color class " +
                                std::to_string(col.color(members.front())) +
                                " contains a circuit",
                            std::move(*circuit));
    }
  }
  return Ordering::from_sequence(std::move(sequence));
}

bool verify_farkas(const Digraph& d, const ScaledWeights& w,
                   const Potential& z) {
  if (z.values.size() != d.vertex_count() ||
      w.weights.size() != d.arc_count()) {
    return false;
  }
  const auto lhs = IncidenceMatrix(d).left_multiply(z.values);
  for (std::size_t a = 0; a < lhs.size(); ++a) {
    if (lhs[a] > w.weights[a]) return false;
  }
  return true;
}

bool verify_farkas(const Digraph& d, const ScaledWeights& w,
                   const Circulation& c) {
  if (w.weights.size() != d.arc_count() || !is_circulation(d, c)) {
    return false;
  }
  Rational total = 0;
  for (std::size_t a = 0; a < c.weights.size(); ++a) {
    total += c.weights[a] * w.weights[a];
  }
  return total < 0;
}

}  // namespace dicolor
