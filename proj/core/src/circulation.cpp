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

#include "dicolor/circulation.hpp"

#include <algorithm>
#include <string>

#include "dicolor/error.hpp"

namespace dicolor {

IncidenceMatrix::IncidenceMatrix(const Digraph& d)
    : rows_(d.vertex_count()), columns_(d.arcs().begin(), d.arcs().end()) {}

int IncidenceMatrix::entry(std::size_t row, std::size_t col) const {
  const Arc& a = columns_[col];
  if (row == a.tail) return -1;
  if (row == a.head) return 1;
  return 0;
}

std::vector<Rational> IncidenceMatrix::multiply(
    std::span<const Rational> c) const {
  if (c.size() != columns_.size()) {
    throw InvalidArgument("vector length does not match column count");
  }
  std::vector<Rational> out(rows_);
  for (std::size_t col = 0; col < columns_.size(); ++col) {
    out[columns_[col].tail] -= c[col];
    out[columns_[col].head] += c[col];
  }
  return out;
}

std::vector<std::int64_t> IncidenceMatrix::left_multiply(
    std::span<const std::int64_t> z) const {
  if (z.size() != rows_) {
    throw InvalidArgument("vector length does not match row count");
  }
  std::vector<std::int64_t> out(columns_.size());
  for (std::size_t col = 0; col < columns_.size(); ++col) {
    out[col] = z[columns_[col].head] - z[columns_[col].tail];
  }
  return out;
}

IncidenceMatrix incidence_matrix(const Digraph& d) { return IncidenceMatrix(d); }

bool is_circulation(const Digraph& d, const Circulation& c) {
  if (c.weights.size() != d.arc_count()) return false;
  if (std::any_of(c.weights.begin(), c.weights.end(),
                  [](const Rational& w) { return w < 0; })) {
    return false;
  }
  const auto excess = IncidenceMatrix(d).multiply(c.weights);
  return std::all_of(excess.begin(), excess.end(),
                     [](const Rational& x) { return x == 0; });
}

Circulation circuit_indicator(const Digraph& d, const Circuit& c) {
  Circulation out{std::vector<Rational>(d.arc_count())};
  for (ArcId id : c.arcs()) out.weights[id] = 1;
  return out;
}

std::vector<WeightedCircuit> decompose_circulation(const Digraph& d,
                                                   const Circulation& c) {
  if (c.weights.size() != d.arc_count()) {
    throw InvalidArgument("circulation has " + std::to_string(c.weights.size()) +
                          " weights for " + std::to_string(d.arc_count()) +
                          " arcs");
  }
  for (ArcId id = 0; id < d.arc_count(); ++id) {
    if (c.weights[id] < 0) {
      throw InvalidArgument("negative weight on arc " + std::to_string(id));
    }
  }
  const auto excess = IncidenceMatrix(d).multiply(c.weights);
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (excess[v] != 0) {
      throw InvalidArgument("conservation violated at vertex " +
                            std::to_string(v));
    }
  }

  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<Rational> remaining = c.weights;
  std::vector<std::size_t> path_index(d.vertex_count(), kUnvisited);
  std::vector<WeightedCircuit> result;
  ArcId scan = 0;
  while (true) {
    while (scan < d.arc_count() && remaining[scan] == 0) ++scan;
    if (scan == d.arc_count()) break;

    // Conservation guarantees every vertex reached through a positive arc
    // has a positive out-arc, so the walk closes on itself.
    std::vector<ArcId> walk{scan};
    std::vector<Vertex> visited{d.arc(scan).tail};
    path_index[d.arc(scan).tail] = 0;
    Vertex current = d.arc(scan).head;
    while (path_index[current] == kUnvisited) {
      path_index[current] = walk.size();
      visited.push_back(current);
      const auto out = d.out_arcs(current);
      const auto next = std::find_if(out.begin(), out.end(), [&](ArcId id) {
        return remaining[id] > 0;
      });
      if (next == out.end()) {
        throw InternalError("positive walk stuck at vertex " +
                            std::to_string(current));
      }
      walk.push_back(*next);
      current = d.arc(*next).head;
    }
    std::vector<ArcId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(
                                                path_index[current]),
                             walk.end());
    for (Vertex v : visited) path_index[v] = kUnvisited;

    Rational weight = remaining[cycle.front()];
    for (ArcId id : cycle) weight = std::min(weight, remaining[id]);
    for (ArcId id : cycle) remaining[id] -= weight;
    result.push_back({Circuit::from_arcs(d, std::move(cycle)), weight});
  }
  return result;
}

}  // namespace dicolor
