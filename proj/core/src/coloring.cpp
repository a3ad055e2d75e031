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

#include "dicolor/coloring.hpp"

#include <string>

namespace dicolor {

Coloring::Coloring(std::size_t k, std::vector<std::size_t> colors)
    : k_(k), colors_(std::move(colors)) {
  if (k_ == 0) throw InvalidArgument("a coloring needs k >= 1");
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] >= k_) {
      throw InvalidArgument("vertex " + std::to_string(v) + " has color " +
                            std::to_string(colors_[v]) + " >= k = " +
                            std::to_string(k_));
    }
  }
}

std::vector<Vertex> Coloring::color_class(std::size_t t) const {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < colors_.size(); ++v) {
    if (colors_[v] == t) members.push_back(v);
  }
  return members;
}

std::optional<Circuit> find_monochromatic_circuit(const Digraph& d,
                                                  const Coloring& col) {
  if (col.size() != d.vertex_count()) {
    throw InvalidArgument("coloring covers " + std::to_string(col.size()) +
                          " vertices, digraph has " +
                          std::to_string(d.vertex_count()));
  }
  // Keep only arcs inside a class; ids are remapped afterwards.
  std::vector<Arc> kept;
  std::vector<ArcId> original;
  for (ArcId id = 0; id < d.arc_count(); ++id) {
    const Arc& a = d.arc(id);
    if (col.color(a.tail) != col.color(a.head)) continue;
    kept.push_back(a);
    original.push_back(id);
  }
  const Digraph mono(d.vertex_count(), std::move(kept));
  auto found = find_circuit(mono);
  if (!found) return std::nullopt;
  std::vector<ArcId> arcs;
  for (ArcId id : found->arcs()) arcs.push_back(original[id]);
  return Circuit::from_arcs(d, std::move(arcs));
}

bool is_acyclic_coloring(const Digraph& d, const Coloring& col) {
  if (col.size() != d.vertex_count()) return false;
  return !find_monochromatic_circuit(d, col).has_value();
}

}  // namespace dicolor
