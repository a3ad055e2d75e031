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

#ifndef DICOLOR_COLORING_HPP_
#define DICOLOR_COLORING_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "dicolor/digraph.hpp"
#include "dicolor/error.hpp"

namespace dicolor {

// Assignment of a class in 0..k-1 to every vertex. Empty classes are allowed.
class Coloring {
 public:
  Coloring() = default;
  // Throws InvalidArgument if k == 0 or some color is >= k.
  Coloring(std::size_t k, std::vector<std::size_t> colors);

  std::size_t k() const { return k_; }
  std::size_t size() const { return colors_.size(); }
  std::size_t color(Vertex v) const { return colors_[v]; }
  const std::vector<std::size_t>& colors() const { return colors_; }

  // Vertices of class t, increasing.
  std::vector<Vertex> color_class(std::size_t t) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::size_t k_ = 1;
  std::vector<std::size_t> colors_;
};

// A circuit whose vertices all share one color, if any. This is the single
// validator every producer of colorings is checked against.
std::optional<Circuit> find_monochromatic_circuit(const Digraph& d,
                                                  const Coloring& col);

// Every class induces an acyclic subdigraph (and sizes match).
bool is_acyclic_coloring(const Digraph& d, const Coloring& col);

// Raised when a coloring has a monochromatic circuit.
class InvalidColoring : public Error {
 public:
  InvalidColoring(const std::string& what, Circuit circuit)
      : Error(what), circuit_(std::move(circuit)) {}
  const Circuit& circuit() const { return circuit_; }

 private:
  Circuit circuit_;
};

}  // namespace dicolor

#endif  // DICOLOR_COLORING_HPP_
