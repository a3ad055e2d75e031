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

#ifndef DICOLOR_CIRCULATION_HPP_
#define DICOLOR_CIRCULATION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dicolor/digraph.hpp"
#include "dicolor/rational.hpp"

namespace dicolor {

// Vertex-arc incidence matrix: column a has -1 in the row of tail(a), +1 in
// the row of head(a) and zeros elsewhere. Stored by column since every
// column has exactly two nonzero entries.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(const Digraph& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  int entry(std::size_t row, std::size_t col) const;

  // M c, one entry per vertex.
  std::vector<Rational> multiply(std::span<const Rational> c) const;
  // (z^T M), one entry per arc: z(head) - z(tail).
  std::vector<std::int64_t> left_multiply(std::span<const std::int64_t> z) const;

 private:
  std::size_t rows_ = 0;
  std::vector<Arc> columns_;
};

IncidenceMatrix incidence_matrix(const Digraph& d);

// Nonnegative arc weighting with inflow = outflow at every vertex.
struct Circulation {
  std::vector<Rational> weights;  // indexed by arc id
};

// Nonnegative, one weight per arc, and M c = 0.
bool is_circulation(const Digraph& d, const Circulation& c);

// Weight 1 on the arcs of the circuit, 0 elsewhere.
Circulation circuit_indicator(const Digraph& d, const Circuit& c);

struct WeightedCircuit {
  Circuit circuit;
  Rational weight;
};

// Writes c as a positive combination of at most m circuits: repeatedly take
// a circuit of positive-weight arcs, subtract its minimum weight, and
// continue until nothing is left. Throws InvalidArgument when c has a
// negative entry, the wrong length, or violates conservation.
std::vector<WeightedCircuit> decompose_circulation(const Digraph& d,
                                                   const Circulation& c);

}  // namespace dicolor

#endif  // DICOLOR_CIRCULATION_HPP_
