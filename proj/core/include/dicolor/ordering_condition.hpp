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

#ifndef DICOLOR_ORDERING_CONDITION_HPP_
#define DICOLOR_ORDERING_CONDITION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dicolor/circulation.hpp"
#include "dicolor/coloring.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/ordering.hpp"
#include "dicolor/rational.hpp"

namespace dicolor {

// The arc weighting forw(a) - 1/k scaled by k so that everything is an
// integer: k - 1 on forward arcs, -1 on backward arcs.
struct ScaledWeights {
  std::size_t k = 1;
  std::vector<std::int64_t> weights;  // indexed by arc id
};

// Integer vertex potential Z with Z(head) - Z(tail) <= W(a) on every arc.
// The real-valued potential is Z / k.
struct Potential {
  std::vector<std::int64_t> values;
};

// Either a potential (every circuit has at least |C|/k forward arcs) or a
// circuit with fewer than |C|/k forward arcs.
class CheckOutcome {
 public:
  explicit CheckOutcome(Potential p) : value_(std::move(p)) {}
  explicit CheckOutcome(Circuit c) : value_(std::move(c)) {}

  bool feasible() const { return std::holds_alternative<Potential>(value_); }
  const Potential& potential() const { return std::get<Potential>(value_); }
  const Circuit& witness() const { return std::get<Circuit>(value_); }

 private:
  std::variant<Potential, Circuit> value_;
};

// Throws InvalidArgument if k == 0 or the ordering size differs from n.
ScaledWeights arc_weights(const Digraph& d, const Ordering& order,
                          std::size_t k);

// Decides whether every circuit C of d has at least |C|/k arcs going
// forward in order.
//
// Runs Bellman-Ford from a virtual source joined to every vertex by a
// weight-0 arc, relaxing arcs in id order. When relaxation settles, the
// distances are the (canonical) potential, with values in [-(n-1), 0].
// Otherwise a cycle shows up in the predecessor graph; it has negative
// scaled weight and is returned as the witness.
CheckOutcome check_ordering(const Digraph& d, const Ordering& order,
                            std::size_t k);

// Same as above with precomputed weights.
CheckOutcome check_weights(const Digraph& d, const ScaledWeights& w);

// color(v) = Z(v) mod k, rounded towards minus infinity. Throws
// CertificateError naming the first arc whose inequality fails, and
// InternalError if a class is not acyclic.
Coloring coloring_from_potentials(const Digraph& d, const ScaledWeights& w,
                                  const Potential& z);

// check_ordering followed by coloring_from_potentials.
using ColoringOutcome = std::variant<Coloring, Circuit>;
ColoringOutcome color_with_ordering(const Digraph& d, const Ordering& order,
                                    std::size_t k);

// Lays out class 0, then class 1, ...; inside a class a topological order
// of the induced subdigraph, smallest available vertex first. Throws
// InvalidColoring carrying a monochromatic circuit.
Ordering ordering_from_coloring(const Digraph& d, const Coloring& col);

// Minimum over circuits of forward(C) / |C|. Unset when d is acyclic.
struct ForwardRatio {
  std::optional<Rational> ratio;

  // Least k for which check_ordering is feasible: ceil(1 / ratio), or 1
  // when there is no circuit.
  std::size_t least_k() const;
};

// Karp's minimum mean cycle on the 0/1 forward indicator, run per strongly
// connected component. Exact.
ForwardRatio min_forward_ratio(const Digraph& d, const Ordering& order);

// Checks (z^T M) <= W componentwise.
bool verify_farkas(const Digraph& d, const ScaledWeights& w,
                   const Potential& z);
// Checks M c = 0, c >= 0 and W^T c < 0, which rules out every potential.
bool verify_farkas(const Digraph& d, const ScaledWeights& w,
                   const Circulation& c);

}  // namespace dicolor

#endif  // DICOLOR_ORDERING_CONDITION_HPP_
