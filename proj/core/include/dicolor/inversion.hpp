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

#ifndef DICOLOR_INVERSION_HPP_
#define DICOLOR_INVERSION_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "dicolor/coloring.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/ordering.hpp"

namespace dicolor {

struct InversionStep {
  Circuit circuit;      // as found, in the digraph before reversal
  std::size_t forward;  // forward arcs of the whole digraph after reversal
};

struct InversionTrace {
  Ordering order;
  std::size_t initial_forward = 0;
  std::vector<InversionStep> steps;
  Digraph final_digraph;
  Coloring final_coloring;  // k = 2
  bool final_simple = true;
};

// A circuit with more backward than forward arcs, or nullopt. This is the
// witness of check_ordering(d, order, 2).
std::optional<Circuit> find_improving_circuit(const Digraph& d,
                                              const Ordering& order);

// Reverses improving circuits until none is left. The ordering stays fixed;
// it defaults to the identity. Each reversal raises the forward count by
// backward - forward >= 1, so there are at most m - initial_forward steps.
InversionTrace make_two_dicolorable(const Digraph& d,
                                    std::optional<Ordering> order = {});

// Re-applies the recorded reversals to d.
Digraph replay(const Digraph& d, const InversionTrace& trace);

}  // namespace dicolor

#endif  // DICOLOR_INVERSION_HPP_
