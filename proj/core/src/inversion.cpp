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

#include "dicolor/inversion.hpp"

#include <string>

#include "dicolor/error.hpp"
#include "dicolor/ordering_condition.hpp"

namespace dicolor {

std::optional<Circuit> find_improving_circuit(const Digraph& d,
                                              const Ordering& order) {
  CheckOutcome outcome = check_ordering(d, order, 2);
  if (outcome.feasible()) return std::nullopt;
  return outcome.witness();
}

InversionTrace make_two_dicolorable(const Digraph& d,
                                    std::optional<Ordering> order) {
  InversionTrace trace;
  trace.order = order ? std::move(*order) : Ordering::identity(d.vertex_count());
  if (trace.order.size() != d.vertex_count()) {
    throw InvalidArgument("ordering does not match the digraph");
  }
  Digraph current = d;
  trace.initial_forward = forward_count(current, trace.order);
  std::size_t forward = trace.initial_forward;

  while (true) {
    const ScaledWeights w = arc_weights(current, trace.order, 2);
    CheckOutcome outcome = check_weights(current, w);
    if (outcome.feasible()) {
      trace.final_coloring =
          coloring_from_potentials(current, w, outcome.potential());
      break;
    }
    const Circuit& circuit = outcome.witness();
    current = reverse_circuit(current, circuit);
    const std::size_t next = forward_count(current, trace.order);
    if (next <= forward) {
      throw InternalError("reversal did not raise the forward count (" +
                          std::to_string(forward) + " -> " +
                          std::to_string(next) + ")");
    }
    forward = next;
    trace.steps.push_back({circuit, forward});
  }
  if (!is_acyclic_coloring(current, trace.final_coloring)) {
    throw InternalError("final 2-coloring is not acyclic");
  }
  trace.final_simple = validate_simple(current);
  trace.final_digraph = std::move(current);
  return trace;
}

Digraph replay(const Digraph& d, const InversionTrace& trace) {
  Digraph current = d;
  for (const InversionStep& step : trace.steps) {
    current = reverse_circuit(current, step.circuit);
  }
  return current;
}

}  // namespace dicolor
