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

#include <gtest/gtest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "dicolor/generator.hpp"
#include "dicolor/oracle.hpp"
#include "dicolor/ordering_condition.hpp"
#include "test_support.hpp"

namespace dicolor {
namespace {

TEST(FindImprovingCircuitTest, Examples) {
  const Digraph rev = testing::reversed_triangle();
  const auto c = find_improving_circuit(rev, Ordering::identity(3));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, Circuit::from_arcs(rev, {2, 1, 0}));
  EXPECT_EQ(forward_count(rev, Ordering::identity(3), *c), 1U);

  EXPECT_FALSE(find_improving_circuit(testing::triangle(), Ordering::identity(3)));
  EXPECT_FALSE(find_improving_circuit(Digraph(3, {{0, 1}, {2, 1}}),
                                      Ordering::identity(3)));
}

TEST(MakeTwoDicolorableTest, ReversedTriangleTakesOneStep) {
  const InversionTrace trace = make_two_dicolorable(testing::reversed_triangle());
  EXPECT_EQ(trace.initial_forward, 1U);
  ASSERT_EQ(trace.steps.size(), 1U);
  EXPECT_EQ(trace.steps[0].forward, 2U);
  EXPECT_EQ(trace.final_digraph, testing::triangle());
  EXPECT_EQ(trace.final_coloring.colors(), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_TRUE(trace.final_simple);
}

TEST(MakeTwoDicolorableTest, AcyclicNeedsNoReversal) {
  const Digraph dag(4, {{3, 2}, {2, 1}, {1, 0}});
  const InversionTrace trace = make_two_dicolorable(dag);
  EXPECT_TRUE(trace.steps.empty());
  EXPECT_EQ(trace.final_digraph, dag);
  EXPECT_EQ(trace.final_coloring.k(), 2U);
  EXPECT_TRUE(is_acyclic_coloring(dag, trace.final_coloring));
}

TEST(MakeTwoDicolorableTest, BidirectedK3) {
  const Digraph d = testing::bidirected_complete(3);
  const InversionTrace trace = make_two_dicolorable(d);
  EXPECT_FALSE(trace.steps.empty());
  EXPECT_TRUE(check_ordering(trace.final_digraph, trace.order, 2).feasible());
  EXPECT_TRUE(is_acyclic_coloring(trace.final_digraph, trace.final_coloring));
  EXPECT_LE(oracle::dichromatic_number(trace.final_digraph), 2U);
  for (const Circuit& c :
       oracle::enumerate_circuits(trace.final_digraph).circuits) {
    EXPECT_GE(2 * forward_count(trace.final_digraph, trace.order, c),
              c.length());
  }
  EXPECT_EQ(replay(d, trace), trace.final_digraph);
}

TEST(MakeTwoDicolorableTest, CustomOrderingIsHeldFixed) {
  const Digraph d = testing::bidirected_complete(4);
  const Ordering order = Ordering::from_sequence({3, 1, 0, 2});
  const InversionTrace trace = make_two_dicolorable(d, order);
  EXPECT_EQ(trace.order, order);
  EXPECT_TRUE(check_ordering(trace.final_digraph, order, 2).feasible());
  EXPECT_THROW(make_two_dicolorable(d, Ordering::identity(3)), InvalidArgument);
}

TEST(MakeTwoDicolorableTest, TraceInvariantsOnRandomDigraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 3 + seed % 15;
    const Digraph d = random_digraph(n, 0.2 + 0.1 * (seed % 5), seed);
    const InversionTrace trace = make_two_dicolorable(d);
    std::size_t previous = trace.initial_forward;
    for (const auto& step : trace.steps) {
      ASSERT_GT(step.forward, previous);
      previous = step.forward;
    }
    EXPECT_LE(trace.steps.size(), d.arc_count() - trace.initial_forward);
    EXPECT_EQ(underlying_edges(trace.final_digraph), underlying_edges(d));
    EXPECT_EQ(replay(d, trace), trace.final_digraph);
    EXPECT_TRUE(is_acyclic_coloring(trace.final_digraph, trace.final_coloring));
    EXPECT_EQ(trace.final_simple, validate_simple(trace.final_digraph));
  }
}

// Dropping duplicate parallel arcs never adds a circuit, so the coloring
// also holds for the simple digraph underneath.
TEST(MakeTwoDicolorableTest, ColoringSurvivesCollapsingParallelArcs) {
  std::size_t non_simple = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Digraph d = random_digraph(6 + seed % 10, 0.5, seed);
    const InversionTrace trace = make_two_dicolorable(d);
    if (trace.final_simple) continue;
    ++non_simple;
    std::vector<Arc> arcs(trace.final_digraph.arcs().begin(),
                          trace.final_digraph.arcs().end());
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
      return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
    });
    arcs.erase(std::unique(arcs.begin(), arcs.end(),
                           [](const Arc& a, const Arc& b) {
                             return a.tail == b.tail && a.head == b.head;
                           }),
               arcs.end());
    const Digraph collapsed(d.vertex_count(), std::move(arcs));
    ASSERT_TRUE(validate_simple(collapsed));
    EXPECT_TRUE(is_acyclic_coloring(collapsed, trace.final_coloring));
    if (collapsed.vertex_count() <= 10) {
      EXPECT_LE(oracle::dichromatic_number(collapsed), 2U);
    }
  }
  EXPECT_GT(non_simple, 0U);
}

}  // namespace
}  // namespace dicolor
