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

#include <gtest/gtest.h>

#include "dicolor/circulation.hpp"
#include "dicolor/error.hpp"
#include "dicolor/generator.hpp"
#include "test_support.hpp"

namespace dicolor {
namespace {

using testing::bidirected_complete;
using testing::digon;
using testing::triangle;

TEST(DigraphTest, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Digraph(2, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Digraph(2, {{0, 2}}), InvalidArgument);
}

TEST(DigraphTest, AdjacencyListsAreInIdOrder) {
  const Digraph d(3, {{0, 2}, {1, 2}, {0, 1}, {0, 2}});
  const auto out = d.out_arcs(0);
  EXPECT_EQ(std::vector<ArcId>(out.begin(), out.end()),
            (std::vector<ArcId>{0, 2, 3}));
  const auto in = d.in_arcs(2);
  EXPECT_EQ(std::vector<ArcId>(in.begin(), in.end()),
            (std::vector<ArcId>{0, 1, 3}));
}

TEST(ValidateSimpleTest, Examples) {
  EXPECT_TRUE(validate_simple(triangle()));
  EXPECT_TRUE(validate_simple(digon()));
  EXPECT_FALSE(validate_simple(Digraph(2, {{0, 1}, {0, 1}})));
}

TEST(IsAcyclicTest, Examples) {
  EXPECT_TRUE(is_acyclic(Digraph(3)));
  EXPECT_FALSE(is_acyclic(triangle()));
  EXPECT_FALSE(is_acyclic(digon()));
  EXPECT_TRUE(is_acyclic(Digraph(4, {{0, 1}, {1, 2}, {0, 2}, {3, 2}})));
}

TEST(CircuitTest, CanonicalRotationStartsAtSmallestVertex) {
  const Digraph d(4, {{3, 1}, {1, 2}, {2, 3}});
  const Circuit c = Circuit::from_arcs(d, {1, 2, 0});
  EXPECT_EQ(std::vector<Vertex>(c.vertices().begin(), c.vertices().end()),
            (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(std::vector<ArcId>(c.arcs().begin(), c.arcs().end()),
            (std::vector<ArcId>{1, 2, 0}));
  EXPECT_EQ(c, Circuit::from_arcs(d, {0, 1, 2}));
}

TEST(CircuitTest, RejectsNonCircuits) {
  const Digraph d(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {1, 0}});
  EXPECT_THROW(Circuit::from_arcs(d, {}), InvalidArgument);
  EXPECT_THROW(Circuit::from_arcs(d, {0}), InvalidArgument);
  EXPECT_THROW(Circuit::from_arcs(d, {0, 1}), InvalidArgument);
  EXPECT_THROW(Circuit::from_arcs(d, {0, 9}), InvalidArgument);
  // Closed walk 0-1-0-1-2-0 repeats vertices.
  EXPECT_THROW(Circuit::from_arcs(d, {0, 4, 0, 1, 2}), InvalidArgument);
  EXPECT_NO_THROW(Circuit::from_arcs(d, {0, 4}));
}

TEST(FindCircuitTest, RestrictedToSubset) {
  const Digraph d = bidirected_complete(3);
  const auto c = find_circuit(d);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(is_circuit_of(d, *c));
  const std::vector<Vertex> single{2};
  EXPECT_FALSE(find_circuit(d, single).has_value());
  const std::vector<Vertex> pair{0, 2};
  const auto found = find_circuit(d, pair);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->length(), 2U);
}

TEST(InducedSubdigraphTest, Examples) {
  const std::vector<Vertex> s12{1, 2};
  const auto sub = induced_subdigraph(triangle(), s12);
  EXPECT_EQ(sub.digraph.vertex_count(), 2U);
  ASSERT_EQ(sub.digraph.arc_count(), 1U);
  EXPECT_EQ(sub.digraph.arc(0), (Arc{0, 1}));
  EXPECT_EQ(sub.original_vertex, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(sub.original_arc, (std::vector<ArcId>{1}));

  const std::vector<Vertex> all{0, 1, 2};
  const auto whole = induced_subdigraph(triangle(), all);
  EXPECT_EQ(whole.digraph, triangle());
  EXPECT_EQ(whole.original_vertex, all);

  const std::vector<Vertex> s01{0, 1};
  EXPECT_EQ(induced_subdigraph(bidirected_complete(3), s01).digraph, digon());

  const std::vector<Vertex> bad{0, 5};
  EXPECT_THROW(induced_subdigraph(triangle(), bad), InvalidArgument);
}

TEST(IncidenceMatrixTest, Triangle) {
  const IncidenceMatrix m = incidence_matrix(triangle());
  ASSERT_EQ(m.rows(), 3U);
  ASSERT_EQ(m.cols(), 3U);
  const int expected[3][3] = {{-1, 1, 0}, {0, -1, 1}, {1, 0, -1}};
  for (std::size_t col = 0; col < 3; ++col) {
    for (std::size_t row = 0; row < 3; ++row) {
      EXPECT_EQ(m.entry(row, col), expected[col][row]) << row << "," << col;
    }
  }
}

TEST(IncidenceMatrixTest, DigonAndEmpty) {
  const IncidenceMatrix m = incidence_matrix(digon());
  EXPECT_EQ(m.entry(0, 0), -1);
  EXPECT_EQ(m.entry(1, 0), 1);
  EXPECT_EQ(m.entry(0, 1), 1);
  EXPECT_EQ(m.entry(1, 1), -1);

  const IncidenceMatrix empty = incidence_matrix(Digraph(4));
  EXPECT_EQ(empty.rows(), 4U);
  EXPECT_EQ(empty.cols(), 0U);
}

TEST(IncidenceMatrixTest, ColumnsSumToZeroWithTwoNonzeros) {
  const Digraph d = random_digraph(9, 0.4, 5);
  const IncidenceMatrix m = incidence_matrix(d);
  for (std::size_t col = 0; col < m.cols(); ++col) {
    int sum = 0;
    int nonzero = 0;
    for (std::size_t row = 0; row < m.rows(); ++row) {
      sum += m.entry(row, col);
      nonzero += m.entry(row, col) != 0 ? 1 : 0;
    }
    EXPECT_EQ(sum, 0);
    EXPECT_EQ(nonzero, 2);
  }
}

TEST(ReverseCircuitTest, Triangle) {
  const Digraph d = triangle();
  const Circuit c = Circuit::from_arcs(d, {0, 1, 2});
  const Digraph r = reverse_circuit(d, c);
  EXPECT_EQ(r, Digraph(3, {{1, 0}, {2, 1}, {0, 2}}));
  // c is no longer a circuit of r; its reverse is.
  EXPECT_THROW(reverse_circuit(r, c), InvalidArgument);
  const Digraph back = reverse_circuit(r, Circuit::from_arcs(r, {2, 1, 0}));
  EXPECT_EQ(back, d);
}

TEST(ReverseCircuitTest, DigonIsInvariant) {
  const Digraph d = digon();
  EXPECT_EQ(reverse_circuit(d, Circuit::from_arcs(d, {0, 1})),
            Digraph(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(underlying_edges(reverse_circuit(d, Circuit::from_arcs(d, {0, 1}))),
            underlying_edges(d));
}

TEST(ReverseCircuitTest, CanCreateParallelArcs) {
  // Reversing 0->1->2->0 while 1->0 exists gives two arcs 1->0.
  const Digraph d(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}});
  const Digraph r = reverse_circuit(d, Circuit::from_arcs(d, {0, 1, 2}));
  EXPECT_FALSE(validate_simple(r));
  EXPECT_EQ(r.arc_count(), 4U);
}

TEST(RandomDigraphTest, Extremes) {
  EXPECT_EQ(random_digraph(5, 0.0, 1).arc_count(), 0U);
  EXPECT_EQ(random_digraph(4, 1.0, 7), bidirected_complete(4));
  EXPECT_THROW(random_digraph(3, 1.5, 0), InvalidArgument);
  EXPECT_THROW(random_digraph(3, -0.1, 0), InvalidArgument);
}

TEST(RandomDigraphTest, RegressionFixture) {
  // Frozen output of std::mt19937_64 for (30, 0.2, 42).
  const Digraph d = random_digraph(30, 0.2, 42);
  EXPECT_EQ(d.arc_count(), 176U);
  EXPECT_EQ(d.arc(0), (Arc{0, 4}));
  EXPECT_EQ(d.arc(175), (Arc{29, 28}));
  EXPECT_EQ(d, random_digraph(30, 0.2, 42));
  EXPECT_NE(d, random_digraph(30, 0.2, 43));
}

}  // namespace
}  // namespace dicolor
