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

#include "dicolor/edge_list.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "dicolor/error.hpp"
#include "dicolor/generator.hpp"
#include "test_support.hpp"

namespace dicolor {
namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_digraph(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseDigraphTest, Examples) {
  EXPECT_EQ(parse_digraph("3 3\n0 1\n1 2\n2 0\n"), testing::triangle());
  EXPECT_EQ(parse_digraph("2 2\n0 1\n1 0\n"), testing::digon());
  EXPECT_EQ(parse_error("2 1\n0 0\n"), "loop at line 2");
}

TEST(ParseDigraphTest, CommentsAndBlankLines) {
  const Digraph d = parse_digraph("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n2 0");
  EXPECT_EQ(d, testing::triangle());
}

TEST(ParseDigraphTest, Errors) {
  EXPECT_EQ(parse_error(""), "missing 'n m' header");
  EXPECT_EQ(parse_error("3\n"), "expected 'n m' header at line 1");
  EXPECT_EQ(parse_error("3 1\n0 x\n"), "expected 'tail head' at line 2");
  EXPECT_EQ(parse_error("3 1\n0 1 2\n"), "expected 'tail head' at line 2");
  EXPECT_EQ(parse_error("3 1\n0 3\n"), "vertex out of range at line 2");
  EXPECT_EQ(parse_error("3 1\n0 1\n1 2\n"), "more than 1 arcs at line 3");
  EXPECT_EQ(parse_error("3 2\n0 1\n"), "expected 2 arcs, found 1");
  EXPECT_EQ(parse_error("3 1\n-1 2\n"), "expected 'tail head' at line 2");
}

TEST(FormatDigraphTest, RoundTrip) {
  const Digraph d = random_digraph(12, 0.3, 11);
  EXPECT_EQ(parse_digraph(format_digraph(d)), d);
  EXPECT_EQ(format_digraph(testing::triangle()), "3 3\n0 1\n1 2\n2 0\n");
  std::istringstream in(format_digraph(d));
  EXPECT_EQ(read_digraph(in), d);
}

}  // namespace
}  // namespace dicolor
