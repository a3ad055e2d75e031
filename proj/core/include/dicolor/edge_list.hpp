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

#ifndef DICOLOR_EDGE_LIST_HPP_
#define DICOLOR_EDGE_LIST_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "dicolor/digraph.hpp"

namespace dicolor {

// Edge-list text format:
//
//   # comment lines start with '#'
//   n m
//   tail head      (exactly m lines, 0-indexed)
//
// Arc ids follow line order. Errors are ParseError with a 1-based line
// number, e.g. "loop at line 2".
Digraph parse_digraph(std::string_view text);
Digraph read_digraph(std::istream& in);

// Inverse of parse_digraph; arcs in id order, one per line.
std::string format_digraph(const Digraph& d);

}  // namespace dicolor

#endif  // DICOLOR_EDGE_LIST_HPP_
