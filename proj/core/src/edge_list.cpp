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

#include <charconv>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "dicolor/error.hpp"

namespace dicolor {

namespace {

// Splits on blanks; returns nullopt unless there are exactly two unsigned
// decimal tokens.
std::optional<std::pair<std::size_t, std::size_t>> parse_pair(
    std::string_view line) {
  std::size_t values[2];
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (count == 2) return std::nullopt;
    auto [ptr, ec] =
        std::from_chars(line.data() + i, line.data() + j, values[count]);
    if (ec != std::errc() || ptr != line.data() + j) return std::nullopt;
    ++count;
    i = j;
  }
  if (count != 2) return std::nullopt;
  return std::make_pair(values[0], values[1]);
}

bool is_skippable(std::string_view line) {
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    return ch == '#';
  }
  return true;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t m = 0;
  std::vector<Arc> arcs;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_number;
    if (is_skippable(line)) continue;

    const auto where = " at line " + std::to_string(line_number);
    const auto pair = parse_pair(line);
    if (!n) {
      if (!pair) throw ParseError("expected 'n m' header" + where);
      n = pair->first;
      m = pair->second;
      arcs.reserve(m);
      continue;
    }
    if (!pair) throw ParseError("expected 'tail head'" + where);
    if (arcs.size() == m) {
      throw ParseError("more than " + std::to_string(m) + " arcs" + where);
    }
    const auto [tail, head] = *pair;
    if (tail >= *n || head >= *n) {
      throw ParseError("vertex out of range" + where);
    }
    if (tail == head) throw ParseError("loop" + where);
    arcs.push_back({tail, head});
  }
  if (!n) throw ParseError("missing 'n m' header");
  if (arcs.size() != m) {
    throw ParseError("expected " + std::to_string(m) + " arcs, found " +
                     std::to_string(arcs.size()));
  }
  return Digraph(*n, std::move(arcs));
}

Digraph read_digraph(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  return parse_digraph(text);
}

std::string format_digraph(const Digraph& d) {
  std::ostringstream out;
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

}  // namespace dicolor
