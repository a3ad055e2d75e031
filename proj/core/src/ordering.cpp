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

#include "dicolor/ordering.hpp"

#include <charconv>
#include <numeric>
#include <random>

#include "dicolor/error.hpp"

namespace dicolor {

Ordering Ordering::identity(std::size_t n) {
  std::vector<Vertex> sequence(n);
  std::iota(sequence.begin(), sequence.end(), Vertex{0});
  return from_sequence(std::move(sequence));
}

Ordering Ordering::random(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> sequence(n);
  std::iota(sequence.begin(), sequence.end(), Vertex{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(sequence[i - 1], sequence[pick(rng)]);
  }
  return from_sequence(std::move(sequence));
}

Ordering Ordering::from_sequence(std::vector<Vertex> sequence) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  Ordering order;
  order.position_.assign(sequence.size(), kUnset);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Vertex v = sequence[i];
    if (v >= sequence.size()) {
      throw InvalidArgument("ordering mentions vertex " + std::to_string(v) +
                            " but has only " +
                            std::to_string(sequence.size()) + " positions");
    }
    if (order.position_[v] != kUnset) {
      throw InvalidArgument("ordering repeats vertex " + std::to_string(v));
    }
    order.position_[v] = i;
  }
  order.sequence_ = std::move(sequence);
  return order;
}

std::size_t forward_count(const Digraph& d, const Ordering& order) {
  std::size_t count = 0;
  for (const Arc& a : d.arcs()) count += order.is_forward(a) ? 1 : 0;
  return count;
}

std::size_t forward_count(const Digraph& d, const Ordering& order,
                          const Circuit& c) {
  std::size_t count = 0;
  for (ArcId id : c.arcs()) count += order.is_forward(d.arc(id)) ? 1 : 0;
  return count;
}

Ordering parse_ordering(std::string_view text) {
  std::vector<Vertex> sequence;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    std::size_t stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view token = text.substr(start, stop - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\n' ||
                              token.back() == '\r')) {
      token.remove_suffix(1);
    }
    Vertex v = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw ParseError("invalid ordering entry '" + std::string(token) + "'");
    }
    sequence.push_back(v);
    start = stop + 1;
  }
  try {
    return Ordering::from_sequence(std::move(sequence));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string format_ordering(const Ordering& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(order.sequence()[i]);
  }
  return out;
}

}  // namespace dicolor
