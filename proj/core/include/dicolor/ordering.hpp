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

#ifndef DICOLOR_ORDERING_HPP_
#define DICOLOR_ORDERING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dicolor/digraph.hpp"

namespace dicolor {

// Bijection from vertices to positions 0..n-1.
class Ordering {
 public:
  Ordering() = default;

  static Ordering identity(std::size_t n);
  // Uniform random permutation from std::mt19937_64 seeded with seed.
  static Ordering random(std::size_t n, std::uint64_t seed);
  // sequence[i] is the vertex at position i. Throws InvalidArgument if it is
  // not a permutation of 0..n-1.
  static Ordering from_sequence(std::vector<Vertex> sequence);

  std::size_t size() const { return sequence_.size(); }
  std::size_t position(Vertex v) const { return position_[v]; }
  std::span<const Vertex> sequence() const { return sequence_; }

  // tail strictly before head.
  bool is_forward(const Arc& a) const {
    return position_[a.tail] < position_[a.head];
  }

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::size_t> position_;
};

// Number of arcs of d going forward in order.
std::size_t forward_count(const Digraph& d, const Ordering& order);
std::size_t forward_count(const Digraph& d, const Ordering& order,
                          const Circuit& c);

// "2,0,1" lists vertices in position order. Throws ParseError.
Ordering parse_ordering(std::string_view text);
std::string format_ordering(const Ordering& order);

}  // namespace dicolor

#endif  // DICOLOR_ORDERING_HPP_
