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

#include <algorithm>
#include <limits>

#include "dicolor/error.hpp"
#include "dicolor/ordering_condition.hpp"

namespace dicolor {

namespace {

// Tarjan, iterative. component[v] is the SCC index of v.
std::vector<std::size_t> strong_components(const Digraph& d,
                                           std::size_t& count) {
  const std::size_t n = d.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), component(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> scc_stack;
  struct Frame {
    Vertex vertex;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::size_t counter = 0;
  count = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      const Vertex v = f.vertex;
      if (f.next == 0 && index[v] == kUnset) {
        index[v] = low[v] = counter++;
        scc_stack.push_back(v);
        on_stack[v] = true;
      }
      const auto out = d.out_arcs(v);
      if (f.next < out.size()) {
        const Vertex w = d.arc(out[f.next++]).head;
        if (index[w] == kUnset) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = false;
          component[w] = count;
        } while (w != v);
        ++count;
      }
      call.pop_back();
      if (!call.empty()) {
        const Vertex parent = call.back().vertex;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return component;
}

struct LocalArc {
  std::size_t tail;
  std::size_t head;
  std::int64_t weight;
};

// Karp's minimum cycle mean on a strongly connected digraph with s >= 2
// vertices. Two sweeps keep memory linear: the first finds D_s(v), the
// second replays D_0..D_{s-1} against it.
Rational karp_min_mean(std::size_t s, const std::vector<LocalArc>& arcs) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  const auto step = [&](const std::vector<std::int64_t>& prev,
                        std::vector<std::int64_t>& next) {
    std::fill(next.begin(), next.end(), kInf);
    for (const LocalArc& a : arcs) {
      if (prev[a.tail] == kInf) continue;
      next[a.head] = std::min(next[a.head], prev[a.tail] + a.weight);
    }
  };
  std::vector<std::int64_t> row(s, 0), scratch(s);
  for (std::size_t k = 0; k < s; ++k) {
    step(row, scratch);
    row.swap(scratch);
  }
  const std::vector<std::int64_t> last = row;

  std::vector<std::optional<Rational>> worst(s);
  std::fill(row.begin(), row.end(), 0);
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t v = 0; v < s; ++v) {
      if (last[v] == kInf || row[v] == kInf) continue;
      const Rational mean(last[v] - row[v], static_cast<std::int64_t>(s - k));
      if (!worst[v] || mean > *worst[v]) worst[v] = mean;
    }
    step(row, scratch);
    row.swap(scratch);
  }
  std::optional<Rational> best;
  for (const auto& value : worst) {
    if (value && (!best || *value < *best)) best = value;
  }
  if (!best) throw InternalError("strong component without a cycle");
  return *best;
}

}  // namespace

std::size_t ForwardRatio::least_k() const {
  if (!ratio) return 1;
  if (ratio->numerator() <= 0) {
    throw InternalError("circuit without a forward arc");
  }
  const std::int64_t p = ratio->numerator();
  const std::int64_t q = ratio->denominator();
  return static_cast<std::size_t>((q + p - 1) / p);
}

ForwardRatio min_forward_ratio(const Digraph& d, const Ordering& order) {
  if (order.size() != d.vertex_count()) {
    throw InvalidArgument("ordering does not match the digraph");
  }
  std::size_t count = 0;
  const auto component = strong_components(d, count);
  std::vector<std::vector<Vertex>> members(count);
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    members[component[v]].push_back(v);
  }
  std::vector<std::vector<LocalArc>> local(count);
  std::vector<std::size_t> local_index(d.vertex_count());
  for (const auto& group : members) {
    for (std::size_t i = 0; i < group.size(); ++i) local_index[group[i]] = i;
  }
  for (const Arc& a : d.arcs()) {
    if (component[a.tail] != component[a.head]) continue;
    local[component[a.tail]].push_back(
        {local_index[a.tail], local_index[a.head],
         order.is_forward(a) ? std::int64_t{1} : std::int64_t{0}});
  }
  ForwardRatio result;
  for (std::size_t c = 0; c < count; ++c) {
    if (members[c].size() < 2) continue;
    const Rational mean = karp_min_mean(members[c].size(), local[c]);
    if (!result.ratio || mean < *result.ratio) result.ratio = mean;
  }
  return result;
}

}  // namespace dicolor
