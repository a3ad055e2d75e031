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

#include "dicolor/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "dicolor/error.hpp"
#include "dicolor/ordering_condition.hpp"

namespace dicolor::oracle {

namespace {

void require_size(const Digraph& d, std::size_t max_vertices,
                  const char* what) {
  if (d.vertex_count() > max_vertices) {
    throw SizeGuardExceeded(std::string(what) + " refuses n = " +
                            std::to_string(d.vertex_count()) + " > " +
                            std::to_string(max_vertices));
  }
}

class Johnson {
 public:
  Johnson(const Digraph& d, std::size_t cap) : d_(d), cap_(cap) {
    const std::size_t n = d.vertex_count();
    adjacency_.resize(n);
    for (ArcId id = 0; id < d.arc_count(); ++id) {
      const Arc& a = d.arc(id);
      parallel_[{a.tail, a.head}].push_back(id);
    }
    for (const auto& [ends, ids] : parallel_) {
      adjacency_[ends.first].push_back(ends.second);
    }
  }

  std::vector<Circuit> run() {
    const std::size_t n = d_.vertex_count();
    blocked_.assign(n, false);
    block_lists_.assign(n, {});
    for (start_ = 0; start_ < n; ++start_) {
      for (Vertex v = start_; v < n; ++v) {
        blocked_[v] = false;
        block_lists_[v].clear();
      }
      circuit(start_);
    }
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool circuit(Vertex v) {
    bool closed = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (Vertex w : adjacency_[v]) {
      if (w < start_) continue;
      if (w == start_) {
        emit();
        closed = true;
      } else if (!blocked_[w] && circuit(w)) {
        closed = true;
      }
    }
    if (closed) {
      unblock(v);
    } else {
      for (Vertex w : adjacency_[v]) {
        if (w >= start_) block_lists_[w].insert(v);
      }
    }
    path_.pop_back();
    return closed;
  }

  void unblock(Vertex u) {
    blocked_[u] = false;
    while (!block_lists_[u].empty()) {
      const Vertex w = *block_lists_[u].begin();
      block_lists_[u].erase(block_lists_[u].begin());
      if (blocked_[w]) unblock(w);
    }
  }

  // Expands the vertex cycle in path_ into every choice of parallel arcs.
  void emit() {
    const std::size_t len = path_.size();
    std::vector<const std::vector<ArcId>*> choices(len);
    for (std::size_t i = 0; i < len; ++i) {
      choices[i] = &parallel_.at({path_[i], path_[(i + 1) % len]});
    }
    std::vector<std::size_t> pick(len, 0);
    while (true) {
      if (found_.size() == cap_) {
        throw CapExceeded("more than " + std::to_string(cap_) + " circuits");
      }
      std::vector<ArcId> arcs(len);
      for (std::size_t i = 0; i < len; ++i) arcs[i] = (*choices[i])[pick[i]];
      found_.push_back(Circuit::from_arcs(d_, std::move(arcs)));
      std::size_t i = len;
      while (i > 0 && ++pick[i - 1] == choices[i - 1]->size()) {
        pick[i - 1] = 0;
        --i;
      }
      if (i == 0) return;
    }
  }

  const Digraph& d_;
  std::size_t cap_;
  std::map<std::pair<Vertex, Vertex>, std::vector<ArcId>> parallel_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<bool> blocked_;
  std::vector<std::set<Vertex>> block_lists_;
  std::vector<Vertex> path_;
  std::vector<Circuit> found_;
  Vertex start_ = 0;
};

class ColoringSearch {
 public:
  ColoringSearch(const Digraph& d, std::size_t k)
      : d_(d), k_(k), colors_(d.vertex_count(), 0), mark_(d.vertex_count()) {}

  std::optional<Coloring> run() {
    if (!assign(0, 0)) return std::nullopt;
    return Coloring(k_, colors_);
  }

 private:
  // Colors 0..v-1 are fixed; highest is the number of colors used so far.
  // Trying only colors <= highest keeps the search over canonical colorings,
  // which contain the lexicographically first one.
  bool assign(Vertex v, std::size_t highest) {
    if (v == d_.vertex_count()) return true;
    const std::size_t limit = std::min(k_, highest + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      colors_[v] = c;
      if (closes_circuit(v)) continue;
      if (assign(v + 1, std::max(highest, c + 1))) return true;
    }
    return false;
  }

  // Whether v reaches itself through already-colored vertices of its color.
  bool closes_circuit(Vertex v) {
    ++epoch_;
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (ArcId id : d_.out_arcs(u)) {
        const Vertex w = d_.arc(id).head;
        if (w > v || colors_[w] != colors_[v]) continue;
        if (w == v) return true;
        if (mark_[w] == epoch_) continue;
        mark_[w] = epoch_;
        stack.push_back(w);
      }
    }
    return false;
  }

  const Digraph& d_;
  std::size_t k_;
  std::vector<std::size_t> colors_;
  std::vector<std::size_t> mark_;
  std::size_t epoch_ = 0;
};

}  // namespace

std::vector<std::vector<Vertex>> CircuitList::vertex_cycles() const {
  std::vector<std::vector<Vertex>> out;
  for (const Circuit& c : circuits) {
    std::vector<Vertex> seq(c.vertices().begin(), c.vertices().end());
    if (out.empty() || out.back() != seq) out.push_back(std::move(seq));
  }
  return out;
}

CircuitList enumerate_circuits(const Digraph& d, std::size_t cap) {
  return CircuitList{Johnson(d, cap).run()};
}

std::optional<Coloring> is_k_dicolorable_bruteforce(const Digraph& d,
                                                    std::size_t k,
                                                    std::size_t max_vertices) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  require_size(d, max_vertices, "is_k_dicolorable_bruteforce");
  return ColoringSearch(d, k).run();
}

Coloring optimal_coloring(const Digraph& d, std::size_t max_vertices) {
  require_size(d, max_vertices, "dichromatic_number");
  for (std::size_t k = 1;; ++k) {
    if (auto col = ColoringSearch(d, k).run()) return *col;
  }
}

std::size_t dichromatic_number(const Digraph& d, std::size_t max_vertices) {
  return optimal_coloring(d, max_vertices).k();
}

std::size_t best_k_over_orderings(const Digraph& d, std::size_t max_vertices) {
  require_size(d, max_vertices, "best_k_over_orderings");
  std::vector<Vertex> sequence(d.vertex_count());
  for (Vertex v = 0; v < sequence.size(); ++v) sequence[v] = v;
  std::size_t best = static_cast<std::size_t>(-1);
  do {
    const auto order = Ordering::from_sequence(sequence);
    best = std::min(best, min_forward_ratio(d, order).least_k());
    if (best == 1) break;
  } while (std::next_permutation(sequence.begin(), sequence.end()));
  return best;
}

std::optional<Circuit> violating_circuit_bruteforce(const Digraph& d,
                                                    const Ordering& order,
                                                    std::size_t k,
                                                    std::size_t cap) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  if (order.size() != d.vertex_count()) {
    throw InvalidArgument("ordering does not match the digraph");
  }
  for (Circuit& c : enumerate_circuits(d, cap).circuits) {
    if (forward_count(d, order, c) * k < c.length()) return std::move(c);
  }
  return std::nullopt;
}

bool check_ordering_bruteforce(const Digraph& d, const Ordering& order,
                               std::size_t k, std::size_t cap) {
  return !violating_circuit_bruteforce(d, order, k, cap).has_value();
}

}  // namespace dicolor::oracle
