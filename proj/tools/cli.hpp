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

#ifndef DICOLOR_TOOLS_CLI_HPP_
#define DICOLOR_TOOLS_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dicolor/digraph.hpp"

namespace dicolor::cli {

enum ExitCode : int {
  kSuccess = 0,     // feasible / colorable / done
  kNegative = 1,    // infeasible or not colorable; a witness is printed
  kInputError = 2,  // usage, parse or module error
};

// Runs one command. args excludes the program name. Results go to out,
// diagnostics to err; standard input is read from in when the path is "-".
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

struct Disagreement {
  std::size_t sample = 0;
  Digraph digraph;
  std::size_t dichromatic = 0;
  std::size_t best_k = 0;
};

struct EquivalenceReport {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t agreements = 0;
  std::vector<Disagreement> disagreements;
};

// Draws samples random digraphs on n vertices and compares the brute-force
// dichromatic number with the best ordering bound. Sample i uses
// sample_seed(seed, i) and arc probability p, or (i mod 9 + 1) / 10 when p
// is unset.
EquivalenceReport verify_equivalence(std::size_t n, std::size_t samples,
                                     std::uint64_t seed,
                                     std::optional<double> p = {});

// splitmix64 of seed + index; decorrelates neighbouring samples.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace dicolor::cli

#endif  // DICOLOR_TOOLS_CLI_HPP_
