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

#include "serialize.hpp"

#include <fstream>
#include <sstream>

#include "dicolor/error.hpp"
#include "dicolor/ordering.hpp"

namespace dicolor::cli {

Json to_json(const Coloring& col) {
  return Json{{"k", col.k()}, {"color", col.colors()}};
}

Json to_json(const Potential& z) { return Json{{"potential", z.values}}; }

Json circuit_json(const Circuit& c) {
  return Json{
      {"vertices", std::vector<Vertex>(c.vertices().begin(), c.vertices().end())},
      {"arcs", std::vector<ArcId>(c.arcs().begin(), c.arcs().end())}};
}

Json witness_json(const Circuit& c) {
  return Json{{"witness",
               {{"arcs", std::vector<ArcId>(c.arcs().begin(), c.arcs().end())},
                {"vertices", std::vector<Vertex>(c.vertices().begin(),
                                                 c.vertices().end())}}}};
}

Json to_json(const InversionTrace& trace) {
  Json steps = Json::array();
  for (const InversionStep& step : trace.steps) {
    steps.push_back(
        {{"circuit", std::vector<ArcId>(step.circuit.arcs().begin(),
                                        step.circuit.arcs().end())},
         {"forward", step.forward}});
  }
  return Json{{"order", format_ordering(trace.order)},
              {"initial_forward", trace.initial_forward},
              {"steps", std::move(steps)},
              {"coloring", to_json(trace.final_coloring)},
              {"simple", trace.final_simple}};
}

Coloring coloring_from_json(const Json& j) {
  try {
    const auto k = j.at("k").get<std::size_t>();
    auto colors = j.at("color").get<std::vector<std::size_t>>();
    return Coloring(k, std::move(colors));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid coloring JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid coloring: ") + e.what());
  }
}

Potential potential_from_json(const Json& j) {
  try {
    return Potential{j.at("potential").get<std::vector<std::int64_t>>()};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid potential JSON: ") + e.what());
  }
}

Circuit witness_from_json(const Digraph& d, const Json& j) {
  std::vector<ArcId> arcs;
  try {
    arcs = j.at("witness").at("arcs").get<std::vector<ArcId>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid witness JSON: ") + e.what());
  }
  try {
    return Circuit::from_arcs(d, std::move(arcs));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid witness: ") + e.what());
  }
}

Json load_json_argument(const std::string& argument) {
  std::string text = argument;
  const auto first = argument.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || argument[first] != '{') {
    std::ifstream in(argument);
    if (!in) throw ParseError("cannot open '" + argument + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace dicolor::cli
