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

#ifndef DICOLOR_TOOLS_SERIALIZE_HPP_
#define DICOLOR_TOOLS_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "dicolor/circulation.hpp"
#include "dicolor/coloring.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/inversion.hpp"
#include "dicolor/ordering_condition.hpp"

namespace dicolor::cli {

using Json = nlohmann::ordered_json;

// {"k":2,"color":[1,0,0]}
Json to_json(const Coloring& col);
// {"potential":[-1,0,0]}
Json to_json(const Potential& z);
// {"witness":{"arcs":[0,1,2],"vertices":[0,1,2]}}
Json witness_json(const Circuit& c);
// {"vertices":[...],"arcs":[...]}
Json circuit_json(const Circuit& c);
// {"order":"0,1,2","initial_forward":f0,"steps":[{"circuit":[...],
//  "forward":f}],"coloring":{...},"simple":true}
Json to_json(const InversionTrace& trace);

// Inverses; all throw ParseError on schema mismatch.
Coloring coloring_from_json(const Json& j);
Potential potential_from_json(const Json& j);
Circuit witness_from_json(const Digraph& d, const Json& j);

// Accepts inline JSON text or a path to a file holding it.
Json load_json_argument(const std::string& argument);

}  // namespace dicolor::cli

#endif  // DICOLOR_TOOLS_SERIALIZE_HPP_
