// Copyright 2026 The Octa Authors.
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

#pragma once

#include <string>

#include "json.hpp"
#include "octa/graph.hpp"
#include "octa/matching.hpp"

namespace octa {

// Closed faces are shaded, open faces drawn as dashed paths, matched edges bold.
std::string graph_to_svg(const Graph& g, const Matching& highlight = {});
std::string graph_to_dot(const Graph& g, const Matching& highlight = {});
nlohmann::json graph_to_json(const Graph& g);

// Edge ids plus the labels of the weighted ones.
nlohmann::json matching_to_json(const Graph& g, const Matching& m);
nlohmann::json labels_to_json(const std::vector<EdgeLabel>& labels);

}  // namespace octa
