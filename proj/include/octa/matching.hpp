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

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "octa/graph.hpp"
#include "octa/laurent.hpp"

namespace octa {

// Sorted edge ids.
using Matching = std::vector<int>;

struct ExponentVector {
  std::map<FacePoint, int> face_exp;
  std::map<EdgeLabel, int> edge_exp;
  bool operator==(const ExponentVector&) const = default;
};

struct EnumerationLimits {
  std::size_t max_vertices = 4096;
  std::uint64_t max_matchings = 2000000;
};

// Honors OCTA_MAX_MATCHINGS when set.
EnumerationLimits default_limits();

// Calls visit for every matching; stop early by returning false.
void for_each_matching(const Graph& g, const std::function<bool(const Matching&)>& visit,
                       const EnumerationLimits& limits = default_limits());
std::vector<Matching> enumerate_matchings(const Graph& g,
                                          const EnumerationLimits& limits = default_limits());
std::uint64_t count_matchings(const Graph& g, const EnumerationLimits& limits = default_limits());

bool is_matching(const Graph& g, const Matching& m);
void require_matching(const Graph& g, const Matching& m);

ExponentVector matching_exponents(const Graph& g, const Matching& m);
Monomial matching_monomial(const Graph& g, const Matching& m, bool faces_to_one = false);
LaurentPoly matching_polynomial(const Graph& g, bool faces_to_one = false,
                                const EnumerationLimits& limits = default_limits());

// Keeps the listed vertices and the edges between them; faces are dropped.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Weighted edge labels of a matching, sorted.
std::vector<EdgeLabel> matching_labels(const Graph& g, const Matching& m);
// Rebuilds a matching from its weighted edges by adding the forced unweighted ones.
Matching complete_matching(const Graph& g, const std::vector<EdgeLabel>& labels);

}  // namespace octa
