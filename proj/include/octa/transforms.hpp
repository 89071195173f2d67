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

#include <optional>
#include <vector>

#include "octa/graph.hpp"
#include "octa/laurent.hpp"

namespace octa {

struct SplitResult {
  Graph graph;
  int v1 = -1;  // keeps the arc; same id as the split vertex
  int w = -1;
  int v2 = -1;
};

// Splits v so that the rotation arc [start, start+length) stays on v1 and the
// remaining edges move to v2, joined through a new middle vertex w.
SplitResult split_vertex(const Graph& g, int v, int start, int length);
// Inverse of split_vertex for a degree-2 vertex w with two unweighted edges.
Graph merge_vertex(const Graph& g, int w);

struct RenewalSubstitution {
  FacePoint face;
  VarId old_var = VarId::face(0, 0);
  LaurentPoly numerator;    // y1 y3 x(F2) x(F4) + y2 y4 x(F1) x(F3)
  LaurentPoly replacement;  // numerator / X
  Assignment assignment() const { return Assignment{{old_var, replacement}}; }
};

struct RenewalResult {
  Graph graph;
  RenewalSubstitution substitution;
};

RenewalResult urban_renewal(const Graph& g, const FacePoint& face);

bool is_local_minimum(const HeightFunction& h, const FacePoint& f);
HeightFunction elevate_face(const HeightFunction& h, const FacePoint& face);
HeightFunction elevate_face(const HeightFunction& h, const FacePoint& face, const LatticePoint& apex);

// Lexicographically smallest local minimum among the closed faces of least height.
std::optional<FacePoint> next_elevation_site(const HeightFunction& h, const LatticePoint& apex);
// Faces elevated, in order, until the apex face reaches the apex height.
std::vector<FacePoint> elevation_sequence(const HeightFunction& h, const LatticePoint& apex);

// Merges every degree-2 vertex whose two edges are unweighted, repeatedly.
Graph merge_degree_two(const Graph& g);

}  // namespace octa
