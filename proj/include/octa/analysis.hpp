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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "octa/graph.hpp"
#include "octa/laurent.hpp"
#include "octa/matching.hpp"

namespace octa {

enum class KuoSet : std::uint8_t { C, N, NE, E, SE, S, SW, W, NW };
inline constexpr std::array<KuoSet, 9> kKuoSets = {KuoSet::C,  KuoSet::N,  KuoSet::NE, KuoSet::E, KuoSet::SE,
                                                   KuoSet::S,  KuoSet::SW, KuoSet::W,  KuoSet::NW};
std::string kuo_set_name(KuoSet s);

struct KuoPartition {
  Graph graph;                          // G(n0, i0, j0)
  std::vector<KuoSet> membership;       // per vertex of graph
  std::vector<int> members(KuoSet s) const;
  std::vector<int> members(std::initializer_list<KuoSet> sets) const;
  // Black minus white with respect to the graph coloring.
  int imbalance(KuoSet s) const;
  // Vertices of s with a neighbor outside s.
  std::vector<int> boundary(KuoSet s) const;
};

bool kuo_adjacency_allowed(KuoSet a, KuoSet b);

KuoPartition kuo_partition(const HeightFunction& h, const LatticePoint& apex);

struct KuoReport {
  bool ok = true;
  std::vector<std::string> problems;
  bool colors_swapped = false;
  LaurentPoly lhs;
  LaurentPoly rhs_ns;  // the term built from the N and S joins
  LaurentPoly rhs_ew;
};

// Structural hypotheses only: adjacency, imbalance and boundary colors.
KuoReport check_kuo_hypotheses(const KuoPartition& part);
// Full identity check with face variables at 1; throws IdentityViolated on failure.
KuoReport verify_condensation(const HeightFunction& h, const LatticePoint& apex);

using RegionSums = std::array<int, 4>;  // P, Q, R, S
RegionSums region_sums(const Graph& g, const EdgeLabel& label, const std::map<FacePoint, int>& face_exp);
std::map<EdgeLabel, int> recover_edge_exponents(const Graph& g, const std::map<FacePoint, int>& face_exp);

std::vector<Rational> propp_weights(const Graph& g);

struct ProppHeight {
  std::map<FacePoint, Rational> value;
  bool operator==(const ProppHeight&) const = default;
};

struct ProppContext {
  OuterWindow window;
  std::vector<int> g_to_window_edge;  // G edge id -> window edge id
};
ProppContext propp_context(const HeightFunction& h, const LatticePoint& apex);

// Heights on the complete faces of the truncated window, from a matching of G extended by M_out.
ProppHeight propp_height(const ProppContext& ctx, const Matching& m, std::optional<FacePoint> root = {},
                         bool normalize = true);
// Edges of G whose height step equals w(e) - 1.
Matching matching_from_heights(const ProppContext& ctx, const Graph& g, const ProppHeight& heights);

// M_window: window edge ids.
bool verify_acceptable(const HeightFunction& h, const LatticePoint& apex, const Window& window,
                       const Matching& m_window);
bool verify_acceptable(const OuterWindow& ow, const Matching& m_window);
// Every matching of the window graph with each collar vertex matched as in M_out.
std::vector<Matching> collar_matchings(const OuterWindow& ow,
                                       const EnumerationLimits& limits = default_limits());
// Window vertices whose degree in the window is below the full degree.
std::vector<int> collar_vertices(const OuterWindow& ow);

}  // namespace octa
