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

#include "doctest.h"
#include "octa/error.hpp"
#include "octa/matching.hpp"
#include "octa/suite.hpp"
#include "octa/transforms.hpp"

using namespace octa;

TEST_CASE("splitting any vertex along any arc preserves the polynomial") {
  Graph g = build_subgraph(builtin_height(Family::Douglass), {2, 0, 0});
  LaurentPoly base = matching_polynomial(g);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    int d = static_cast<int>(g.rotation[v].size());
    for (int start = 0; start < d; ++start) {
      for (int len = 1; len < d; ++len) {
        SplitResult s = split_vertex(g, static_cast<int>(v), start, len);
        CHECK(s.graph.vertices.size() == g.vertices.size() + 2);
        CHECK(s.graph.rotation[s.w].size() == 2);
        CHECK(matching_polynomial(s.graph) == base);
        Graph back = merge_vertex(s.graph, s.w);
        CHECK(back.edges.size() == g.edges.size());
        CHECK(matching_polynomial(back) == base);
      }
    }
  }
}

TEST_CASE("bad split sites") {
  Graph g = build_subgraph(builtin_height(Family::Aztec), {2, 0, 0});
  auto code = [&](int v, int start, int len) {
    try {
      split_vertex(g, v, start, len);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvariantViolation;
  };
  CHECK(code(-1, 0, 1) == Errc::InvalidSplitSite);
  CHECK(code(0, 0, 0) == Errc::InvalidSplitSite);
  CHECK(code(0, 0, static_cast<int>(g.rotation[0].size())) == Errc::InvalidSplitSite);
}

TEST_CASE("urban renewal preserves the polynomial after substitution") {
  for (const SuiteCase& c : family_suite(1, 14)) {
    Graph g = build_subgraph(c.h, c.apex);
    LaurentPoly base = matching_polynomial(g);
    for (const GFace& f : g.faces) {
      if (!f.closed || f.edges.size() != 4) continue;
      CAPTURE(c.name);
      CAPTURE(to_string(f.at));
      RenewalResult r = urban_renewal(g, f.at);
      CHECK(exact_div(r.substitution.numerator, LaurentPoly::var(r.substitution.old_var)) ==
            r.substitution.replacement);
      CHECK(substitute(matching_polynomial(r.graph), r.substitution.assignment()) == base);
    }
  }
}

TEST_CASE("renewal needs a closed quadrilateral") {
  Graph g = build_subgraph(builtin_height(Family::Fortress), {3, 1, 0});
  for (const GFace& f : g.faces) {
    if (f.closed && f.edges.size() == 4) continue;
    CHECK_THROWS_AS(urban_renewal(g, f.at), Error);
  }
}

TEST_CASE("elevating a local minimum matches renewal at that face") {
  HeightFunction h = builtin_height(Family::Aztec);
  LatticePoint apex{3, 0, 1};
  Graph g = build_subgraph(h, apex);
  for (const FacePoint& f : closed_faces(h, apex)) {
    if (!is_local_minimum(h, f)) continue;
    RenewalResult r = urban_renewal(g, f);
    HeightFunction lifted = elevate_face(h, f, apex);
    CHECK(lifted(f) == h(f) + 2);
    CHECK(matching_polynomial(merge_degree_two(r.graph)) == matching_polynomial(build_subgraph(lifted, apex)));
  }
}

TEST_CASE("elevation sequence length is the number of upper cone points") {
  for (const SuiteCase& c : family_suite(1, 14)) {
    CAPTURE(c.name);
    std::vector<FacePoint> seq = elevation_sequence(c.h, c.apex);
    CHECK(seq.size() == cone_upper_count(c.h, c.apex));
  }
}

TEST_CASE("only local minima can be elevated") {
  HeightFunction h = builtin_height(Family::Aztec);
  FacePoint top{0, 0};  // h = 0, neighbors at -1
  CHECK_FALSE(is_local_minimum(h, top));
  CHECK_THROWS_AS(elevate_face(h, top), Error);
  CHECK(is_local_minimum(h, {1, 0}));
}
