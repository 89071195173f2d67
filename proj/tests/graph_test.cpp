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

#include <set>

#include "doctest.h"
#include "octa/error.hpp"
#include "octa/graph.hpp"
#include "octa/graph_io.hpp"
#include "octa/suite.hpp"

using namespace octa;

TEST_CASE("glyph rule") {
  CHECK(classify_values(0, 1, 1, 0) == GlyphKind::Cross);
  CHECK(classify_values(0, 1, -1, 0) == GlyphKind::WrenchMain);
  CHECK(classify_values(1, 0, 0, -1) == GlyphKind::WrenchAnti);
  CHECK_THROWS_AS(classify_values(0, 2, 1, 0), Error);
  // Aztec blocks are all crosses.
  HeightFunction az = builtin_height(Family::Aztec);
  for (int i = -3; i <= 3; ++i) CHECK(classify_cell(az, {i, i + 1}).kind == GlyphKind::Cross);
}

TEST_CASE("Aztec diamonds") {
  HeightFunction h = builtin_height(Family::Aztec);
  for (int n = 1; n <= 5; ++n) {
    Graph g = build_subgraph(h, {n, 0, n % 2});
    CAPTURE(n);
    CHECK(g.vertices.size() == static_cast<std::size_t>(2 * n * (n + 1)));
    CHECK(g.edges.size() == static_cast<std::size_t>(4 * n * n));
    CHECK(g.closed_face_count() == static_cast<std::size_t>(n * n + (n - 1) * (n - 1)));
    CHECK(g.open_face_count() == static_cast<std::size_t>(4 * n));
    for (const GEdge& e : g.edges) CHECK(e.weighted());
    CHECK(check_graph(g).ok);
  }
}

TEST_CASE("suite graphs pass the structural check") {
  for (const SuiteCase& c : family_suite(2, 14)) {
    CAPTURE(c.name);
    Graph g = build_subgraph(c.h, c.apex);
    GraphReport rep = check_graph(g);
    CHECK(rep.ok);
    std::set<EdgeLabel> labels;
    for (const GEdge& e : g.edges) {
      CHECK(g.vertices[e.u].color != g.vertices[e.v].color);
      if (e.label) {
        CHECK(e.label->valid());
        labels.insert(*e.label);
      }
    }
    std::size_t weighted = 0;
    for (const GEdge& e : g.edges) weighted += e.weighted() ? 1 : 0;
    CHECK(labels.size() == weighted);
    std::vector<FacePoint> closed = closed_faces(c.h, c.apex);
    CHECK(g.closed_face_count() == closed.size());
    for (const FacePoint& f : closed) {
      int id = g.find_face(f);
      REQUIRE(id >= 0);
      CHECK(g.faces[id].closed);
      CHECK(g.faces[id].height == c.h(f));
    }
  }
}

TEST_CASE("unweighted edges come from wrenches") {
  HeightFunction h = builtin_height(Family::Fortress);
  Graph g = build_subgraph(h, {4, 0, 0});
  std::size_t unweighted = 0;
  for (const GEdge& e : g.edges) {
    if (!e.weighted()) {
      ++unweighted;
      CHECK(e.key.kind == EdgeKind::Middle);
      CHECK(classify_cell(h, {e.key.i, e.key.j}).kind != GlyphKind::Cross);
    }
  }
  CHECK(unweighted > 0);
}

TEST_CASE("G of a lower apex embeds in G of a higher one") {
  for (const NamedHeight& nh : standard_heights()) {
    CAPTURE(nh.name);
    LatticePoint hi{nh.h(0, 0) + 4, 0, 0};
    LatticePoint lo{nh.h(0, 0) + 2, 0, 0};
    Graph outer = build_subgraph(nh.h, hi);
    Graph inner = build_subgraph(nh.h, lo);
    InclusionWitness w = subgraph_inclusion(inner, outer);
    CHECK(w.vertex_map.size() == inner.vertices.size());
    std::set<int> images(w.vertex_map.begin(), w.vertex_map.end());
    CHECK(images.size() == inner.vertices.size());
    CHECK_THROWS_AS(subgraph_inclusion(outer, inner), Error);
  }
}

TEST_CASE("standard outer matching covers the outside") {
  HeightFunction h = builtin_height(Family::Douglass);
  LatticePoint apex{4, 0, 0};
  Graph g = build_subgraph(h, apex);
  OuterWindow ow = standard_outer_matching(h, apex, window_around(g, 2));
  std::vector<int> hits(ow.graph.vertices.size(), 0);
  for (int e : ow.m_out) {
    ++hits[ow.graph.edges[e].u];
    ++hits[ow.graph.edges[e].v];
  }
  for (std::size_t v = 0; v < hits.size(); ++v) CHECK(hits[v] == (ow.in_g[v] ? 0 : 1));
  CHECK_THROWS_AS(standard_outer_matching(h, apex, window_around(g, 0)), Error);
}

TEST_CASE("boundary paths") {
  Graph g = build_subgraph(builtin_height(Family::Blum), {3, 0, 1});
  std::vector<BoundaryPath> paths = boundary_paths(g);
  CHECK_FALSE(paths.empty());
  for (const BoundaryPath& p : paths) {
    CHECK(p.vertices.size() >= 2);
    CHECK(p.pattern.size() == p.vertices.size());
  }
}

TEST_CASE("an apex on the surface has no graph") {
  CHECK_THROWS_AS(build_subgraph(builtin_height(Family::Aztec), {0, 0, 0}), Error);
}

TEST_CASE("renderings") {
  Graph g = build_subgraph(running_example_height(), {3, 1, 0});
  std::string svg = graph_to_svg(g, {0});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  std::string dot = graph_to_dot(g);
  CHECK(dot.rfind("graph G {", 0) == 0);
  nlohmann::json j = graph_to_json(g);
  CHECK(j["vertices"].size() == g.vertices.size());
  CHECK(j["edges"].size() == g.edges.size());
}
