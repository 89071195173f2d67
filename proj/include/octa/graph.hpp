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

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octa/lattice.hpp"

namespace octa {

enum class GlyphKind { Cross, WrenchMain, WrenchAnti };
std::string glyph_name(GlyphKind k);

struct CellGlyph {
  FacePoint cell;  // SW face of the 2x2 block
  GlyphKind kind;
};

// Values are h at the SW, SE, NW and NE faces of a block.
GlyphKind classify_values(int sw, int se, int nw, int ne);
CellGlyph classify_cell(const HeightFunction& h, const FacePoint& cell);

enum class Slot : std::uint8_t { Center, NW, SE, NE, SW, Synthetic };

struct VertexKey {
  int ci = 0;
  int cj = 0;
  Slot slot = Slot::Center;
  int serial = 0;
  auto operator<=>(const VertexKey&) const = default;
};

// Planar position in quarter units.
struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
};

enum class Color : std::uint8_t { Black, White };

// East(i,j) separates faces (i,j) and (i+1,j); North(i,j) separates (i,j)
// and (i,j+1); Middle(i,j) is the middle edge of the wrench in cell (i,j).
enum class EdgeKind : std::uint8_t { East, North, Middle, Synthetic };

struct EdgeKey {
  EdgeKind kind = EdgeKind::East;
  int i = 0;
  int j = 0;
  int serial = 0;
  auto operator<=>(const EdgeKey&) const = default;
};

struct GVertex {
  VertexKey key;
  Point pos;
  Color color = Color::Black;
};

struct GEdge {
  int u = -1;
  int v = -1;
  EdgeKey key;
  std::optional<EdgeLabel> label;  // empty for unweighted edges
  bool weighted() const { return label.has_value(); }
  int other(int w) const { return w == u ? v : u; }
};

struct GFace {
  FacePoint at;
  bool closed = false;
  int height = 0;
  std::vector<int> edges;  // cyclic for closed faces, a path for open ones
};

struct Graph {
  LatticePoint apex;
  std::vector<GVertex> vertices;
  std::vector<GEdge> edges;
  std::vector<GFace> faces;
  std::vector<std::vector<int>> rotation;  // counterclockwise incident edges

  int find_vertex(const VertexKey& k) const;
  int find_edge(const EdgeKey& k) const;
  int find_face(const FacePoint& f) const;
  int find_label(const EdgeLabel& e) const;
  std::size_t closed_face_count() const;
  std::size_t open_face_count() const;
  // Faces containing edge e.
  std::vector<int> faces_of_edge(int e) const;
  // Rebuilds rotation-independent caches after mutation.
  void reindex();
  // Two-colors from the canonical root; throws InvariantViolation if not bipartite.
  void recolor();

 private:
  std::map<VertexKey, int> vertex_index_;
  std::map<EdgeKey, int> edge_index_;
  std::map<FacePoint, int> face_index_;
  std::map<EdgeLabel, int> label_index_;
};

// Edges on the boundary of face f, counterclockwise starting at the SW corner.
std::vector<EdgeKey> face_boundary(const HeightFunction& h, const FacePoint& f);
EdgeLabel edge_label_for(const HeightFunction& h, const EdgeKey& k);

Graph build_subgraph(const HeightFunction& h, const LatticePoint& apex);
// Labels of the weighted edges, indexed by edge id (empty for unweighted).
std::vector<std::optional<EdgeLabel>> label_edges(const Graph& g);

struct GraphReport {
  bool ok = true;
  std::vector<std::string> problems;
};
GraphReport check_graph(const Graph& g);

struct BoundaryPath {
  std::vector<int> vertices;
  std::string pattern;  // 'O' outward, 'I' inner, '?' neither
  bool odd() const { return vertices.size() % 2 == 1; }
};
std::vector<BoundaryPath> boundary_paths(const Graph& g);

struct InclusionWitness {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<int> face_map;
};
InclusionWitness subgraph_inclusion(const Graph& inner, const Graph& outer);

// A window of the truncated infinite graph, with the image of G(apex) in it
// and the standard outer matching on the rest.
struct OuterWindow {
  Window window;
  Graph graph;
  std::vector<int> from_g;   // G vertex id -> window vertex id
  std::vector<bool> in_g;    // window vertex is the image of a G vertex
  std::vector<int> m_out;    // window edge ids
};
OuterWindow standard_outer_matching(const HeightFunction& h, const LatticePoint& apex,
                                    const Window& window);
// Smallest window holding every face of G with the given margin.
Window window_around(const Graph& g, int margin);

// Number of edges incident to a vertex in the infinite graph.
int full_degree(const GVertex& v);

}  // namespace octa
