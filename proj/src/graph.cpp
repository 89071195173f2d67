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

#include "octa/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "octa/error.hpp"

namespace octa {

std::string glyph_name(GlyphKind k) {
  switch (k) {
    case GlyphKind::Cross: return "cross";
    case GlyphKind::WrenchMain: return "wrench-main";
    case GlyphKind::WrenchAnti: return "wrench-anti";
  }
  return "?";
}

GlyphKind classify_values(int sw, int se, int nw, int ne) {
  auto unit = [](int d) { return d == 1 || d == -1; };
  if (!unit(sw - se) || !unit(sw - nw) || !unit(ne - se) || !unit(ne - nw)) {
    fail(Errc::InvalidHeight, "block heights violate the unit step condition");
  }
  bool main_eq = sw == ne;
  bool anti_eq = se == nw;
  if (main_eq && anti_eq) return GlyphKind::Cross;
  if (main_eq) return GlyphKind::WrenchMain;
  if (anti_eq) return GlyphKind::WrenchAnti;
  fail(Errc::InvalidHeight, "block heights fit no glyph");
}

CellGlyph classify_cell(const HeightFunction& h, const FacePoint& c) {
  return CellGlyph{c, classify_values(h(c.i, c.j), h(c.i + 1, c.j), h(c.i, c.j + 1), h(c.i + 1, c.j + 1))};
}

int full_degree(const GVertex& v) {
  if (v.key.slot == Slot::Center) return 4;
  if (v.key.slot == Slot::Synthetic) return 0;
  return 3;
}

namespace {

GlyphKind glyph_at(const HeightFunction& h, int ci, int cj) {
  return classify_cell(h, FacePoint{ci, cj}).kind;
}

Slot arm_slot(GlyphKind k, char arm) {
  if (k == GlyphKind::Cross) return Slot::Center;
  bool main = k == GlyphKind::WrenchMain;
  switch (arm) {
    case 'N': return main ? Slot::NW : Slot::NE;
    case 'S': return main ? Slot::SE : Slot::SW;
    case 'E': return main ? Slot::SE : Slot::NE;
    default: return main ? Slot::NW : Slot::SW;
  }
}

Point slot_position(const VertexKey& k) {
  int x = 4 * k.ci + 2;
  int y = 4 * k.cj + 2;
  switch (k.slot) {
    case Slot::NW: return Point{x - 1, y + 1};
    case Slot::SE: return Point{x + 1, y - 1};
    case Slot::NE: return Point{x + 1, y + 1};
    case Slot::SW: return Point{x - 1, y - 1};
    default: return Point{x, y};
  }
}

struct Endpoint {
  VertexKey key;
  int angle;  // nominal direction of the edge leaving this vertex, degrees
};

struct EdgeGeometry {
  Endpoint u;
  Endpoint v;
};

EdgeGeometry edge_geometry(const HeightFunction& h, const EdgeKey& k) {
  switch (k.kind) {
    case EdgeKind::East: {
      GlyphKind lower = glyph_at(h, k.i, k.j - 1);
      GlyphKind upper = glyph_at(h, k.i, k.j);
      return EdgeGeometry{Endpoint{VertexKey{k.i, k.j - 1, arm_slot(lower, 'N'), 0}, 90},
                          Endpoint{VertexKey{k.i, k.j, arm_slot(upper, 'S'), 0}, 270}};
    }
    case EdgeKind::North: {
      GlyphKind left = glyph_at(h, k.i - 1, k.j);
      GlyphKind right = glyph_at(h, k.i, k.j);
      return EdgeGeometry{Endpoint{VertexKey{k.i - 1, k.j, arm_slot(left, 'E'), 0}, 0},
                          Endpoint{VertexKey{k.i, k.j, arm_slot(right, 'W'), 0}, 180}};
    }
    case EdgeKind::Middle: {
      GlyphKind g = glyph_at(h, k.i, k.j);
      if (g == GlyphKind::WrenchMain) {
        return EdgeGeometry{Endpoint{VertexKey{k.i, k.j, Slot::NW, 0}, 315},
                            Endpoint{VertexKey{k.i, k.j, Slot::SE, 0}, 135}};
      }
      if (g == GlyphKind::WrenchAnti) {
        return EdgeGeometry{Endpoint{VertexKey{k.i, k.j, Slot::NE, 0}, 225},
                            Endpoint{VertexKey{k.i, k.j, Slot::SW, 0}, 45}};
      }
      fail(Errc::InvariantViolation, "middle edge requested in a cross cell");
    }
    default:
      fail(Errc::InvariantViolation, "synthetic edge has no lattice geometry");
  }
}

std::vector<FacePoint> faces_beside(const HeightFunction& h, const EdgeKey& k) {
  switch (k.kind) {
    case EdgeKind::East: return {FacePoint{k.i, k.j}, FacePoint{k.i + 1, k.j}};
    case EdgeKind::North: return {FacePoint{k.i, k.j}, FacePoint{k.i, k.j + 1}};
    case EdgeKind::Middle:
      if (glyph_at(h, k.i, k.j) == GlyphKind::WrenchMain) {
        return {FacePoint{k.i, k.j}, FacePoint{k.i + 1, k.j + 1}};
      }
      return {FacePoint{k.i + 1, k.j}, FacePoint{k.i, k.j + 1}};
    default:
      return {};
  }
}

Graph assemble(const HeightFunction& h, const LatticePoint& apex, const std::set<EdgeKey>& keys,
               const std::vector<std::pair<FacePoint, bool>>& faces) {
  Graph g;
  g.apex = apex;
  std::vector<EdgeGeometry> geo;
  geo.reserve(keys.size());
  std::set<VertexKey> vkeys;
  for (const EdgeKey& k : keys) {
    geo.push_back(edge_geometry(h, k));
    vkeys.insert(geo.back().u.key);
    vkeys.insert(geo.back().v.key);
  }
  std::map<VertexKey, int> vid;
  for (const VertexKey& vk : vkeys) {
    vid[vk] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(GVertex{vk, slot_position(vk), Color::Black});
  }
  std::vector<std::vector<std::pair<int, int>>> spokes(g.vertices.size());
  int idx = 0;
  for (const EdgeKey& k : keys) {
    const EdgeGeometry& eg = geo[idx];
    GEdge e;
    e.u = vid.at(eg.u.key);
    e.v = vid.at(eg.v.key);
    e.key = k;
    if (k.kind != EdgeKind::Middle) e.label = edge_label_for(h, k);
    g.edges.push_back(e);
    spokes[e.u].emplace_back(eg.u.angle, idx);
    spokes[e.v].emplace_back(eg.v.angle, idx);
    ++idx;
  }
  g.rotation.resize(g.vertices.size());
  for (std::size_t v = 0; v < spokes.size(); ++v) {
    std::sort(spokes[v].begin(), spokes[v].end());
    for (const auto& [angle, e] : spokes[v]) g.rotation[v].push_back(e);
  }
  std::map<EdgeKey, int> eid;
  for (std::size_t e = 0; e < g.edges.size(); ++e) eid[g.edges[e].key] = static_cast<int>(e);
  for (const auto& [f, closed] : faces) {
    GFace face;
    face.at = f;
    face.closed = closed;
    face.height = h(f);
    for (const EdgeKey& k : face_boundary(h, f)) {
      auto it = eid.find(k);
      if (it != eid.end()) face.edges.push_back(it->second);
    }
    g.faces.push_back(std::move(face));
  }
  g.reindex();
  g.recolor();
  return g;
}

}  // namespace

EdgeLabel edge_label_for(const HeightFunction& h, const EdgeKey& k) {
  if (k.kind == EdgeKind::East) {
    int i1 = k.i + 1;
    int j1 = k.j;
    int n1 = h(k.i + 1, k.j);
    int n2 = h(k.i, k.j);
    return n1 > n2 ? make_label(i1 + n2, j1, Letter::a) : make_label(i1 - n2, j1, Letter::c);
  }
  if (k.kind == EdgeKind::North) {
    int i1 = k.i;
    int j1 = k.j + 1;
    int n1 = h(k.i, k.j + 1);
    int n2 = h(k.i, k.j);
    return n1 > n2 ? make_label(i1, j1 + n2, Letter::b) : make_label(i1, j1 - n2, Letter::d);
  }
  fail(Errc::InvariantViolation, "only lattice connectors carry labels");
}

std::vector<EdgeKey> face_boundary(const HeightFunction& h, const FacePoint& f) {
  const int i = f.i;
  const int j = f.j;
  std::vector<EdgeKey> out;
  out.reserve(8);
  if (glyph_at(h, i - 1, j - 1) == GlyphKind::WrenchMain) out.push_back({EdgeKind::Middle, i - 1, j - 1, 0});
  out.push_back({EdgeKind::North, i, j - 1, 0});
  if (glyph_at(h, i, j - 1) == GlyphKind::WrenchAnti) out.push_back({EdgeKind::Middle, i, j - 1, 0});
  out.push_back({EdgeKind::East, i, j, 0});
  if (glyph_at(h, i, j) == GlyphKind::WrenchMain) out.push_back({EdgeKind::Middle, i, j, 0});
  out.push_back({EdgeKind::North, i, j, 0});
  if (glyph_at(h, i - 1, j) == GlyphKind::WrenchAnti) out.push_back({EdgeKind::Middle, i - 1, j, 0});
  out.push_back({EdgeKind::East, i - 1, j, 0});
  return out;
}

int Graph::find_vertex(const VertexKey& k) const {
  auto it = vertex_index_.find(k);
  return it == vertex_index_.end() ? -1 : it->second;
}

int Graph::find_edge(const EdgeKey& k) const {
  auto it = edge_index_.find(k);
  return it == edge_index_.end() ? -1 : it->second;
}

int Graph::find_face(const FacePoint& f) const {
  auto it = face_index_.find(f);
  return it == face_index_.end() ? -1 : it->second;
}

int Graph::find_label(const EdgeLabel& e) const {
  auto it = label_index_.find(e);
  return it == label_index_.end() ? -1 : it->second;
}

std::size_t Graph::closed_face_count() const {
  return static_cast<std::size_t>(std::count_if(faces.begin(), faces.end(), [](const GFace& f) { return f.closed; }));
}

std::size_t Graph::open_face_count() const { return faces.size() - closed_face_count(); }

std::vector<int> Graph::faces_of_edge(int e) const {
  std::vector<int> out;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (std::find(faces[f].edges.begin(), faces[f].edges.end(), e) != faces[f].edges.end()) {
      out.push_back(static_cast<int>(f));
    }
  }
  return out;
}

void Graph::reindex() {
  vertex_index_.clear();
  edge_index_.clear();
  face_index_.clear();
  label_index_.clear();
  for (std::size_t v = 0; v < vertices.size(); ++v) vertex_index_[vertices[v].key] = static_cast<int>(v);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    edge_index_[edges[e].key] = static_cast<int>(e);
    if (edges[e].label) label_index_.emplace(*edges[e].label, static_cast<int>(e));
  }
  for (std::size_t f = 0; f < faces.size(); ++f) face_index_[faces[f].at] = static_cast<int>(f);
}

void Graph::recolor() {
  if (vertices.empty()) return;
  int root = -1;
  std::optional<FacePoint> first_closed;
  for (const GFace& f : faces) {
    if (f.closed && (!first_closed || f.at < *first_closed)) first_closed = f.at;
  }
  if (first_closed) {
    for (int e : faces[find_face(*first_closed)].edges) {
      int m = std::min(edges[e].u, edges[e].v);
      if (root < 0 || m < root) root = m;
    }
  }
  if (root < 0) root = 0;
  std::vector<int> color(vertices.size(), -1);
  std::deque<int> queue;
  auto start = [&](int r) {
    color[r] = 0;
    queue.push_back(r);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e : rotation[v]) {
        int w = edges[e].other(v);
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          fail(Errc::InvariantViolation, "graph is not bipartite");
        }
      }
    }
  };
  start(root);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (color[v] < 0) start(static_cast<int>(v));
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    vertices[v].color = color[v] == 0 ? Color::Black : Color::White;
  }
}

Graph build_subgraph(const HeightFunction& h, const LatticePoint& apex) {
  require_valid(h);
  require_above(h, apex);
  std::vector<FacePoint> closed = closed_faces(h, apex);
  std::set<FacePoint> closed_set(closed.begin(), closed.end());
  std::set<EdgeKey> keys;
  for (const FacePoint& f : closed) {
    for (const EdgeKey& k : face_boundary(h, f)) keys.insert(k);
  }
  std::set<FacePoint> open_set;
  for (const EdgeKey& k : keys) {
    for (const FacePoint& f : faces_beside(h, k)) {
      if (!closed_set.count(f)) open_set.insert(f);
    }
  }
  std::vector<std::pair<FacePoint, bool>> faces;
  std::set<FacePoint> all = closed_set;
  all.insert(open_set.begin(), open_set.end());
  for (const FacePoint& f : all) faces.emplace_back(f, closed_set.count(f) > 0);
  return assemble(h, apex, keys, faces);
}

std::vector<std::optional<EdgeLabel>> label_edges(const Graph& g) {
  std::vector<std::optional<EdgeLabel>> out;
  out.reserve(g.edges.size());
  for (const GEdge& e : g.edges) out.push_back(e.label);
  return out;
}

GraphReport check_graph(const Graph& g) {
  GraphReport rep;
  auto problem = [&](const std::string& s) {
    rep.ok = false;
    rep.problems.push_back(s);
  };
  std::vector<bool> seen(g.vertices.size(), false);
  if (!g.vertices.empty()) {
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e : g.rotation[v]) {
        int w = g.edges[e].other(v);
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) problem("graph is not connected");
  for (const GEdge& e : g.edges) {
    if (g.vertices[e.u].color == g.vertices[e.v].color) problem("edge joins equal colors");
  }
  std::set<EdgeLabel> labels;
  std::vector<int> middle_count(g.vertices.size(), 0);
  for (const GEdge& e : g.edges) {
    if (e.label && !labels.insert(*e.label).second) problem("label " + to_string(*e.label) + " repeats");
    if (!e.weighted()) {
      if (++middle_count[e.u] > 1 || ++middle_count[e.v] > 1) problem("unweighted edges share a vertex");
    }
  }
  std::vector<int> closed_sides(g.edges.size(), 0);
  std::vector<int> open_sides(g.edges.size(), 0);
  for (const GFace& f : g.faces) {
    if (f.closed) {
      std::size_t s = f.edges.size();
      if (s != 4 && s != 6 && s != 8) problem("closed face " + to_string(f.at) + " has " + std::to_string(s) + " sides");
      for (std::size_t k = 0; k < s; ++k) {
        const GEdge& a = g.edges[f.edges[k]];
        const GEdge& b = g.edges[f.edges[(k + 1) % s]];
        if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) {
          problem("closed face " + to_string(f.at) + " boundary is not a cycle");
        }
      }
    }
    for (int e : f.edges) ++(f.closed ? closed_sides : open_sides)[e];
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (closed_sides[e] == 0) problem("edge " + std::to_string(e) + " borders no closed face");
    if (open_sides[e] >= 2) problem("edge " + std::to_string(e) + " separates two open faces");
    if (closed_sides[e] + open_sides[e] != 2) problem("edge " + std::to_string(e) + " does not border two faces");
  }
  return rep;
}

std::vector<BoundaryPath> boundary_paths(const Graph& g) {
  std::vector<int> closed_sides(g.edges.size(), 0);
  for (const GFace& f : g.faces) {
    if (f.closed) {
      for (int e : f.edges) ++closed_sides[e];
    }
  }
  std::vector<std::vector<int>> boundary_adj(g.vertices.size());
  std::vector<bool> boundary_edge(g.edges.size(), false);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (closed_sides[e] < 2) {
      boundary_edge[e] = true;
      boundary_adj[g.edges[e].u].push_back(static_cast<int>(e));
      boundary_adj[g.edges[e].v].push_back(static_cast<int>(e));
    }
  }
  int start = -1;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!boundary_adj[v].empty()) {
      start = static_cast<int>(v);
      break;
    }
  }
  std::vector<int> loop;
  if (start >= 0) {
    int prev_edge = -1;
    int v = start;
    do {
      loop.push_back(v);
      int next_edge = -1;
      for (int e : boundary_adj[v]) {
        if (e != prev_edge) {
          next_edge = e;
          break;
        }
      }
      if (next_edge < 0) break;
      prev_edge = next_edge;
      v = g.edges[next_edge].other(v);
    } while (v != start && loop.size() <= g.vertices.size());
  }
  std::vector<bool> on_loop(g.vertices.size(), false);
  for (int v : loop) on_loop[v] = true;
  auto quadrant = [&](int v) {
    const Point& p = g.vertices[v].pos;
    return (p.x > 4 * g.apex.i ? 1 : 0) + (p.y > 4 * g.apex.j ? 2 : 0);
  };
  auto kind = [&](int v) {
    if (static_cast<int>(g.rotation[v].size()) == full_degree(g.vertices[v])) return 'I';
    for (int e : g.rotation[v]) {
      if (!boundary_edge[e] || !on_loop[g.edges[e].other(v)]) return '?';
    }
    return 'O';
  };
  std::vector<BoundaryPath> paths;
  if (loop.empty()) return paths;
  std::size_t offset = 0;
  while (offset < loop.size() && quadrant(loop[offset]) == quadrant(loop[(offset + loop.size() - 1) % loop.size()])) {
    ++offset;
  }
  if (offset == loop.size()) offset = 0;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    int v = loop[(offset + k) % loop.size()];
    if (paths.empty() || quadrant(paths.back().vertices.back()) != quadrant(v)) paths.emplace_back();
    paths.back().vertices.push_back(v);
    paths.back().pattern.push_back(kind(v));
  }
  return paths;
}

InclusionWitness subgraph_inclusion(const Graph& inner, const Graph& outer) {
  InclusionWitness w;
  for (const GVertex& v : inner.vertices) {
    int o = outer.find_vertex(v.key);
    if (o < 0) fail(Errc::NotASubgraph, "vertex missing from the outer graph");
    w.vertex_map.push_back(o);
  }
  for (const GEdge& e : inner.edges) {
    int o = outer.find_edge(e.key);
    if (o < 0 || outer.edges[o].label != e.label) fail(Errc::NotASubgraph, "edge missing from the outer graph");
    const GEdge& oe = outer.edges[o];
    if (oe.u != w.vertex_map[e.u] || oe.v != w.vertex_map[e.v]) {
      fail(Errc::NotASubgraph, "edge endpoints differ in the outer graph");
    }
    w.edge_map.push_back(o);
  }
  for (const GFace& f : inner.faces) {
    int o = outer.find_face(f.at);
    if (o < 0) fail(Errc::NotASubgraph, "face " + to_string(f.at) + " missing from the outer graph");
    if (f.closed && !outer.faces[o].closed) fail(Errc::NotASubgraph, "closed face maps to an open face");
    w.face_map.push_back(o);
  }
  return w;
}

Window window_around(const Graph& g, int margin) {
  Window w{0, 0, 0, 0};
  bool first = true;
  for (const GFace& f : g.faces) {
    if (first) {
      w = Window{f.at.i, f.at.i, f.at.j, f.at.j};
      first = false;
    }
    w.i_lo = std::min(w.i_lo, f.at.i);
    w.i_hi = std::max(w.i_hi, f.at.i);
    w.j_lo = std::min(w.j_lo, f.at.j);
    w.j_hi = std::max(w.j_hi, f.at.j);
  }
  if (first) w = Window{g.apex.i, g.apex.i, g.apex.j, g.apex.j};
  w.i_lo -= margin;
  w.i_hi += margin;
  w.j_lo -= margin;
  w.j_hi += margin;
  return w;
}

OuterWindow standard_outer_matching(const HeightFunction& h, const LatticePoint& apex, const Window& window) {
  Graph g = build_subgraph(h, apex);
  Window need = window_around(g, 1);
  if (window.i_lo > need.i_lo || window.i_hi < need.i_hi || window.j_lo > need.j_lo || window.j_hi < need.j_hi) {
    fail(Errc::WindowTooSmall, "window must contain G with a margin of one face");
  }
  HeightFunction ht = truncate_height(h, apex);
  std::set<EdgeKey> keys;
  for (int i = window.i_lo; i < window.i_hi; ++i) {
    for (int j = window.j_lo; j < window.j_hi; ++j) {
      if (glyph_at(ht, i, j) != GlyphKind::Cross) keys.insert({EdgeKind::Middle, i, j, 0});
      if (j > window.j_lo) keys.insert({EdgeKind::East, i, j, 0});
      if (i > window.i_lo) keys.insert({EdgeKind::North, i, j, 0});
    }
  }
  std::vector<std::pair<FacePoint, bool>> faces;
  for (int i = window.i_lo; i <= window.i_hi; ++i) {
    for (int j = window.j_lo; j <= window.j_hi; ++j) {
      bool complete = true;
      for (const EdgeKey& k : face_boundary(ht, FacePoint{i, j})) complete = complete && keys.count(k) > 0;
      faces.emplace_back(FacePoint{i, j}, complete);
    }
  }
  OuterWindow out;
  out.window = window;
  out.graph = assemble(ht, apex, keys, faces);
  out.from_g.assign(g.vertices.size(), -1);
  out.in_g.assign(out.graph.vertices.size(), false);
  for (const GEdge& e : g.edges) {
    int we = out.graph.find_edge(e.key);
    if (we < 0) fail(Errc::InvariantViolation, "edge of G missing from the truncated graph");
    const GEdge& wedge = out.graph.edges[we];
    for (auto [gv, wv] : {std::pair{e.u, wedge.u}, std::pair{e.v, wedge.v}}) {
      if (out.from_g[gv] >= 0 && out.from_g[gv] != wv) {
        fail(Errc::InvariantViolation, "G does not embed in the truncated graph");
      }
      out.from_g[gv] = wv;
      out.in_g[wv] = true;
    }
  }
  std::vector<int> covered(out.graph.vertices.size(), 0);
  for (std::size_t e = 0; e < out.graph.edges.size(); ++e) {
    const GEdge& we = out.graph.edges[e];
    if (!we.weighted() && !out.in_g[we.u] && !out.in_g[we.v]) {
      out.m_out.push_back(static_cast<int>(e));
      ++covered[we.u];
      ++covered[we.v];
    }
  }
  for (std::size_t v = 0; v < covered.size(); ++v) {
    if (!out.in_g[v] && covered[v] != 1) {
      fail(Errc::InvariantViolation, "outer region is not covered by wrench middle edges");
    }
  }
  return out;
}

}  // namespace octa
