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

#include "octa/transforms.hpp"

#include <algorithm>
#include <set>

#include "octa/error.hpp"

namespace octa {

namespace {

Graph compact(const Graph& g, const std::vector<bool>& drop_v, const std::vector<bool>& drop_e) {
  std::vector<int> vmap(g.vertices.size(), -1);
  std::vector<int> emap(g.edges.size(), -1);
  Graph out;
  out.apex = g.apex;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (drop_v[v]) continue;
    vmap[v] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(g.vertices[v]);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (drop_e[e]) continue;
    GEdge ne = g.edges[e];
    ne.u = vmap[ne.u];
    ne.v = vmap[ne.v];
    if (ne.u < 0 || ne.v < 0) fail(Errc::InvariantViolation, "edge kept with a removed endpoint");
    emap[e] = static_cast<int>(out.edges.size());
    out.edges.push_back(ne);
  }
  out.rotation.resize(out.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (drop_v[v]) continue;
    for (int e : g.rotation[v]) {
      if (emap[e] >= 0) out.rotation[vmap[v]].push_back(emap[e]);
    }
  }
  for (const GFace& f : g.faces) {
    GFace nf = f;
    nf.edges.clear();
    for (int e : f.edges) {
      if (emap[e] >= 0) nf.edges.push_back(emap[e]);
    }
    out.faces.push_back(std::move(nf));
  }
  out.reindex();
  return out;
}

int next_vertex_serial(const Graph& g) {
  int s = 0;
  for (const GVertex& v : g.vertices) s = std::max(s, v.key.serial);
  return s + 1;
}

int next_edge_serial(const Graph& g) {
  int s = 0;
  for (const GEdge& e : g.edges) s = std::max(s, e.key.serial);
  return s + 1;
}

Color flip(Color c) { return c == Color::Black ? Color::White : Color::Black; }

int common_vertex(const GEdge& a, const GEdge& b) {
  if (a.u == b.u || a.u == b.v) return a.u;
  if (a.v == b.u || a.v == b.v) return a.v;
  return -1;
}

// Position k such that list[k], list[k+1] (cyclically) are {x, y} in some order.
int adjacent_position(const std::vector<int>& list, int x, int y) {
  std::size_t n = list.size();
  if (n < 2) return -1;
  for (std::size_t k = 0; k < n; ++k) {
    int a = list[k];
    int b = list[(k + 1) % n];
    if ((a == x && b == y) || (a == y && b == x)) return static_cast<int>(k);
  }
  return -1;
}

}  // namespace

SplitResult split_vertex(const Graph& g, int v, int start, int length) {
  if (v < 0 || v >= static_cast<int>(g.vertices.size())) fail(Errc::InvalidSplitSite, "no such vertex");
  const std::vector<int>& rot = g.rotation[v];
  int d = static_cast<int>(rot.size());
  if (d < 2 || length < 1 || length >= d) {
    fail(Errc::InvalidSplitSite, "split needs two nonempty arcs around the vertex");
  }
  start = floor_mod(start, d);
  std::vector<int> arc;
  std::vector<int> comp;
  for (int k = 0; k < d; ++k) (k < length ? arc : comp).push_back(rot[(start + k) % d]);

  SplitResult res;
  res.graph = g;
  Graph& out = res.graph;
  const GVertex& base = g.vertices[v];
  int serial = next_vertex_serial(g);
  res.v1 = v;
  res.w = static_cast<int>(out.vertices.size());
  out.vertices.push_back(GVertex{VertexKey{base.key.ci, base.key.cj, Slot::Synthetic, serial}, base.pos,
                                 flip(base.color)});
  res.v2 = static_cast<int>(out.vertices.size());
  out.vertices.push_back(GVertex{VertexKey{base.key.ci, base.key.cj, Slot::Synthetic, serial + 1}, base.pos,
                                 base.color});
  int eserial = next_edge_serial(g);
  int s1 = static_cast<int>(out.edges.size());
  out.edges.push_back(GEdge{res.v1, res.w, EdgeKey{EdgeKind::Synthetic, base.key.ci, base.key.cj, eserial}, {}});
  int s2 = static_cast<int>(out.edges.size());
  out.edges.push_back(GEdge{res.w, res.v2, EdgeKey{EdgeKind::Synthetic, base.key.ci, base.key.cj, eserial + 1}, {}});
  for (int e : comp) {
    GEdge& ge = out.edges[e];
    if (ge.u == v) ge.u = res.v2;
    if (ge.v == v) ge.v = res.v2;
  }
  out.rotation[v] = arc;
  out.rotation[v].push_back(s1);
  out.rotation.push_back({s1, s2});
  out.rotation.push_back(comp);
  out.rotation.back().push_back(s2);

  std::set<int> arc_set(arc.begin(), arc.end());
  std::set<int> touched;
  for (auto [x, y] : {std::pair{comp.back(), arc.front()}, std::pair{arc.back(), comp.front()}}) {
    for (std::size_t f = 0; f < out.faces.size(); ++f) {
      if (touched.count(static_cast<int>(f))) continue;
      std::vector<int>& list = out.faces[f].edges;
      int k = adjacent_position(list, x, y);
      if (k < 0) continue;
      touched.insert(static_cast<int>(f));
      bool arc_first = arc_set.count(list[k]) > 0;
      std::vector<int> ins = arc_first ? std::vector<int>{s1, s2} : std::vector<int>{s2, s1};
      list.insert(list.begin() + k + 1, ins.begin(), ins.end());
    }
  }
  if (touched.empty()) fail(Errc::InvalidSplitSite, "no face surrounds the split");
  out.reindex();
  return res;
}

Graph merge_vertex(const Graph& g, int w) {
  if (w < 0 || w >= static_cast<int>(g.vertices.size()) || g.rotation[w].size() != 2) {
    fail(Errc::InvalidSplitSite, "merge needs a degree-2 vertex");
  }
  int ea = g.rotation[w][0];
  int eb = g.rotation[w][1];
  if (g.edges[ea].weighted() || g.edges[eb].weighted()) {
    fail(Errc::InvalidSplitSite, "merge needs two unweighted edges");
  }
  int x = g.edges[ea].other(w);
  int y = g.edges[eb].other(w);
  if (x == y) fail(Errc::InvalidSplitSite, "merge would create a loop");
  int keep = std::min(x, y);
  int gone = std::max(x, y);
  int keep_edge = keep == x ? ea : eb;
  int gone_edge = keep == x ? eb : ea;
  for (int e : g.rotation[gone]) {
    if (e != gone_edge && g.edges[e].other(gone) == keep) fail(Errc::InvalidSplitSite, "merge would double an edge");
  }
  Graph tmp = g;
  for (int e : g.rotation[gone]) {
    GEdge& ge = tmp.edges[e];
    if (ge.u == gone) ge.u = keep;
    if (ge.v == gone) ge.v = keep;
  }
  const std::vector<int>& grot = g.rotation[gone];
  auto pos = std::find(grot.begin(), grot.end(), gone_edge) - grot.begin();
  std::vector<int> spliced;
  for (std::size_t k = 1; k < grot.size(); ++k) spliced.push_back(grot[(pos + k) % grot.size()]);
  std::vector<int>& krot = tmp.rotation[keep];
  auto kpos = std::find(krot.begin(), krot.end(), keep_edge);
  kpos = krot.erase(kpos);
  krot.insert(kpos, spliced.begin(), spliced.end());
  std::vector<bool> drop_v(g.vertices.size(), false);
  std::vector<bool> drop_e(g.edges.size(), false);
  drop_v[w] = drop_v[gone] = true;
  drop_e[ea] = drop_e[eb] = true;
  return compact(tmp, drop_v, drop_e);
}

RenewalResult urban_renewal(const Graph& g, const FacePoint& face) {
  int fi = g.find_face(face);
  if (fi < 0) fail(Errc::FaceNotRenewable, "face " + to_string(face) + " is not in the graph");
  const GFace& F = g.faces[fi];
  if (!F.closed || F.edges.size() != 4) {
    fail(Errc::FaceNotRenewable, "face " + to_string(face) + " is not a closed quadrilateral");
  }
  std::vector<int> e(F.edges.begin(), F.edges.end());
  std::vector<int> v(4);
  for (int k = 0; k < 4; ++k) {
    v[k] = common_vertex(g.edges[e[(k + 3) % 4]], g.edges[e[k]]);
    if (v[k] < 0) fail(Errc::FaceNotRenewable, "face boundary is not a cycle");
  }
  if (std::set<int>(v.begin(), v.end()).size() != 4) fail(Errc::FaceNotRenewable, "face has repeated vertices");
  std::vector<int> nb(4, -1);
  for (int k = 0; k < 4; ++k) {
    for (int f : g.faces_of_edge(e[k])) {
      if (f != fi) nb[k] = f;
    }
  }

  Graph out = g;
  int vserial = next_vertex_serial(g);
  int eserial = next_edge_serial(g);
  Point center{0, 0};
  for (int k = 0; k < 4; ++k) {
    center.x += g.vertices[v[k]].pos.x;
    center.y += g.vertices[v[k]].pos.y;
  }
  std::vector<int> u(4);
  std::vector<int> leg(4);
  std::vector<int> side(4);
  for (int k = 0; k < 4; ++k) {
    const GVertex& vk = g.vertices[v[k]];
    u[k] = static_cast<int>(out.vertices.size());
    Point p{(3 * vk.pos.x * 4 + center.x) / 16, (3 * vk.pos.y * 4 + center.y) / 16};
    out.vertices.push_back(GVertex{VertexKey{face.i, face.j, Slot::Synthetic, vserial + k}, p, flip(vk.color)});
  }
  for (int k = 0; k < 4; ++k) {
    leg[k] = static_cast<int>(out.edges.size());
    out.edges.push_back(GEdge{v[k], u[k], EdgeKey{EdgeKind::Synthetic, face.i, face.j, eserial + k}, {}});
  }
  for (int k = 0; k < 4; ++k) {
    side[k] = static_cast<int>(out.edges.size());
    out.edges.push_back(GEdge{u[k], u[(k + 1) % 4], EdgeKey{EdgeKind::Synthetic, face.i, face.j, eserial + 4 + k},
                              g.edges[e[(k + 2) % 4]].label});
  }
  out.rotation.resize(out.vertices.size());
  for (int k = 0; k < 4; ++k) {
    out.rotation[u[k]] = {side[k], side[(k + 3) % 4], leg[k]};
    std::vector<int>& rot = out.rotation[v[k]];
    int pos = adjacent_position(rot, e[k], e[(k + 3) % 4]);
    if (pos < 0) fail(Errc::FaceNotRenewable, "face corner edges are not consecutive in the rotation");
    int d = static_cast<int>(rot.size());
    int a = pos;
    int b = (pos + 1) % d;
    rot[a] = leg[k];
    rot.erase(rot.begin() + b);
  }
  for (int k = 0; k < 4; ++k) {
    if (nb[k] < 0) continue;
    std::vector<int>& list = out.faces[nb[k]].edges;
    auto it = std::find(list.begin(), list.end(), e[k]);
    std::size_t idx = static_cast<std::size_t>(it - list.begin());
    bool forward = true;
    if (list.size() > 1) {
      const GEdge& next = g.edges[list[(idx + 1) % list.size()]];
      const GEdge& prev = g.edges[list[(idx + list.size() - 1) % list.size()]];
      bool next_at_vk = next.u == v[k] || next.v == v[k];
      bool prev_at_vk1 = prev.u == v[(k + 1) % 4] || prev.v == v[(k + 1) % 4];
      forward = next_at_vk || prev_at_vk1;
    }
    std::vector<int> ins = forward ? std::vector<int>{leg[(k + 1) % 4], side[k], leg[k]}
                                   : std::vector<int>{leg[k], side[k], leg[(k + 1) % 4]};
    it = list.erase(it);
    list.insert(it, ins.begin(), ins.end());
  }
  out.faces[fi].edges = side;

  std::vector<bool> drop_v(out.vertices.size(), false);
  std::vector<bool> drop_e(out.edges.size(), false);
  for (int k = 0; k < 4; ++k) drop_e[e[k]] = true;
  RenewalResult res;
  res.graph = compact(out, drop_v, drop_e);

  auto y = [&](int k) {
    const GEdge& ge = g.edges[e[k]];
    return ge.label ? LaurentPoly::var(VarId::edge(*ge.label)) : LaurentPoly(1);
  };
  auto xf = [&](int k) { return nb[k] < 0 ? LaurentPoly(1) : LaurentPoly::var(VarId::face(g.faces[nb[k]].at)); };
  RenewalSubstitution& sub = res.substitution;
  sub.face = face;
  sub.old_var = VarId::face(face);
  sub.numerator = y(0) * y(2) * xf(1) * xf(3) + y(1) * y(3) * xf(0) * xf(2);
  sub.replacement = sub.numerator * Monomial::var(sub.old_var, -1);
  return res;
}

bool is_local_minimum(const HeightFunction& h, const FacePoint& f) {
  int c = h(f);
  return h(f.i + 1, f.j) == c + 1 && h(f.i - 1, f.j) == c + 1 && h(f.i, f.j + 1) == c + 1 &&
         h(f.i, f.j - 1) == c + 1;
}

HeightFunction elevate_face(const HeightFunction& h, const FacePoint& face) {
  if (!is_local_minimum(h, face)) fail(Errc::NotALocalMinimum, "face " + to_string(face) + " is not a local minimum");
  return h.with_override(face, h(face) + 2);
}

HeightFunction elevate_face(const HeightFunction& h, const FacePoint& face, const LatticePoint& apex) {
  if (h(face) >= p_value(apex, face)) {
    fail(Errc::NotALocalMinimum, "face " + to_string(face) + " is not below the cone surface");
  }
  return elevate_face(h, face);
}

std::optional<FacePoint> next_elevation_site(const HeightFunction& h, const LatticePoint& apex) {
  std::vector<FacePoint> closed = closed_faces(h, apex);
  if (closed.empty()) return std::nullopt;
  std::sort(closed.begin(), closed.end(), [&](const FacePoint& a, const FacePoint& b) {
    return std::pair{h(a), a} < std::pair{h(b), b};
  });
  for (const FacePoint& f : closed) {
    if (is_local_minimum(h, f)) return f;
  }
  fail(Errc::NoLocalMinimum, "no closed face is a local minimum");
}

std::vector<FacePoint> elevation_sequence(const HeightFunction& h, const LatticePoint& apex) {
  std::vector<FacePoint> out;
  HeightFunction cur = h;
  while (auto f = next_elevation_site(cur, apex)) {
    out.push_back(*f);
    cur = elevate_face(cur, *f);
  }
  return out;
}

Graph merge_degree_two(const Graph& g) {
  Graph cur = g;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t w = 0; w < cur.vertices.size(); ++w) {
      if (cur.rotation[w].size() != 2) continue;
      const GEdge& a = cur.edges[cur.rotation[w][0]];
      const GEdge& b = cur.edges[cur.rotation[w][1]];
      if (a.weighted() || b.weighted()) continue;
      int x = a.other(static_cast<int>(w));
      int y = b.other(static_cast<int>(w));
      if (x == y) continue;
      bool adjacent = false;
      for (int e : cur.rotation[x]) adjacent = adjacent || cur.edges[e].other(x) == y;
      if (adjacent) continue;
      cur = merge_vertex(cur, static_cast<int>(w));
      changed = true;
      break;
    }
  }
  return cur;
}

}  // namespace octa
