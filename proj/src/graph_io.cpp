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

#include "octa/graph_io.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>

namespace octa {
namespace {

constexpr int kScale = 12;  // pixels per quarter unit
constexpr int kMargin = 24;

struct Frame {
  int min_x = INT_MAX, max_x = INT_MIN, min_y = INT_MAX, max_y = INT_MIN;
  void include(const Point& p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  int sx(int x) const { return kMargin + (x - min_x) * kScale; }
  int sy(int y) const { return kMargin + (max_y - y) * kScale; }
  int width() const { return 2 * kMargin + (max_x - min_x) * kScale; }
  int height() const { return 2 * kMargin + (max_y - min_y) * kScale; }
};

// Vertex sequence along a face's edge list.
std::vector<int> face_walk(const Graph& g, const GFace& f) {
  std::vector<int> walk;
  if (f.edges.empty()) return walk;
  const GEdge& first = g.edges[f.edges.front()];
  int cur = first.u;
  if (f.edges.size() > 1) {
    const GEdge& second = g.edges[f.edges[1]];
    if (first.u == second.u || first.u == second.v) cur = first.v;
  }
  walk.push_back(cur);
  for (int e : f.edges) {
    cur = g.edges[e].other(cur);
    walk.push_back(cur);
  }
  if (f.closed && walk.size() > 1 && walk.front() == walk.back()) walk.pop_back();
  return walk;
}

std::string edge_name(const GEdge& e) {
  return e.label ? to_string(*e.label) : std::string("1");
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string graph_to_svg(const Graph& g, const Matching& highlight) {
  Frame fr;
  for (const GVertex& v : g.vertices) fr.include(v.pos);
  for (const GFace& f : g.faces) fr.include(Point{4 * f.at.i, 4 * f.at.j});
  if (g.vertices.empty()) fr.include(Point{0, 0});
  std::set<int> bold(highlight.begin(), highlight.end());

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fr.width() << "\" height=\"" << fr.height()
      << "\" viewBox=\"0 0 " << fr.width() << " " << fr.height() << "\">\n"
      << "<title>" << escape_xml("G" + to_string(g.apex)) << "</title>\n"
      << "<g id=\"faces\">\n";
  for (const GFace& f : g.faces) {
    std::vector<int> walk = face_walk(g, f);
    if (f.closed) {
      out << "<polygon fill=\"#dde6f2\" stroke=\"none\" points=\"";
    } else {
      out << "<polyline fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4 3\" points=\"";
    }
    for (std::size_t k = 0; k < walk.size(); ++k) {
      const Point& p = g.vertices[walk[k]].pos;
      out << (k ? " " : "") << fr.sx(p.x) << "," << fr.sy(p.y);
    }
    out << "\"/>\n";
    out << "<text x=\"" << fr.sx(4 * f.at.i) << "\" y=\"" << fr.sy(4 * f.at.j) + 4
        << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#555555\">" << f.height << "</text>\n";
  }
  out << "</g>\n<g id=\"edges\">\n";
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const GEdge& ed = g.edges[e];
    const Point& a = g.vertices[ed.u].pos;
    const Point& b = g.vertices[ed.v].pos;
    bool on = bold.count(static_cast<int>(e)) > 0;
    out << "<line x1=\"" << fr.sx(a.x) << "\" y1=\"" << fr.sy(a.y) << "\" x2=\"" << fr.sx(b.x) << "\" y2=\""
        << fr.sy(b.y) << "\" stroke=\"" << (on ? "#c0392b" : "#222222") << "\" stroke-width=\""
        << (on ? 5 : (ed.weighted() ? 1.5 : 1)) << "\"" << (ed.weighted() ? "" : " stroke-dasharray=\"2 2\"")
        << "><title>" << escape_xml(edge_name(ed)) << "</title></line>\n";
  }
  out << "</g>\n<g id=\"vertices\">\n";
  for (const GVertex& v : g.vertices) {
    out << "<circle cx=\"" << fr.sx(v.pos.x) << "\" cy=\"" << fr.sy(v.pos.y) << "\" r=\"4\" fill=\""
        << (v.color == Color::Black ? "#000000" : "#ffffff") << "\" stroke=\"#000000\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string graph_to_dot(const Graph& g, const Matching& highlight) {
  std::set<int> bold(highlight.begin(), highlight.end());
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle, label=\"\", width=0.15];\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const GVertex& gv = g.vertices[v];
    out << "  v" << v << " [pos=\"" << gv.pos.x << "," << gv.pos.y << "!\", style=filled, fillcolor="
        << (gv.color == Color::Black ? "black" : "white") << "];\n";
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const GEdge& ed = g.edges[e];
    out << "  v" << ed.u << " -- v" << ed.v << " [label=\"" << edge_name(ed) << "\"";
    if (!ed.weighted()) out << ", style=dashed";
    if (bold.count(static_cast<int>(e))) out << ", penwidth=4, color=red";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const GVertex& v : g.vertices) {
    vertices.push_back({{"x", v.pos.x}, {"y", v.pos.y}, {"color", v.color == Color::Black ? "black" : "white"}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const GEdge& e : g.edges) {
    nlohmann::json je = {{"u", e.u}, {"v", e.v}};
    je["label"] = e.label ? nlohmann::json(to_string(*e.label)) : nlohmann::json(nullptr);
    edges.push_back(je);
  }
  nlohmann::json faces = nlohmann::json::array();
  for (const GFace& f : g.faces) {
    faces.push_back({{"face", {f.at.i, f.at.j}}, {"closed", f.closed}, {"height", f.height}, {"edges", f.edges}});
  }
  return {{"apex", {g.apex.n, g.apex.i, g.apex.j}}, {"vertices", vertices}, {"edges", edges}, {"faces", faces}};
}

nlohmann::json matching_to_json(const Graph& g, const Matching& m) {
  nlohmann::json labels = nlohmann::json::array();
  for (const EdgeLabel& l : matching_labels(g, m)) labels.push_back(to_string(l));
  return {{"edges", m}, {"labels", labels}};
}

nlohmann::json labels_to_json(const std::vector<EdgeLabel>& labels) {
  nlohmann::json out = nlohmann::json::array();
  for (const EdgeLabel& l : labels) out.push_back(to_string(l));
  return out;
}

}  // namespace octa
