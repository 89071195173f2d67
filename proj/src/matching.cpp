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

#include "octa/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "octa/error.hpp"

namespace octa {

EnumerationLimits default_limits() {
  EnumerationLimits lim;
  if (const char* env = std::getenv("OCTA_MAX_MATCHINGS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') lim.max_matchings = v;
  }
  return lim;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Graph& g, const std::function<bool(const Matching&)>& visit, const EnumerationLimits& lim)
      : g_(g), visit_(visit), lim_(lim), covered_(g.vertices.size(), false) {
    incident_.resize(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      incident_[v] = g.rotation[v];
      std::sort(incident_[v].begin(), incident_[v].end());
    }
  }

  void run() {
    if (g_.vertices.size() > lim_.max_vertices) {
      fail(Errc::SizeLimitExceeded, "graph has " + std::to_string(g_.vertices.size()) + " vertices");
    }
    recurse(0);
  }

 private:
  bool recurse(std::size_t from) {
    while (from < covered_.size() && covered_[from]) ++from;
    if (from == covered_.size()) {
      if (++found_ > lim_.max_matchings) {
        fail(Errc::SizeLimitExceeded, "more than " + std::to_string(lim_.max_matchings) + " matchings");
      }
      Matching m = current_;
      std::sort(m.begin(), m.end());
      return visit_(m);
    }
    int v = static_cast<int>(from);
    covered_[v] = true;
    for (int e : incident_[v]) {
      int w = g_.edges[e].other(v);
      if (covered_[w]) continue;
      covered_[w] = true;
      current_.push_back(e);
      bool go_on = recurse(from + 1);
      current_.pop_back();
      covered_[w] = false;
      if (!go_on) {
        covered_[v] = false;
        return false;
      }
    }
    covered_[v] = false;
    return true;
  }

  const Graph& g_;
  const std::function<bool(const Matching&)>& visit_;
  EnumerationLimits lim_;
  std::vector<bool> covered_;
  std::vector<std::vector<int>> incident_;
  Matching current_;
  std::uint64_t found_ = 0;
};

}  // namespace

void for_each_matching(const Graph& g, const std::function<bool(const Matching&)>& visit,
                       const EnumerationLimits& limits) {
  Enumerator(g, visit, limits).run();
}

std::vector<Matching> enumerate_matchings(const Graph& g, const EnumerationLimits& limits) {
  std::vector<Matching> out;
  for_each_matching(g, [&](const Matching& m) {
    out.push_back(m);
    return true;
  }, limits);
  return out;
}

std::uint64_t count_matchings(const Graph& g, const EnumerationLimits& limits) {
  std::uint64_t n = 0;
  for_each_matching(g, [&](const Matching&) {
    ++n;
    return true;
  }, limits);
  return n;
}

bool is_matching(const Graph& g, const Matching& m) {
  std::vector<int> hits(g.vertices.size(), 0);
  for (int e : m) {
    if (e < 0 || e >= static_cast<int>(g.edges.size())) return false;
    ++hits[g.edges[e].u];
    ++hits[g.edges[e].v];
  }
  return std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; });
}

void require_matching(const Graph& g, const Matching& m) {
  if (!is_matching(g, m)) fail(Errc::NotAMatching, "edge set is not a perfect matching");
}

namespace {

int ceil_half(int v) { return floor_div(v + 1, 2); }

}  // namespace

ExponentVector matching_exponents(const Graph& g, const Matching& m) {
  std::vector<bool> used(g.edges.size(), false);
  for (int e : m) used[e] = true;
  ExponentVector ev;
  for (const GFace& f : g.faces) {
    int a = 0;
    for (int e : f.edges) a += used[e] ? 1 : 0;
    int b = static_cast<int>(f.edges.size()) - a;
    ev.face_exp[f.at] = ceil_half(b - a) - (f.closed ? 1 : 0);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].label) ev.edge_exp[*g.edges[e].label] = used[e] ? 1 : 0;
  }
  return ev;
}

Monomial matching_monomial(const Graph& g, const Matching& m, bool faces_to_one) {
  std::vector<Monomial::Entry> entries;
  for (int e : m) {
    if (g.edges[e].label) entries.emplace_back(VarId::edge(*g.edges[e].label), 1);
  }
  if (!faces_to_one) {
    std::vector<bool> used(g.edges.size(), false);
    for (int e : m) used[e] = true;
    for (const GFace& f : g.faces) {
      int a = 0;
      for (int e : f.edges) a += used[e] ? 1 : 0;
      int b = static_cast<int>(f.edges.size()) - a;
      int eps = ceil_half(b - a) - (f.closed ? 1 : 0);
      if (eps != 0) entries.emplace_back(VarId::face(f.at), eps);
    }
  }
  return Monomial::from_entries(std::move(entries));
}

LaurentPoly matching_polynomial(const Graph& g, bool faces_to_one, const EnumerationLimits& limits) {
  LaurentPoly p;
  for_each_matching(g, [&](const Matching& m) {
    p.add_term(matching_monomial(g, m, faces_to_one), Integer(1));
    return true;
  }, limits);
  return p;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> remap(g.vertices.size(), -1);
  Graph out;
  out.apex = g.apex;
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted) {
    remap[v] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(g.vertices[v]);
  }
  std::vector<int> edge_remap(g.edges.size(), -1);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const GEdge& ge = g.edges[e];
    if (remap[ge.u] < 0 || remap[ge.v] < 0) continue;
    GEdge ne = ge;
    ne.u = remap[ge.u];
    ne.v = remap[ge.v];
    edge_remap[e] = static_cast<int>(out.edges.size());
    out.edges.push_back(ne);
  }
  out.rotation.resize(out.vertices.size());
  for (int v : sorted) {
    for (int e : g.rotation[v]) {
      if (edge_remap[e] >= 0) out.rotation[remap[v]].push_back(edge_remap[e]);
    }
  }
  out.reindex();
  return out;
}

std::vector<EdgeLabel> matching_labels(const Graph& g, const Matching& m) {
  std::vector<EdgeLabel> out;
  for (int e : m) {
    if (g.edges[e].label) out.push_back(*g.edges[e].label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matching complete_matching(const Graph& g, const std::vector<EdgeLabel>& labels) {
  Matching m;
  std::vector<bool> covered(g.vertices.size(), false);
  for (const EdgeLabel& l : labels) {
    int e = g.find_label(l);
    if (e < 0) fail(Errc::NotAMatching, "label " + to_string(l) + " is not an edge of the graph");
    for (int v : {g.edges[e].u, g.edges[e].v}) {
      if (covered[v]) fail(Errc::NotAMatching, "labels share a vertex");
      covered[v] = true;
    }
    m.push_back(e);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const GEdge& ge = g.edges[e];
    if (ge.weighted() || covered[ge.u] || covered[ge.v]) continue;
    covered[ge.u] = covered[ge.v] = true;
    m.push_back(static_cast<int>(e));
  }
  std::sort(m.begin(), m.end());
  require_matching(g, m);
  return m;
}

}  // namespace octa
