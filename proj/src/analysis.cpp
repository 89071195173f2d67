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

#include "octa/analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "octa/error.hpp"

namespace octa {

std::string kuo_set_name(KuoSet s) {
  static const char* names[] = {"C", "N", "NE", "E", "SE", "S", "SW", "W", "NW"};
  return names[static_cast<int>(s)];
}

std::vector<int> KuoPartition::members(KuoSet s) const { return members({s}); }

std::vector<int> KuoPartition::members(std::initializer_list<KuoSet> sets) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < membership.size(); ++v) {
    if (std::find(sets.begin(), sets.end(), membership[v]) != sets.end()) out.push_back(static_cast<int>(v));
  }
  return out;
}

int KuoPartition::imbalance(KuoSet s) const {
  int d = 0;
  for (int v : members(s)) d += graph.vertices[v].color == Color::Black ? 1 : -1;
  return d;
}

std::vector<int> KuoPartition::boundary(KuoSet s) const {
  std::vector<int> out;
  for (int v : members(s)) {
    for (int e : graph.rotation[v]) {
      if (membership[graph.edges[e].other(v)] != s) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

bool kuo_adjacency_allowed(KuoSet a, KuoSet b) {
  if (a == b) return true;
  auto pair_is = [&](KuoSet x, KuoSet y) { return (a == x && b == y) || (a == y && b == x); };
  for (KuoSet corner : {KuoSet::NE, KuoSet::SE, KuoSet::SW, KuoSet::NW}) {
    if (pair_is(KuoSet::C, corner)) return true;
  }
  return pair_is(KuoSet::NE, KuoSet::NW) || pair_is(KuoSet::NE, KuoSet::SE) || pair_is(KuoSet::SW, KuoSet::NW) ||
         pair_is(KuoSet::SW, KuoSet::SE) || pair_is(KuoSet::N, KuoSet::NE) || pair_is(KuoSet::N, KuoSet::NW) ||
         pair_is(KuoSet::E, KuoSet::NE) || pair_is(KuoSet::E, KuoSet::SE) || pair_is(KuoSet::S, KuoSet::SE) ||
         pair_is(KuoSet::S, KuoSet::SW) || pair_is(KuoSet::W, KuoSet::NW) || pair_is(KuoSet::W, KuoSet::SW);
}

KuoPartition kuo_partition(const HeightFunction& h, const LatticePoint& apex) {
  require_valid(h);
  require_above(h, apex);
  if (apex.n - h(apex.i, apex.j) < 4) {
    fail(Errc::SimplifyingAssumptionViolated, "condensation needs n0 - h(i0,j0) >= 4");
  }
  KuoPartition part;
  part.graph = build_subgraph(h, apex);
  const LatticePoint np{apex.n - 1, apex.i, apex.j + 1};
  const LatticePoint ep{apex.n - 1, apex.i + 1, apex.j};
  const LatticePoint sp{apex.n - 1, apex.i, apex.j - 1};
  const LatticePoint wp{apex.n - 1, apex.i - 1, apex.j};
  const LatticePoint cp{apex.n - 2, apex.i, apex.j};
  std::array<Graph, 4> sides = {build_subgraph(h, np), build_subgraph(h, ep), build_subgraph(h, sp),
                                build_subgraph(h, wp)};
  Graph center = build_subgraph(h, cp);
  for (const GVertex& v : part.graph.vertices) {
    if (center.find_vertex(v.key) >= 0) {
      part.membership.push_back(KuoSet::C);
      continue;
    }
    int bits = 0;
    for (int s = 0; s < 4; ++s) {
      if (sides[s].find_vertex(v.key) >= 0) bits |= 1 << s;
    }
    KuoSet set;
    switch (bits) {
      case 1: set = KuoSet::N; break;
      case 2: set = KuoSet::E; break;
      case 4: set = KuoSet::S; break;
      case 8: set = KuoSet::W; break;
      case 3: set = KuoSet::NE; break;
      case 6: set = KuoSet::SE; break;
      case 12: set = KuoSet::SW; break;
      case 9: set = KuoSet::NW; break;
      default:
        fail(Errc::InvariantViolation, "vertex outside the four-way Venn decomposition (membership " +
                                           std::to_string(bits) + ")");
    }
    part.membership.push_back(set);
  }
  return part;
}

KuoReport check_kuo_hypotheses(const KuoPartition& part) {
  KuoReport rep;
  const Graph& g = part.graph;
  for (const GEdge& e : g.edges) {
    KuoSet a = part.membership[e.u];
    KuoSet b = part.membership[e.v];
    if (!kuo_adjacency_allowed(a, b)) {
      rep.ok = false;
      rep.problems.push_back("forbidden adjacency " + kuo_set_name(a) + "-" + kuo_set_name(b));
    }
  }
  std::vector<std::string> attempt[2];
  for (int swap = 0; swap < 2; ++swap) {
    int sign = swap ? -1 : 1;
    auto& probs = attempt[swap];
    auto want = [&](KuoSet s, int d) {
      if (sign * part.imbalance(s) != d) {
        probs.push_back("imbalance of " + kuo_set_name(s) + " is " + std::to_string(sign * part.imbalance(s)));
      }
    };
    want(KuoSet::NE, 1);
    want(KuoSet::SW, 1);
    want(KuoSet::SE, -1);
    want(KuoSet::NW, -1);
    for (KuoSet s : {KuoSet::C, KuoSet::N, KuoSet::E, KuoSet::S, KuoSet::W}) want(s, 0);
    Color black = swap ? Color::White : Color::Black;
    for (KuoSet s : {KuoSet::NE, KuoSet::SW, KuoSet::SE, KuoSet::NW}) {
      bool want_black = s == KuoSet::NE || s == KuoSet::SW;
      for (int v : part.boundary(s)) {
        if ((g.vertices[v].color == black) != want_black) {
          probs.push_back("boundary of " + kuo_set_name(s) + " has the wrong color");
          break;
        }
      }
    }
  }
  int pick = attempt[0].empty() ? 0 : (attempt[1].empty() ? 1 : 0);
  rep.colors_swapped = pick == 1;
  if (!attempt[pick].empty()) {
    rep.ok = false;
    rep.problems.insert(rep.problems.end(), attempt[pick].begin(), attempt[pick].end());
  }
  return rep;
}

namespace {

bool power_of_two(const Integer& c) { return c > 0 && mpz_popcount(c.get_mpz_t()) == 1; }

}  // namespace

KuoReport verify_condensation(const HeightFunction& h, const LatticePoint& apex) {
  KuoPartition part = kuo_partition(h, apex);
  KuoReport rep = check_kuo_hypotheses(part);
  auto m = [&](std::initializer_list<KuoSet> sets) {
    return matching_polynomial(induced_subgraph(part.graph, part.members(sets)), true);
  };
  using K = KuoSet;
  LaurentPoly mg = matching_polynomial(part.graph, true);
  LaurentPoly mc = m({K::C});
  LaurentPoly mn = m({K::N});
  LaurentPoly me = m({K::E});
  LaurentPoly ms = m({K::S});
  LaurentPoly mw = m({K::W});
  rep.lhs = mg * mc;
  rep.rhs_ns = m({K::N, K::NE, K::NW, K::C}) * m({K::S, K::SE, K::SW, K::C}) * me * mw;
  rep.rhs_ew = m({K::E, K::NE, K::SE, K::C}) * m({K::W, K::NW, K::SW, K::C}) * mn * ms;
  auto problem = [&](const std::string& s) {
    rep.ok = false;
    rep.problems.push_back(s);
  };
  if (rep.lhs != rep.rhs_ns + rep.rhs_ew) problem("condensation identity fails");
  for (const auto& [mono, c] : rep.rhs_ns.terms()) {
    if (rep.rhs_ew.terms().count(mono)) {
      problem("a monomial appears in both right-hand terms");
      break;
    }
  }
  for (const auto& [mono, c] : rep.lhs.terms()) {
    if (!power_of_two(c)) {
      problem("coefficient " + c.get_str() + " is not a power of two");
      break;
    }
  }
  const int n0 = apex.n;
  const int i0 = apex.i;
  const int j0 = apex.j;
  auto edge_var = [](int i, int j, Letter q) { return LaurentPoly::var(VarId::edge(make_label(i, j, q))); };
  if (me != edge_var(i0 + n0 - 1, j0, Letter::a)) problem("m(E) is not a single a-edge");
  if (mw != edge_var(i0 - n0 + 1, j0, Letter::c)) problem("m(W) is not a single c-edge");
  if (mn != edge_var(i0, j0 + n0 - 1, Letter::b)) problem("m(N) is not a single b-edge");
  if (ms != edge_var(i0, j0 - n0 + 1, Letter::d)) problem("m(S) is not a single d-edge");
  if (mc != matching_polynomial(build_subgraph(h, LatticePoint{n0 - 2, i0, j0}), true)) {
    problem("m(C) differs from the matching polynomial two levels down");
  }
  if (!rep.ok) {
    std::string msg = "condensation check failed at " + to_string(apex) + ":";
    for (const auto& p : rep.problems) msg += " " + p + ";";
    fail(Errc::IdentityViolated, msg);
  }
  return rep;
}

RegionSums region_sums(const Graph& g, const EdgeLabel& label, const std::map<FacePoint, int>& face_exp) {
  const int i0 = label.i;
  const int j0 = label.j;
  RegionSums sums{0, 0, 0, 0};
  for (const GFace& f : g.faces) {
    auto it = face_exp.find(f.at);
    if (it == face_exp.end() || it->second == 0) continue;
    const int n = f.height;
    const int i = f.at.i;
    const int j = f.at.j;
    int s1 = 0, t1 = 0, s2 = 0, t2 = 0;
    switch (label.q) {
      case Letter::a: s1 = n + i + j; t1 = i0 + j0 + 1; s2 = n + i - j; t2 = i0 - j0 + 1; break;
      case Letter::b: s1 = n + i + j; t1 = i0 + j0 + 1; s2 = n + j - i; t2 = j0 - i0 + 1; break;
      case Letter::c: s1 = n - i + j; t1 = -i0 + j0 + 1; s2 = n - i - j; t2 = -i0 - j0 + 1; break;
      case Letter::d: s1 = n + i - j; t1 = i0 - j0 + 1; s2 = n - i - j; t2 = -i0 - j0 + 1; break;
    }
    bool lo1 = s1 < t1;
    bool lo2 = s2 < t2;
    int region = lo1 ? (lo2 ? 0 : 1) : (lo2 ? 3 : 2);
    sums[region] += it->second;
  }
  return sums;
}

std::map<EdgeLabel, int> recover_edge_exponents(const Graph& g, const std::map<FacePoint, int>& face_exp) {
  std::map<EdgeLabel, int> out;
  for (const GEdge& e : g.edges) {
    if (!e.label) continue;
    RegionSums s = region_sums(g, *e.label, face_exp);
    int delta = s[1];
    if (-s[0] != delta || 1 - s[2] != delta || s[3] != delta || (delta != 0 && delta != 1)) {
      fail(Errc::InconsistentExponents, "region sums for " + to_string(*e.label) + " are " + std::to_string(s[0]) +
                                            ", " + std::to_string(s[1]) + ", " + std::to_string(s[2]) + ", " +
                                            std::to_string(s[3]));
    }
    out[*e.label] = delta;
  }
  return out;
}

std::vector<Rational> propp_weights(const Graph& g) {
  std::vector<Rational> w;
  w.reserve(g.edges.size());
  for (const GEdge& e : g.edges) w.push_back(e.weighted() ? Rational(1, 4) : Rational(1, 2));
  return w;
}

ProppContext propp_context(const HeightFunction& h, const LatticePoint& apex) {
  Graph g = build_subgraph(h, apex);
  ProppContext ctx;
  ctx.window = standard_outer_matching(h, apex, window_around(g, 2));
  for (const GEdge& e : g.edges) {
    int we = ctx.window.graph.find_edge(e.key);
    if (we < 0) fail(Errc::InvariantViolation, "edge of G missing from the window");
    ctx.g_to_window_edge.push_back(we);
  }
  return ctx;
}

namespace {

struct DualStep {
  int from;
  int to;
  int edge;
  bool white_left;  // looking from `from` to `to`
};

std::vector<DualStep> dual_steps(const Graph& w) {
  std::vector<std::vector<int>> faces_of(w.edges.size());
  for (std::size_t f = 0; f < w.faces.size(); ++f) {
    for (int e : w.faces[f].edges) faces_of[e].push_back(static_cast<int>(f));
  }
  std::vector<DualStep> steps;
  for (std::size_t e = 0; e < w.edges.size(); ++e) {
    if (faces_of[e].size() != 2) continue;
    int f = faces_of[e][0];
    int g = faces_of[e][1];
    if (!w.faces[f].closed || !w.faces[g].closed) continue;
    const GEdge& ge = w.edges[e];
    const GVertex& white = w.vertices[ge.u].color == Color::White ? w.vertices[ge.u] : w.vertices[ge.v];
    long fx = 4L * w.faces[f].at.i, fy = 4L * w.faces[f].at.j;
    long gx = 4L * w.faces[g].at.i, gy = 4L * w.faces[g].at.j;
    long dx = gx - fx, dy = gy - fy;
    long rx = 2L * white.pos.x - (fx + gx), ry = 2L * white.pos.y - (fy + gy);
    long cross = dx * ry - dy * rx;
    if (cross == 0) fail(Errc::InvariantViolation, "degenerate dual step");
    steps.push_back(DualStep{f, g, static_cast<int>(e), cross > 0});
  }
  return steps;
}

// 4 * (H(from) - H(to)) for a step, given whether the edge is matched.
int quarter_step(const Graph& w, const DualStep& s, bool matched) {
  int q = (w.edges[s.edge].weighted() ? 1 : 2) - (matched ? 4 : 0);
  return s.white_left ? q : -q;
}

}  // namespace

ProppHeight propp_height(const ProppContext& ctx, const Matching& m, std::optional<FacePoint> root, bool normalize) {
  const Graph& w = ctx.window.graph;
  std::vector<bool> in_m(w.edges.size(), false);
  Matching full;
  for (int e : m) full.push_back(ctx.g_to_window_edge.at(e));
  full.insert(full.end(), ctx.window.m_out.begin(), ctx.window.m_out.end());
  std::sort(full.begin(), full.end());
  require_matching(w, full);
  for (int e : full) in_m[e] = true;

  std::vector<DualStep> steps = dual_steps(w);
  std::vector<std::vector<int>> adj(w.faces.size());
  for (std::size_t s = 0; s < steps.size(); ++s) {
    adj[steps[s].from].push_back(static_cast<int>(s));
    adj[steps[s].to].push_back(static_cast<int>(s));
  }
  int start = 0;
  while (start < static_cast<int>(w.faces.size()) && !w.faces[start].closed) ++start;
  if (root) {
    start = w.find_face(*root);
    if (start < 0 || !w.faces[start].closed) fail(Errc::BadParameters, "root face outside the window interior");
  }
  std::vector<long> value(w.faces.size(), 0);
  std::vector<bool> seen(w.faces.size(), false);
  seen[start] = true;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int si : adj[f]) {
      const DualStep& s = steps[si];
      int q = quarter_step(w, s, in_m[s.edge]);
      int other = s.from == f ? s.to : s.from;
      long expect = s.from == f ? value[f] - q : value[f] + q;
      if (!seen[other]) {
        seen[other] = true;
        value[other] = expect;
        queue.push_back(other);
      }
    }
  }
  for (const DualStep& s : steps) {
    if (value[s.from] - value[s.to] != quarter_step(w, s, in_m[s.edge])) {
      fail(Errc::PathInconsistency, "height integration depends on the path across " + to_string(w.faces[s.from].at) + " " + to_string(w.faces[s.to].at));
    }
  }
  long lo = 0;
  if (normalize) {
    bool first = true;
    for (std::size_t f = 0; f < value.size(); ++f) {
      if (seen[f] && (first || value[f] < lo)) lo = value[f];
      first = first && !seen[f];
    }
  }
  ProppHeight out;
  for (std::size_t f = 0; f < w.faces.size(); ++f) {
    if (seen[f]) out.value[w.faces[f].at] = Rational(value[f] - lo, 4);
  }
  for (auto& [f, r] : out.value) r.canonicalize();
  return out;
}

Matching matching_from_heights(const ProppContext& ctx, const Graph& g, const ProppHeight& heights) {
  const Graph& w = ctx.window.graph;
  std::map<int, const DualStep*> by_edge;
  std::vector<DualStep> steps = dual_steps(w);
  for (const DualStep& s : steps) by_edge[s.edge] = &s;
  Matching m;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto it = by_edge.find(ctx.g_to_window_edge[e]);
    if (it == by_edge.end()) continue;
    const DualStep& s = *it->second;
    Rational diff = heights.value.at(w.faces[s.from].at) - heights.value.at(w.faces[s.to].at);
    if (diff * 4 == quarter_step(w, s, true)) m.push_back(static_cast<int>(e));
  }
  return m;
}

std::vector<int> collar_vertices(const OuterWindow& ow) {
  std::vector<int> out;
  for (std::size_t v = 0; v < ow.graph.vertices.size(); ++v) {
    if (static_cast<int>(ow.graph.rotation[v].size()) < full_degree(ow.graph.vertices[v])) {
      out.push_back(static_cast<int>(v));
    }
  }
  return out;
}

bool verify_acceptable(const HeightFunction& h, const LatticePoint& apex, const Window& window,
                       const Matching& m_window) {
  return verify_acceptable(standard_outer_matching(h, apex, window), m_window);
}

bool verify_acceptable(const OuterWindow& ow, const Matching& m_window) {
  for (int v : collar_vertices(ow)) {
    if (ow.in_g[v]) fail(Errc::CollarTooThin, "the window collar touches G");
  }
  if (!is_matching(ow.graph, m_window)) return false;
  std::set<int> chosen(m_window.begin(), m_window.end());
  return std::all_of(ow.m_out.begin(), ow.m_out.end(), [&](int e) { return chosen.count(e) > 0; });
}

std::vector<Matching> collar_matchings(const OuterWindow& ow, const EnumerationLimits& limits) {
  const Graph& w = ow.graph;
  std::vector<bool> fixed(w.vertices.size(), false);
  Matching base;
  std::set<int> m_out(ow.m_out.begin(), ow.m_out.end());
  for (int v : collar_vertices(ow)) {
    if (ow.in_g[v]) fail(Errc::CollarTooThin, "the window collar touches G");
    for (int e : w.rotation[v]) {
      if (m_out.count(e) && !fixed[w.edges[e].u] && !fixed[w.edges[e].v]) {
        fixed[w.edges[e].u] = fixed[w.edges[e].v] = true;
        base.push_back(e);
      }
    }
  }
  std::vector<int> rest;
  for (std::size_t v = 0; v < w.vertices.size(); ++v) {
    if (!fixed[v]) rest.push_back(static_cast<int>(v));
  }
  Graph sub = induced_subgraph(w, rest);
  std::vector<Matching> out;
  for_each_matching(sub, [&](const Matching& m) {
    Matching full = base;
    for (int e : m) full.push_back(w.find_edge(sub.edges[e].key));
    std::sort(full.begin(), full.end());
    out.push_back(std::move(full));
    return true;
  }, limits);
  return out;
}

}  // namespace octa
