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

#include "octa/verify.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "octa/analysis.hpp"
#include "octa/error.hpp"
#include "octa/matching.hpp"
#include "octa/recurrence.hpp"
#include "octa/sampler.hpp"
#include "octa/transforms.hpp"

namespace octa {

void VerifyReport::add(std::string name, bool pass, std::string detail) {
  lines.push_back(CheckLine{std::move(name), pass, std::move(detail)});
}

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const CheckLine& l : lines) n += l.pass ? 0 : 1;
  return n;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const CheckLine& l : lines) {
    out << (l.pass ? "PASS " : "FAIL ") << l.name;
    if (!l.detail.empty()) out << "  " << l.detail;
    out << "\n";
  }
  out << title << ": " << (lines.size() - failures()) << "/" << lines.size() << " passed, "
      << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckLine& l : lines) checks.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
  return {{"title", title}, {"pass", pass()}, {"failures", failures()}, {"checks", checks}};
}

double chi_squared_p_value(double statistic, double degrees_of_freedom) {
  boost::math::chi_squared dist(degrees_of_freedom);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

namespace {

// Runs body for a case, turning library errors into a failed line.
template <typename Body>
void guarded(VerifyReport& rep, const std::string& name, Body body) {
  try {
    body();
  } catch (const Error& e) {
    rep.add(name, false, e.what());
  }
}

}  // namespace

VerifyReport verify_main_theorem(const std::vector<SuiteCase>& cases) {
  VerifyReport rep{"main theorem", {}};
  for (const SuiteCase& c : cases) {
    guarded(rep, c.name, [&] {
      Graph g = build_subgraph(c.h, c.apex);
      EvalContext ctx(c.h);
      LaurentPoly f = eval_f(ctx, c.apex);
      LaurentPoly m = matching_polynomial(g);
      CoefficientProfile prof = coefficient_profile(m);
      std::uint64_t count = count_matchings(g);
      GraphReport gr = check_graph(g);
      std::vector<std::string> bad;
      if (m != f) bad.push_back("polynomials differ");
      if (!prof.all_coefficients_one()) bad.push_back("coefficient other than 1");
      if (prof.face_min < -1 || prof.face_max > 3) bad.push_back("face exponent out of range");
      if (prof.edge_min < 0 || prof.edge_max > 1) bad.push_back("edge exponent out of range");
      if (Integer(count) != m.sum_of_coefficients()) bad.push_back("count differs from the all-ones value");
      if (!gr.ok) bad.push_back("graph check: " + gr.problems.front());
      std::string detail = "matchings=" + std::to_string(count);
      for (const auto& b : bad) detail += "; " + b;
      rep.add(c.name, bad.empty(), detail);
    });
  }
  return rep;
}

VerifyReport verify_renewal(const std::vector<SuiteCase>& cases, std::size_t instances, std::uint64_t seed) {
  VerifyReport rep{"transforms", {}};
  std::mt19937_64 rng(seed);
  std::vector<SuiteCase> pool = distinct_graphs(cases);
  if (pool.empty()) return rep;
  std::vector<Graph> graphs;
  std::vector<LaurentPoly> polys;
  for (const SuiteCase& c : pool) {
    graphs.push_back(build_subgraph(c.h, c.apex));
    polys.push_back(matching_polynomial(graphs.back()));
  }
  std::uniform_int_distribution<std::size_t> pick_case(0, pool.size() - 1);
  for (std::size_t k = 0; k < instances; ++k) {
    std::size_t ci = pick_case(rng);
    const Graph& g = graphs[ci];
    std::vector<int> sites;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      if (g.rotation[v].size() >= 2) sites.push_back(static_cast<int>(v));
    }
    if (sites.empty()) continue;
    int v = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    int d = static_cast<int>(g.rotation[v].size());
    int start = std::uniform_int_distribution<int>(0, d - 1)(rng);
    int length = std::uniform_int_distribution<int>(1, d - 1)(rng);
    std::string name = "split " + pool[ci].name + " v" + std::to_string(v) + " arc " + std::to_string(start) + "+" +
                       std::to_string(length);
    guarded(rep, name, [&] {
      SplitResult s = split_vertex(g, v, start, length);
      bool same = matching_polynomial(s.graph) == polys[ci];
      Graph back = merge_vertex(s.graph, s.w);
      bool inverse = back.vertices.size() == g.vertices.size() && back.edges.size() == g.edges.size() &&
                     matching_polynomial(back) == polys[ci];
      rep.add(name, same && inverse, same ? (inverse ? "" : "merge does not invert") : "polynomial changed");
    });
  }
  std::vector<std::pair<std::size_t, FacePoint>> quads;
  for (std::size_t ci = 0; ci < graphs.size(); ++ci) {
    for (const GFace& f : graphs[ci].faces) {
      if (f.closed && f.edges.size() == 4) quads.emplace_back(ci, f.at);
    }
  }
  for (std::size_t k = 0; k < instances && !quads.empty(); ++k) {
    auto [ci, face] = quads[std::uniform_int_distribution<std::size_t>(0, quads.size() - 1)(rng)];
    const SuiteCase& c = pool[ci];
    std::string name = "renewal " + c.name + " face " + to_string(face);
    guarded(rep, name, [&] {
      RenewalResult r = urban_renewal(graphs[ci], face);
      LaurentPoly renewed = matching_polynomial(r.graph);
      bool same = substitute(renewed, r.substitution.assignment()) == polys[ci];
      std::string detail = same ? "" : "substitution does not recover m(G)";
      bool coherent = true;
      if (is_local_minimum(c.h, face)) {
        HeightFunction lifted = elevate_face(c.h, face, c.apex);
        LaurentPoly expect = lifted(c.apex.i, c.apex.j) == c.apex.n
                                 ? LaurentPoly::var(VarId::face(c.apex.i, c.apex.j))
                                 : matching_polynomial(build_subgraph(lifted, c.apex));
        coherent = renewed == expect;
        if (!coherent) detail += " renewed graph differs from the elevated surface";
        else detail += "elevation coherent";
      }
      rep.add(name, same && coherent, detail);
    });
  }
  return rep;
}

VerifyReport verify_condensation_suite(const std::vector<SuiteCase>& cases) {
  VerifyReport rep{"condensation", {}};
  for (const SuiteCase& c : cases) {
    if (c.apex.n - c.h(c.apex.i, c.apex.j) < 4) continue;
    guarded(rep, c.name, [&] {
      KuoReport k = verify_condensation(c.h, c.apex);
      rep.add(c.name, k.ok, "lhs terms=" + std::to_string(k.lhs.term_count()) +
                                (k.colors_swapped ? " (colors swapped)" : ""));
    });
  }
  return rep;
}

VerifyReport verify_recovery(const std::vector<SuiteCase>& cases) {
  VerifyReport rep{"recovery", {}};
  for (const SuiteCase& c : cases) {
    guarded(rep, c.name, [&] {
      Graph g = build_subgraph(c.h, c.apex);
      std::set<std::map<FacePoint, int>> seen;
      std::size_t count = 0;
      std::size_t mismatches = 0;
      std::string witness;
      for_each_matching(g, [&](const Matching& m) {
        ExponentVector ev = matching_exponents(g, m);
        if (recover_edge_exponents(g, ev.face_exp) != ev.edge_exp) {
          if (mismatches++ == 0) witness = " first=" + nlohmann::json(m).dump();
        }
        seen.insert(ev.face_exp);
        ++count;
        return true;
      });
      bool injective = seen.size() == count;
      rep.add(c.name, mismatches == 0 && injective,
              "matchings=" + std::to_string(count) + " mismatches=" + std::to_string(mismatches) + witness +
                  (injective ? "" : " face exponents collide"));
    });
  }
  return rep;
}

VerifyReport verify_heights(const std::vector<SuiteCase>& cases) {
  VerifyReport rep{"heights", {}};
  for (const SuiteCase& c : cases) {
    guarded(rep, c.name, [&] {
      Graph g = build_subgraph(c.h, c.apex);
      ProppContext ctx = propp_context(c.h, c.apex);
      const Graph& w = ctx.window.graph;
      std::vector<Rational> wt = propp_weights(w);
      bool sums = true;
      for (std::size_t v = 0; v < w.vertices.size(); ++v) {
        if (static_cast<int>(w.rotation[v].size()) != full_degree(w.vertices[v])) continue;
        Rational s = 0;
        for (int e : w.rotation[v]) s += wt[e];
        sums = sums && s == 1;
      }
      std::set<std::map<FacePoint, Rational>> heights;
      std::size_t count = 0;
      std::size_t round_trip_failures = 0;
      for_each_matching(g, [&](const Matching& m) {
        ProppHeight hgt = propp_height(ctx, m);
        heights.insert(hgt.value);
        if (matching_from_heights(ctx, g, hgt) != m) ++round_trip_failures;
        ++count;
        return true;
      });
      std::vector<Matching> acceptable = collar_matchings(ctx.window);
      bool all_acceptable = true;
      for (const Matching& m : acceptable) all_acceptable = all_acceptable && verify_acceptable(ctx.window, m);
      std::vector<std::string> bad;
      if (!sums) bad.push_back("vertex weights do not sum to 1");
      if (heights.size() != count) bad.push_back("heights collide");
      if (round_trip_failures) bad.push_back("matching not recovered from heights");
      if (acceptable.size() != count || !all_acceptable) bad.push_back("acceptable matchings differ from G");
      std::string detail = "matchings=" + std::to_string(count);
      for (const auto& b : bad) detail += "; " + b;
      rep.add(c.name, bad.empty(), detail);
    });
  }
  return rep;
}

VerifyReport verify_sampler(const std::vector<SuiteCase>& cases, const SamplerCheckOptions& options) {
  VerifyReport rep{"sampler", {}};
  std::uint64_t salt = 0;
  for (const SuiteCase& c : distinct_graphs(cases)) {
    guarded(rep, c.name, [&] {
      Graph g = build_subgraph(c.h, c.apex);
      std::vector<Matching> all = enumerate_matchings(g);
      if (all.size() > options.max_matchings) return;
      Sampler sampler(c.h, c.apex);
      std::vector<std::string> bad;
      if (sampler.steps().size() != cone_upper_count(c.h, c.apex)) bad.push_back("step count differs from |U∩C|");
      for (const ElevationStep& s : sampler.steps()) {
        if (s.x_north * s.x_south + s.x_east * s.x_west != s.x * s.x_new) {
          bad.push_back("step probabilities do not sum to 1");
          break;
        }
      }
      std::map<Matching, std::size_t> hist;
      for (const Matching& m : all) hist[m] = 0;
      std::mt19937_64 rng(options.seed + salt++);
      for (std::size_t k = 0; k < options.draws; ++k) {
        Matching m = complete_matching(g, sampler.draw(rng));
        auto it = hist.find(m);
        if (it == hist.end()) fail(Errc::InvariantViolation, "sampled set is not a matching of G");
        ++it->second;
      }
      const double expected = static_cast<double>(options.draws) / static_cast<double>(all.size());
      double stat = 0;
      for (const auto& [m, n] : hist) stat += (n - expected) * (n - expected) / expected;
      double p = all.size() > 1 ? chi_squared_p_value(stat, static_cast<double>(all.size() - 1)) : 1.0;
      if (p < options.alpha) bad.push_back("chi-squared rejects uniformity");
      if (matching_probability(c.h, c.apex, all.front()) != Rational(Integer(1), Integer(all.size()))) {
        bad.push_back("matching probability is not 1/N");
      }
      std::ostringstream detail;
      detail << "matchings=" << all.size() << " chi2=" << stat << " p=" << p;
      for (const auto& b : bad) detail << "; " << b;
      rep.add(c.name, bad.empty(), detail.str());
    });
  }
  return rep;
}

}  // namespace octa
