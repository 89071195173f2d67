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
#include "octa/matching.hpp"
#include "octa/recurrence.hpp"
#include "octa/suite.hpp"

using namespace octa;

namespace {

std::uint64_t count_for(const HeightFunction& h, const LatticePoint& p) {
  return count_matchings(build_subgraph(h, p));
}

}  // namespace

TEST_CASE("matching counts of the classical families") {
  HeightFunction az = builtin_height(Family::Aztec);
  CHECK(count_for(az, {1, 0, 1}) == 2);
  CHECK(count_for(az, {2, 0, 0}) == 8);
  CHECK(count_for(az, {3, 0, 1}) == 64);
  CHECK(count_for(az, {4, 0, 0}) == 1024);
  HeightFunction fo = builtin_height(Family::Fortress);
  CHECK(count_for(fo, {2, 0, 0}) == 5);
  CHECK(count_for(fo, {3, 1, 0}) == 25);
  CHECK(count_for(fo, {3, 0, 1}) == 50);
  CHECK(count_for(fo, {4, 0, 0}) == 625);
  HeightFunction dg = builtin_height(Family::Douglass);
  CHECK(count_for(dg, {2, 0, 0}) == 4);
  CHECK(count_for(dg, {4, 0, 0}) == 256);
  HeightFunction bl = builtin_height(Family::Blum);
  CHECK(count_for(bl, {3, 0, 1}) == 27);
}

TEST_CASE("matching polynomial equals the recurrence value") {
  for (const SuiteCase& c : family_suite(1, 14)) {
    CAPTURE(c.name);
    EvalContext ctx(c.h);
    Graph g = build_subgraph(c.h, c.apex);
    LaurentPoly m = matching_polynomial(g);
    CHECK(m == eval_f(ctx, c.apex));
    CoefficientProfile prof = coefficient_profile(m);
    CHECK(prof.all_coefficients_one());
    CHECK(prof.face_min >= -1);
    CHECK(prof.face_max <= 3);
    CHECK(prof.edge_min >= 0);
    CHECK(prof.edge_max <= 1);
  }
}

TEST_CASE("enumeration yields distinct perfect matchings") {
  Graph g = build_subgraph(builtin_height(Family::Blum), {3, 0, 1});
  std::vector<Matching> all = enumerate_matchings(g);
  CHECK(all.size() == 27);
  std::set<Matching> distinct(all.begin(), all.end());
  CHECK(distinct.size() == all.size());
  for (const Matching& m : all) {
    CHECK(is_matching(g, m));
    CHECK(m.size() * 2 == g.vertices.size());
    CHECK(complete_matching(g, matching_labels(g, m)) == m);
  }
}

TEST_CASE("non-matchings are rejected") {
  Graph g = build_subgraph(builtin_height(Family::Aztec), {2, 0, 0});
  Matching m = enumerate_matchings(g).front();
  Matching short_m(m.begin(), m.end() - 1);
  CHECK_FALSE(is_matching(g, short_m));
  CHECK_THROWS_AS(require_matching(g, short_m), Error);
  Matching twice = m;
  twice.back() = twice.front();
  CHECK_FALSE(is_matching(g, twice));
}

TEST_CASE("face exponents follow the used-edge rule") {
  // Both matchings of the order-one diamond use two sides of its only closed face.
  Graph g = build_subgraph(builtin_height(Family::Aztec), {1, 0, 1});
  for (const Matching& m : enumerate_matchings(g)) {
    ExponentVector ev = matching_exponents(g, m);
    CHECK(ev.face_exp.at({0, 1}) == -1);
    int edges = 0;
    for (const auto& [label, e] : ev.edge_exp) edges += e;
    CHECK(edges == 2);
  }
}

TEST_CASE("enumeration limits") {
  Graph g = build_subgraph(builtin_height(Family::Aztec), {4, 0, 0});
  EnumerationLimits lim;
  lim.max_matchings = 100;
  CHECK_THROWS_AS(count_matchings(g, lim), Error);
  try {
    count_matchings(g, lim);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SizeLimitExceeded);
  }
}

TEST_CASE("induced subgraphs keep keys") {
  Graph g = build_subgraph(builtin_height(Family::Aztec), {2, 0, 0});
  std::vector<int> keep = {0, 1, 2, 3};
  Graph sub = induced_subgraph(g, keep);
  CHECK(sub.vertices.size() == 4);
  for (std::size_t v = 0; v < sub.vertices.size(); ++v) CHECK(g.find_vertex(sub.vertices[v].key) >= 0);
}
