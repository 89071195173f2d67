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

#include <map>

#include "doctest.h"
#include "octa/error.hpp"
#include "octa/matching.hpp"
#include "octa/sampler.hpp"
#include "octa/suite.hpp"
#include "octa/verify.hpp"

using namespace octa;

TEST_CASE("exact Bernoulli draws") {
  std::mt19937_64 rng(3);
  int hits = 0;
  const int trials = 40000;
  for (int t = 0; t < trials; ++t) hits += exact_bernoulli(1, 3, rng) ? 1 : 0;
  // 5 sigma around n/3.
  CHECK(std::abs(hits - trials / 3.0) < 5 * std::sqrt(trials * 2.0 / 9.0));
  CHECK_FALSE(exact_bernoulli(0, 7, rng));
  CHECK(exact_bernoulli(7, 7, rng));
  // A probability with a denominator far past 64 bits.
  Integer big = Integer(1) << 200;
  int big_hits = 0;
  for (int t = 0; t < 2000; ++t) big_hits += exact_bernoulli(big / 2, big, rng) ? 1 : 0;
  CHECK(std::abs(big_hits - 1000) < 160);
}

TEST_CASE("forward phase") {
  for (const SuiteCase& c : family_suite(1, 14)) {
    CAPTURE(c.name);
    Sampler s(c.h, c.apex);
    CHECK(s.steps().size() == cone_upper_count(c.h, c.apex));
    for (const ElevationStep& st : s.steps()) {
      CHECK(st.x > 0);
      CHECK(st.x * st.x_new == st.x_north * st.x_south + st.x_east * st.x_west);
    }
  }
}

TEST_CASE("draws are perfect matchings") {
  HeightFunction h = builtin_height(Family::Blum);
  LatticePoint apex{3, 0, 1};
  Graph g = build_subgraph(h, apex);
  Sampler s(h, apex);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    Matching m = complete_matching(g, s.draw(rng));
    CHECK(is_matching(g, m));
  }
}

TEST_CASE("seeded sampling is reproducible") {
  HeightFunction h = builtin_height(Family::Fortress);
  CHECK(sample_matching(h, {4, 0, 0}, 99) == sample_matching(h, {4, 0, 0}, 99));
}

TEST_CASE("uniformity on a fortress") {
  HeightFunction h = builtin_height(Family::Fortress);
  LatticePoint apex{3, 1, 0};
  Graph g = build_subgraph(h, apex);
  std::vector<Matching> all = enumerate_matchings(g);
  REQUIRE(all.size() == 25);
  std::map<Matching, int> hist;
  Sampler s(h, apex);
  std::mt19937_64 rng(5);
  const int draws = 25000;
  for (int t = 0; t < draws; ++t) ++hist[complete_matching(g, s.draw(rng))];
  CHECK(hist.size() == 25);
  double expected = draws / 25.0, stat = 0;
  for (const auto& [m, n] : hist) stat += (n - expected) * (n - expected) / expected;
  CHECK(chi_squared_p_value(stat, 24) > 0.001);
  CHECK(matching_probability(h, apex, all.front()) == Rational(1, 25));
}

TEST_CASE("chi-squared tail") {
  CHECK(chi_squared_p_value(0.0, 3) == doctest::Approx(1.0));
  // Upper 5% point of chi-squared with 1 degree of freedom.
  CHECK(chi_squared_p_value(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-9));
}

TEST_CASE("the base case samples the empty matching") {
  HeightFunction h = builtin_height(Family::Aztec);
  CHECK(sample_matching(h, {0, 0, 0}, 1).empty());
  CHECK(matching_probability(h, {0, 0, 0}, {}) == 1);
}
