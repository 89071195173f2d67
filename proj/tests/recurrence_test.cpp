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

#include "doctest.h"
#include "octa/error.hpp"
#include "octa/recurrence.hpp"
#include "octa/suite.hpp"

using namespace octa;

namespace {

LaurentPoly x(int i, int j) { return LaurentPoly::var(VarId::face(i, j)); }
LaurentPoly y(int i, int j, Letter q) { return LaurentPoly::var(VarId::edge(make_label(i, j, q))); }

// g(m) g(m-k) = g(m-a) g(m-k+a) + g(m-b) g(m-k+b), in machine integers.
std::vector<long long> somos_oracle(int k, int a, int b, int count) {
  std::vector<long long> g(count, 1);
  for (int m = k; m < count; ++m) g[m] = (g[m - a] * g[m - k + a] + g[m - b] * g[m - k + b]) / g[m - k];
  return g;
}

}  // namespace

TEST_CASE("points on the surface evaluate to their variable") {
  HeightFunction h = builtin_height(Family::Aztec);
  EvalContext ctx(h);
  CHECK(eval_f(ctx, {0, 0, 0}) == x(0, 0));
  CHECK(eval_f(ctx, {-1, 0, 1}) == x(0, 1));
  CHECK_THROWS_AS(eval_f(ctx, {-2, 0, 0}), Error);
}

TEST_CASE("one recurrence step on the Aztec surface") {
  HeightFunction h = builtin_height(Family::Aztec);
  EvalContext ctx(h);
  LaurentPoly expect = (y(0, 1, Letter::a) * y(0, 1, Letter::c) * x(0, 2) * x(0, 0) +
                        y(0, 1, Letter::b) * y(0, 1, Letter::d) * x(1, 1) * x(-1, 1)) *
                       x(0, 1).pow(-1);
  CHECK(eval_f(ctx, {1, 0, 1}) == expect);
  CHECK(count_terms(ctx, {1, 0, 1}) == 2);
}

TEST_CASE("running example golden value") {
  EvalContext ctx(running_example_height());
  LaurentPoly expect = parse_laurent(
      "a[3,0]*c[-1,0]*a[2,-1]*c[0,-1]*x[1,-2]*x[1,-1]^-1*x[1,1]"
      " + a[3,0]*c[-1,0]*b[1,0]*d[1,-2]*x[1,0]^-1*x[0,-1]*x[2,-1]*x[1,-1]^-1*x[1,1]"
      " + b[1,2]*d[1,-2]*a[1,0]*c[-1,0]*x[0,-1]*x[0,1]*x[0,0]^-1*x[2,0]*x[1,0]^-1"
      " + b[1,2]*d[1,-2]*b[0,1]*d[0,-1]*x[-1,0]*x[0,0]^-1*x[2,0]");
  CHECK(eval_f(ctx, {3, 1, 0}) == expect);
}

TEST_CASE("Aztec counts are powers of two") {
  HeightFunction h = builtin_height(Family::Aztec);
  EvalContext ctx(h);
  for (int n = 1; n <= 5; ++n) {
    LatticePoint p{n, 0, n % 2};
    Integer expect = Integer(1) << (n * (n + 1) / 2);
    CHECK(count_all_ones(h, p) == expect);
    if (n <= 4) CHECK(count_terms(ctx, p) == expect.get_ui());
  }
}

TEST_CASE("all coefficients equal one") {
  for (const SuiteCase& c : family_suite(1, 14)) {
    CAPTURE(c.name);
    EvalContext ctx(c.h);
    LaurentPoly f = eval_f(ctx, c.apex);
    CHECK(coefficient_profile(f).all_coefficients_one());
    CHECK(Integer(static_cast<unsigned long>(f.term_count())) == count_all_ones(c.h, c.apex));
  }
}

TEST_CASE("edge constants and face specialization") {
  HeightFunction h = builtin_height(Family::Aztec);
  EvalOptions opt;
  opt.faces_to_one = true;
  opt.edges = EdgeConstants{2, 1, 3, 1};
  EvalContext ctx(h, opt);
  // ac + bd with a=2, c=3.
  CHECK(eval_f(ctx, {1, 0, 1}) == LaurentPoly(7));
}

TEST_CASE("Gale-Robinson integer sequences") {
  auto check = [](int k, int a, int b, int count) {
    std::vector<Integer> seq = gale_robinson_sequence(k, a, b, 1, 1, count);
    std::vector<long long> oracle = somos_oracle(k, a, b, count);
    REQUIRE(seq.size() == oracle.size());
    for (int t = 0; t < count; ++t) CHECK(seq[t] == Integer(static_cast<long>(oracle[t])));
  };
  check(4, 1, 2, 16);
  check(5, 1, 2, 16);
  check(6, 1, 3, 14);
  std::vector<Integer> s4 = gale_robinson_sequence(4, 1, 2, 1, 1, 10);
  CHECK(s4.back() == 314);
}

TEST_CASE("counts along the Gale-Robinson line match the sequence") {
  for (int k : {4, 5}) {
    std::vector<long long> oracle = somos_oracle(k, 1, 2, k + 6);
    HeightFunction h = gale_robinson_height(k, 1, 2);
    EvalContext ctx(h);
    for (int m = 1; m <= 5; ++m) {
      LatticePoint p = gale_robinson_point(k, 1, 2, m);
      CHECK(gale_robinson_index(k, 1, 2, p) == m);
      CHECK(count_terms(ctx, p) == static_cast<std::size_t>(oracle[m + k - 1]));
    }
  }
}

TEST_CASE("memo is shared across calls") {
  EvalContext ctx(builtin_height(Family::Fortress));
  eval_f(ctx, {4, 0, 0});
  std::size_t after = ctx.memo_size();
  CHECK(after > 0);
  eval_f(ctx, {2, 0, 0});
  CHECK(ctx.memo_size() == after);
}
