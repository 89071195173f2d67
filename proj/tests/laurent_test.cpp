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

#include <random>

#include "doctest.h"
#include "octa/error.hpp"
#include "octa/laurent.hpp"

using namespace octa;

namespace {

LaurentPoly x(int i, int j) { return LaurentPoly::var(VarId::face(i, j)); }
LaurentPoly y(int i, int j, Letter q) { return LaurentPoly::var(VarId::edge(make_label(i, j, q))); }

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> expo(-3, 3);
  std::uniform_int_distribution<int> which(0, 4);
  const std::vector<VarId> vars = {VarId::face(0, 0), VarId::face(1, -1), VarId::face(-2, 3),
                                   VarId::edge(make_label(0, 1, Letter::a)),
                                   VarId::edge(make_label(2, 1, Letter::d))};
  LaurentPoly p;
  int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<Monomial::Entry> entries;
    for (const VarId& v : vars) {
      if (which(rng) < 2) entries.push_back({v, expo(rng)});
    }
    p.add_term(Monomial::from_entries(entries), Integer(coeff(rng)));
  }
  return p;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvariantViolation;
}

}  // namespace

TEST_CASE("canonical form drops zero terms") {
  LaurentPoly p = x(0, 0) + x(1, 0) - x(0, 0);
  CHECK(p == x(1, 0));
  CHECK(p.term_count() == 1);
  CHECK((x(0, 0) - x(0, 0)).is_zero());
  CHECK((x(0, 0) * x(0, 0).pow(-1)) == LaurentPoly(1));
}

TEST_CASE("difference of squares") {
  LaurentPoly a = x(0, 0), b = x(1, 1);
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK(exact_div(a * a - b * b, a - b) == a + b);
}

TEST_CASE("division by a monomial is always exact in the Laurent ring") {
  LaurentPoly q = exact_div(x(0, 0).pow(2), x(0, 1));
  CHECK(q == x(0, 0).pow(2) * x(0, 1).pow(-1));
  CHECK(q.to_text() == "x[0,0]^2 * x[0,1]^-1");
}

TEST_CASE("inexact and zero division") {
  LaurentPoly a = x(0, 0), b = x(1, 1);
  CHECK(code_of([&] { exact_div(a * a + b, a + b); }) == Errc::DivisionNotExact);
  CHECK(code_of([&] { exact_div(a, LaurentPoly()); }) == Errc::DivisionByZero);
  CHECK(code_of([&] { exact_div(LaurentPoly(3), LaurentPoly(2)); }) == Errc::DivisionNotExact);
}

TEST_CASE("substitution") {
  LaurentPoly p = x(0, 0) * x(1, 0) + x(0, 0).pow(-1);
  Assignment as{{VarId::face(0, 0), x(2, 0) + x(3, 0)}};
  // (x2+x3) x1 + 1/(x2+x3) is not Laurent.
  CHECK(code_of([&] { substitute(p, as); }) == Errc::DivisionNotExact);
  Assignment mono{{VarId::face(0, 0), LaurentPoly(2) * x(5, 5).pow(2)}};
  LaurentPoly q = substitute(x(0, 0) * x(1, 0), mono);
  CHECK(q == LaurentPoly(2) * x(5, 5).pow(2) * x(1, 0));
  Assignment zero{{VarId::face(0, 0), LaurentPoly()}};
  CHECK(code_of([&] { substitute(p, zero); }) == Errc::NegativePowerOfZero);
}

TEST_CASE("specialization and coefficient profile") {
  LaurentPoly p = x(0, 0) * y(0, 1, Letter::a) + x(0, 0).pow(-1) * x(1, 0) + LaurentPoly(3) * x(2, 0).pow(2);
  CoefficientProfile prof = coefficient_profile(p);
  CHECK(prof.terms == 3);
  CHECK_FALSE(prof.all_coefficients_one());
  CHECK(prof.face_min == -1);
  CHECK(prof.face_max == 2);
  CHECK(prof.edge_max == 1);
  CHECK(specialize_to_one(p, true, true) == LaurentPoly(5));
  CHECK(specialize_to_one(p, true, false) == y(0, 1, Letter::a) + 4);
  CHECK(p.sum_of_coefficients() == 5);
}

TEST_CASE("text and JSON forms parse back") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    LaurentPoly p = random_poly(rng, 5);
    CHECK(parse_laurent(p.to_text()) == p);
    CHECK(laurent_from_json(p.to_json()) == p);
  }
  CHECK(code_of([] { parse_laurent("x[0,0] +"); }) == Errc::Parse);
  CHECK(code_of([] { parse_laurent("q[1,2]"); }) == Errc::Parse);
}

TEST_CASE("ring axioms and exact division on random polynomials") {
  std::mt19937_64 rng(20261018);
  for (int k = 0; k < 2000; ++k) {
    LaurentPoly p = random_poly(rng, 4), q = random_poly(rng, 4), r = random_poly(rng, 3);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK(p * LaurentPoly(1) == p);
    if (!q.is_zero()) CHECK(exact_div(p * q, q) == p);
  }
}
