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
#include <sstream>

#include "doctest.h"
#include "octa/error.hpp"
#include "octa/lattice.hpp"
#include "octa/suite.hpp"

using namespace octa;

namespace {

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

TEST_CASE("floor division rounds toward negative infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-8, 2) == -4);
  CHECK(floor_mod(-1, 4) == 3);
  CHECK(floor_mod(5, 4) == 1);
}

TEST_CASE("lattice points need n+i+j even") {
  CHECK(make_point(3, 1, 0).on_lattice());
  CHECK(code_of([] { make_point(1, 0, 0); }) == Errc::ParityViolation);
  CHECK(make_label(0, 1, Letter::a).valid());
  CHECK(code_of([] { make_label(0, 0, Letter::b); }) == Errc::ParityViolation);
}

TEST_CASE("p is the L1 cone profile") {
  LatticePoint apex{5, 1, -1};
  CHECK(p_value(apex, {1, -1}) == 5);
  CHECK(p_value(apex, {3, 0}) == 2);
  CHECK(p_value(apex, {-1, 1}) == 1);
}

TEST_CASE("builtin heights are valid and proper") {
  Window w{-9, 9, -9, 9};
  for (const NamedHeight& nh : standard_heights()) {
    CAPTURE(nh.name);
    ValidationReport rep = validate_height(nh.h, w);
    CHECK(rep.valid);
    CHECK(rep.proper);
    CHECK(nh.h.certified_proper());
  }
  ValidationReport running = validate_height(running_example_height(), Window{-12, 12, -12, 12});
  CHECK(running.valid);
}

TEST_CASE("heights alternate parity with unit steps") {
  for (const NamedHeight& nh : standard_heights()) {
    for (int i = -6; i <= 6; ++i) {
      for (int j = -6; j <= 6; ++j) {
        int v = nh.h(i, j);
        CHECK(floor_mod(v - i - j, 2) == 0);
        CHECK(std::abs(nh.h(i + 1, j) - v) == 1);
        CHECK(std::abs(nh.h(i, j + 1) - v) == 1);
      }
    }
  }
}

TEST_CASE("the running example is |i+j| near the origin") {
  HeightFunction h = running_example_height();
  for (int i = -6; i <= 6; ++i) {
    for (int j = -6; j <= 6; ++j) CHECK(h(i, j) == std::abs(i + j));
  }
}

TEST_CASE("a non-unit step is rejected") {
  HeightFunction h = builtin_height(Family::Aztec).with_override({0, 0}, 4);
  ValidationReport rep = validate_height(h, Window{-3, 3, -3, 3});
  CHECK_FALSE(rep.valid);
  CHECK_FALSE(rep.problems.empty());
}

TEST_CASE("upper cone points on the Aztec surface") {
  HeightFunction h = builtin_height(Family::Aztec);
  // Counted by hand from the table of h.
  CHECK(cone_upper_count(h, {1, 0, 1}) == 1);
  CHECK(cone_upper_count(h, {2, 0, 0}) == 5);
  CHECK(cone_upper_count(h, {3, 0, 1}) == 14);
  for (const LatticePoint& p : cone_upper_points(h, {3, 0, 1})) {
    CHECK(p.on_lattice());
    CHECK(p.n > h(p.i, p.j));
    CHECK(p.n <= p_value({3, 0, 1}, FacePoint{p.i, p.j}));
  }
}

TEST_CASE("closed faces are those strictly under the cone") {
  HeightFunction h = builtin_height(Family::Aztec);
  LatticePoint apex{2, 0, 0};
  std::vector<FacePoint> faces = closed_faces(h, apex);
  CHECK(faces.size() == 5);
  for (const FacePoint& f : faces) CHECK(h(f) < p_value(apex, f));
}

TEST_CASE("apex must lie above the surface") {
  HeightFunction h = builtin_height(Family::Aztec);
  CHECK(code_of([&] { require_above(h, {0, 0, 0}); }) == Errc::ApexNotAbove);
  require_above(h, {2, 0, 0});
}

TEST_CASE("height JSON round trip") {
  for (const NamedHeight& nh : standard_heights()) {
    HeightFunction h = nh.h;
    for (int i = -3; i <= 3; ++i) {
      for (int j = -3; j <= 3; ++j) {
        int v = h(i, j);
        if (h(i + 1, j) > v && h(i - 1, j) > v && h(i, j + 1) > v && h(i, j - 1) > v) {
          h = h.with_override({i, j}, v + 2);
        }
      }
    }
    CHECK_FALSE(h.overrides().empty());
    HeightFunction back = height_from_json(height_to_json(h));
    for (int i = -5; i <= 5; ++i) {
      for (int j = -5; j <= 5; ++j) CHECK(back(i, j) == h(i, j));
    }
  }
}

TEST_CASE("malformed height JSON") {
  CHECK(code_of([] { height_from_json(nlohmann::json::parse(R"({"base":"hexagon"})")); }) ==
        Errc::UnknownFamily);
  CHECK(code_of([] { height_from_json(nlohmann::json::parse(R"({"overrides":[]})")); }) == Errc::Parse);
}

TEST_CASE("truncation keeps values inside the cone") {
  HeightFunction h = builtin_height(Family::Fortress);
  LatticePoint apex{4, 0, 0};
  HeightFunction t = truncate_height(h, apex);
  for (int i = -8; i <= 8; ++i) {
    for (int j = -8; j <= 8; ++j) {
      CHECK(t(i, j) == std::min(h(i, j), p_value(apex, {i, j})));
    }
  }
}

TEST_CASE("upper cone of the running example") {
  std::vector<LatticePoint> pts = cone_upper_points(running_example_height(), {3, 1, 0});
  std::set<LatticePoint> got(pts.begin(), pts.end());
  // Brute scan: h(i,j) < n <= 3 - |i-1| - |j| with n+i+j even.
  std::set<LatticePoint> expect = {{2, 0, 0}, {2, 1, -1}, {3, 1, 0}};
  CHECK(got == expect);
  CHECK(cone_upper_points(running_example_height(), {2, 1, 1}).empty());
}

TEST_CASE("truncated Aztec values") {
  HeightFunction t = truncate_height(builtin_height(Family::Aztec), {3, 0, 1});
  CHECK(t(0, 1) == -1);
  CHECK(t(5, 0) == -3);
}
