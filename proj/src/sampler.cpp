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

#include "octa/sampler.hpp"

#include <algorithm>
#include <set>

#include "octa/error.hpp"
#include "octa/graph.hpp"

namespace octa {

bool exact_bernoulli(const Integer& num, const Integer& den, std::mt19937_64& rng) {
  if (den <= 0 || num < 0 || num > den) fail(Errc::InvariantViolation, "probability outside [0,1]");
  if (num == den) return true;
  Integer rem = num;
  Integer digit;
  Integer chunk;
  for (;;) {
    rem <<= 64;
    mpz_fdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t());
    std::uint64_t u = rng();
    mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    if (chunk < digit) return true;
    if (chunk > digit) return false;
    if (rem == 0) return false;
  }
}

Sampler::Sampler(const HeightFunction& h, const LatticePoint& apex, std::map<FacePoint, Integer> weights)
    : apex_(apex) {
  require_valid(h);
  if (!apex.on_lattice()) fail(Errc::ParityViolation, "apex " + to_string(apex) + " has odd n+i+j");
  if (h(apex.i, apex.j) > apex.n) fail(Errc::ApexNotAbove, "apex " + to_string(apex) + " is below the surface");
  if (h(apex.i, apex.j) == apex.n) return;

  std::map<FacePoint, int> height;
  auto ht = [&](const FacePoint& f) {
    auto it = height.find(f);
    return it == height.end() ? h(f) : it->second;
  };
  auto x = [&](const FacePoint& f) -> Integer {
    auto it = weights.find(f);
    return it == weights.end() ? Integer(1) : it->second;
  };
  std::map<int, std::set<FacePoint>> by_height;
  for (const FacePoint& f : closed_faces(h, apex)) by_height[h(f)].insert(f);

  while (!by_height.empty()) {
    auto bucket = by_height.begin();
    const int level = bucket->first;
    std::optional<FacePoint> site;
    for (const FacePoint& f : bucket->second) {
      if (ht({f.i + 1, f.j}) == level + 1 && ht({f.i - 1, f.j}) == level + 1 && ht({f.i, f.j + 1}) == level + 1 &&
          ht({f.i, f.j - 1}) == level + 1) {
        site = f;
        break;
      }
    }
    if (!site) fail(Errc::NoLocalMinimum, "no local minimum at height " + std::to_string(level));
    const FacePoint f = *site;
    ElevationStep s;
    s.face = f;
    s.height = level;
    s.x = x(f);
    s.x_east = x({f.i + 1, f.j});
    s.x_west = x({f.i - 1, f.j});
    s.x_north = x({f.i, f.j + 1});
    s.x_south = x({f.i, f.j - 1});
    Integer top = s.x_east * s.x_west + s.x_north * s.x_south;
    if (s.x == 0 || top % s.x != 0) fail(Errc::NonIntegerX, "x at " + to_string(f) + " is not an integer");
    s.x_new = top / s.x;
    weights[f] = s.x_new;
    steps_.push_back(s);

    bucket->second.erase(f);
    if (bucket->second.empty()) by_height.erase(bucket);
    height[f] = level + 2;
    if (level + 2 < p_value(apex, f)) by_height[level + 2].insert(f);
  }
}

std::vector<EdgeLabel> Sampler::draw(std::mt19937_64& rng) const {
  std::set<EdgeLabel> m;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    const int i = it->face.i;
    const int j = it->face.j;
    const int h = it->height;
    const EdgeLabel a = make_label(i + 1 + h, j, Letter::a);
    const EdgeLabel b = make_label(i, j + 1 + h, Letter::b);
    const EdgeLabel c = make_label(i - 1 - h, j, Letter::c);
    const EdgeLabel d = make_label(i, j - 1 - h, Letter::d);
    int present = 0;
    for (const EdgeLabel& e : {a, b, c, d}) present += m.count(e) ? 1 : 0;
    if (present == 1) continue;
    if (present == 2) {
      for (const EdgeLabel& e : {a, b, c, d}) m.erase(e);
      continue;
    }
    if (present != 0) fail(Errc::InvariantViolation, "more than two local edges at " + to_string(it->face));
    if (exact_bernoulli(it->x_north * it->x_south, it->x * it->x_new, rng)) {
      m.insert(a);
      m.insert(c);
    } else {
      m.insert(b);
      m.insert(d);
    }
  }
  return {m.begin(), m.end()};
}

std::vector<EdgeLabel> sample_matching(const HeightFunction& h, const LatticePoint& apex, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return Sampler(h, apex).draw(rng);
}

Rational matching_probability(const HeightFunction& h, const LatticePoint& apex, const Matching& m) {
  require_valid(h);
  if (apex.on_lattice() && h(apex.i, apex.j) == apex.n) {
    if (!m.empty()) fail(Errc::NotAMatching, "the base case has only the empty matching");
    return Rational(1);
  }
  Graph g = build_subgraph(h, apex);
  require_matching(g, m);
  Rational p(Integer(1), Integer(count_matchings(g)));
  p.canonicalize();
  return p;
}

}  // namespace octa
