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

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "octa/laurent.hpp"
#include "octa/lattice.hpp"
#include "octa/matching.hpp"

namespace octa {

struct ElevationStep {
  FacePoint face;
  int height = 0;  // before elevation
  Integer x;       // before elevation
  Integer x_new;
  Integer x_east;
  Integer x_west;
  Integer x_north;
  Integer x_south;
};

// True with probability num/den, reading the uniform variate 64 bits at a time.
bool exact_bernoulli(const Integer& num, const Integer& den, std::mt19937_64& rng);

class Sampler {
 public:
  // Face weights default to 1.
  Sampler(const HeightFunction& h, const LatticePoint& apex, std::map<FacePoint, Integer> weights = {});

  const std::vector<ElevationStep>& steps() const { return steps_; }
  std::vector<EdgeLabel> draw(std::mt19937_64& rng) const;

 private:
  LatticePoint apex_;
  std::vector<ElevationStep> steps_;
};

std::vector<EdgeLabel> sample_matching(const HeightFunction& h, const LatticePoint& apex, std::uint64_t seed);
Rational matching_probability(const HeightFunction& h, const LatticePoint& apex, const Matching& m);

}  // namespace octa
