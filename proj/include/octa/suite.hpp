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
#include <string>
#include <vector>

#include "octa/lattice.hpp"

namespace octa {

struct NamedHeight {
  std::string name;
  HeightFunction h;
};

struct SuiteCase {
  std::string name;
  HeightFunction h;
  LatticePoint apex;
};

// h(i,j) = |i+j| for |i+j| <= 12, as a periodic zigzag.
HeightFunction running_example_height();

// aztec, fortress, douglass, blum, somos4 = GR(4,1,2), somos5 = GR(5,1,2).
std::vector<NamedHeight> standard_heights();
// A standard height by name, "running", or a JSON file path.
HeightFunction resolve_height(const std::string& name_or_path);

// Apexes (n,i,j) with |i|,|j| <= radius and 0 < |U ∩ C| <= max_cone.
std::vector<SuiteCase> apex_cases(const NamedHeight& nh, int radius, std::size_t max_cone);
std::vector<SuiteCase> family_suite(int radius, std::size_t max_cone);
// One apex per position, at n = h(i,j) + depth.
std::vector<SuiteCase> depth_suite(const std::vector<NamedHeight>& heights, int radius, int depth);
// Builtin heights with one local extremum moved by two, each paired with an apex
// whose closed region contains the moved face.
std::vector<SuiteCase> perturbed_suite(std::size_t count, std::uint64_t seed, std::size_t max_cone);

// Cases whose graphs differ only by translation keep the first representative.
std::vector<SuiteCase> distinct_graphs(const std::vector<SuiteCase>& cases);

}  // namespace octa
