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

#include "json.hpp"
#include "octa/suite.hpp"

namespace octa {

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct VerifyReport {
  std::string title;
  std::vector<CheckLine> lines;

  void add(std::string name, bool pass, std::string detail = {});
  bool pass() const { return failures() == 0; }
  std::size_t failures() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

VerifyReport verify_main_theorem(const std::vector<SuiteCase>& cases);
VerifyReport verify_renewal(const std::vector<SuiteCase>& cases, std::size_t instances, std::uint64_t seed);
VerifyReport verify_condensation_suite(const std::vector<SuiteCase>& cases);
VerifyReport verify_recovery(const std::vector<SuiteCase>& cases);
VerifyReport verify_heights(const std::vector<SuiteCase>& cases);

struct SamplerCheckOptions {
  std::size_t draws = 20000;
  std::uint64_t seed = 1;
  double alpha = 0.001;
  std::uint64_t max_matchings = 64;
};
VerifyReport verify_sampler(const std::vector<SuiteCase>& cases, const SamplerCheckOptions& options);

// Upper tail of the chi-squared distribution.
double chi_squared_p_value(double statistic, double degrees_of_freedom);

}  // namespace octa
