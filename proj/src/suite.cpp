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

#include "octa/suite.hpp"

#include <filesystem>
#include <random>
#include <set>

#include "octa/error.hpp"

namespace octa {

HeightFunction running_example_height() {
  constexpr int kPeriod = 24;
  PeriodicBase base;
  base.p1 = kPeriod;
  base.p2 = kPeriod;
  base.table.assign(kPeriod, std::vector<int>(kPeriod, 0));
  for (int i = 0; i < kPeriod; ++i) {
    for (int j = 0; j < kPeriod; ++j) {
      int t = (i + j) % kPeriod;
      base.table[i][j] = t < kPeriod / 2 ? t : kPeriod - t;
    }
  }
  return HeightFunction(base);
}

std::vector<NamedHeight> standard_heights() {
  return {
      {"aztec", builtin_height(Family::Aztec)},
      {"fortress", builtin_height(Family::Fortress)},
      {"douglass", builtin_height(Family::Douglass)},
      {"blum", builtin_height(Family::Blum)},
      {"somos4", gale_robinson_height(4, 1, 2)},
      {"somos5", gale_robinson_height(5, 1, 2)},
  };
}

HeightFunction resolve_height(const std::string& name_or_path) {
  if (name_or_path == "running") return running_example_height();
  for (const NamedHeight& nh : standard_heights()) {
    if (nh.name == name_or_path) return nh.h;
  }
  if (std::filesystem::exists(name_or_path)) return load_height_file(name_or_path);
  fail(Errc::UnknownFamily, "unknown height '" + name_or_path + "'");
}

std::vector<SuiteCase> apex_cases(const NamedHeight& nh, int radius, std::size_t max_cone) {
  std::vector<SuiteCase> out;
  for (int i = -radius; i <= radius; ++i) {
    for (int j = -radius; j <= radius; ++j) {
      for (int n = nh.h(i, j) + 2;; n += 2) {
        LatticePoint apex{n, i, j};
        if (cone_upper_count(nh.h, apex) > max_cone) break;
        out.push_back(SuiteCase{nh.name + to_string(apex), nh.h, apex});
      }
    }
  }
  return out;
}

std::vector<SuiteCase> family_suite(int radius, std::size_t max_cone) {
  std::vector<SuiteCase> out;
  for (const NamedHeight& nh : standard_heights()) {
    auto cases = apex_cases(nh, radius, max_cone);
    out.insert(out.end(), cases.begin(), cases.end());
  }
  return out;
}

std::vector<SuiteCase> depth_suite(const std::vector<NamedHeight>& heights, int radius, int depth) {
  std::vector<SuiteCase> out;
  for (const NamedHeight& nh : heights) {
    for (int i = -radius; i <= radius; ++i) {
      for (int j = -radius; j <= radius; ++j) {
        LatticePoint apex{nh.h(i, j) + depth, i, j};
        out.push_back(SuiteCase{nh.name + to_string(apex), nh.h, apex});
      }
    }
  }
  return out;
}

std::vector<SuiteCase> perturbed_suite(std::size_t count, std::uint64_t seed, std::size_t max_cone) {
  std::mt19937_64 rng(seed);
  const std::vector<NamedHeight> bases = {
      {"aztec", builtin_height(Family::Aztec)},
      {"fortress", builtin_height(Family::Fortress)},
      {"douglass", builtin_height(Family::Douglass)},
      {"blum", builtin_height(Family::Blum)},
      {"running", running_example_height()},
  };
  std::uniform_int_distribution<int> pick_base(0, static_cast<int>(bases.size()) - 1);
  std::uniform_int_distribution<int> coord(-2, 2);
  std::vector<SuiteCase> out;
  while (out.size() < count) {
    const NamedHeight& nh = bases[pick_base(rng)];
    FacePoint f{coord(rng), coord(rng)};
    int v = nh.h(f);
    int up = 0;
    int down = 0;
    for (FacePoint g : {FacePoint{f.i + 1, f.j}, FacePoint{f.i - 1, f.j}, FacePoint{f.i, f.j + 1},
                        FacePoint{f.i, f.j - 1}}) {
      (nh.h(g) > v ? up : down) += 1;
    }
    int delta = up == 4 ? 2 : (down == 4 ? -2 : 0);
    if (delta == 0) continue;
    HeightFunction h = nh.h.with_override(f, v + delta);
    std::vector<LatticePoint> apexes;
    for (int i = f.i - 2; i <= f.i + 2; ++i) {
      for (int j = f.j - 2; j <= f.j + 2; ++j) {
        for (int n = h(i, j) + 2;; n += 2) {
          LatticePoint apex{n, i, j};
          if (cone_upper_count(h, apex) > max_cone) break;
          if (h(f) < p_value(apex, f)) apexes.push_back(apex);
        }
      }
    }
    if (apexes.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, apexes.size() - 1);
    LatticePoint apex = apexes[pick(rng)];
    out.push_back(SuiteCase{nh.name + "+" + to_string(f) + (delta > 0 ? "up" : "down") + to_string(apex), h, apex});
  }
  return out;
}

std::vector<SuiteCase> distinct_graphs(const std::vector<SuiteCase>& cases) {
  std::set<std::vector<int>> seen;
  std::vector<SuiteCase> out;
  for (const SuiteCase& c : cases) {
    std::set<FacePoint> near;
    for (const FacePoint& f : closed_faces(c.h, c.apex)) {
      for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) near.insert(FacePoint{f.i + di, f.j + dj});
      }
    }
    std::vector<int> sig;
    for (const FacePoint& f : near) {
      sig.push_back(f.i - c.apex.i);
      sig.push_back(f.j - c.apex.j);
      sig.push_back(c.h(f) - c.apex.n);
    }
    if (seen.insert(sig).second) out.push_back(c);
  }
  return out;
}

}  // namespace octa
