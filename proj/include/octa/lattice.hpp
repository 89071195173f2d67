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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace octa {

// Floor division and modulus for possibly negative operands.
inline int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline int floor_mod(int a, int b) { return a - b * floor_div(a, b); }
inline bool is_even(int v) { return (v & 1) == 0; }

struct LatticePoint {
  int n = 0;
  int i = 0;
  int j = 0;
  auto operator<=>(const LatticePoint&) const = default;
  bool on_lattice() const { return is_even(n + i + j); }
};

struct FacePoint {
  int i = 0;
  int j = 0;
  auto operator<=>(const FacePoint&) const = default;
};

enum class Letter : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };
char letter_char(Letter q);
Letter letter_from_char(char c);

struct EdgeLabel {
  int i = 0;
  int j = 0;
  Letter q = Letter::a;
  auto operator<=>(const EdgeLabel&) const = default;
  bool valid() const { return !is_even(i + j); }
};

std::string to_string(const LatticePoint& p);
std::string to_string(const FacePoint& f);
std::string to_string(const EdgeLabel& e);

// Throws ParityViolation unless n + i + j is even.
LatticePoint make_point(int n, int i, int j);
EdgeLabel make_label(int i, int j, Letter q);

int p_value(const LatticePoint& apex, const FacePoint& face);
inline int l1_distance(const FacePoint& a, const FacePoint& b) {
  return (a.i > b.i ? a.i - b.i : b.i - a.i) + (a.j > b.j ? a.j - b.j : b.j - a.j);
}

enum class ConeSide { Inner, Boundary, Outside };
ConeSide cone_membership(const LatticePoint& apex, const LatticePoint& point);

// Inclusive rectangle of faces.
struct Window {
  int i_lo = 0;
  int i_hi = 0;
  int j_lo = 0;
  int j_hi = 0;
  bool contains(const FacePoint& f) const {
    return f.i >= i_lo && f.i <= i_hi && f.j >= j_lo && f.j <= j_hi;
  }
};

enum class Family { Aztec, Fortress, Douglass, Blum };
std::string family_name(Family f);

struct BuiltinBase {
  Family family;
};
struct GaleRobinsonBase {
  int k;
  int a;
  int b;
};
// h(i,j) = table[i mod p1][j mod p2] + c1*floor(i/p1) + c2*floor(j/p2).
struct PeriodicBase {
  int p1 = 1;
  int p2 = 1;
  std::vector<std::vector<int>> table;
  int c1 = 0;
  int c2 = 0;
};
using Base = std::variant<BuiltinBase, GaleRobinsonBase, PeriodicBase>;

class HeightFunction {
 public:
  explicit HeightFunction(Base base);

  int operator()(int i, int j) const;
  int operator()(const FacePoint& f) const { return (*this)(f.i, f.j); }
  int raw(int i, int j) const;

  const Base& base() const { return base_; }
  const std::map<FacePoint, int>& overrides() const { return overrides_; }
  const std::optional<LatticePoint>& truncation() const { return truncation_; }

  HeightFunction with_override(const FacePoint& f, int value) const;
  HeightFunction truncated(const LatticePoint& apex) const;

  // Linear lower bound h(i,j) >= -(slope_num/slope_den)(|i|+|j|) - offset.
  struct Bound {
    long long slope_num;
    long long slope_den;
    long long offset;
  };
  Bound lower_bound() const;
  bool certified_proper() const;
  // Every face with h < p(apex) lies strictly inside this L1 radius.
  int scan_radius(const LatticePoint& apex) const;

 private:
  int base_value(int i, int j) const;

  Base base_;
  std::map<FacePoint, int> overrides_;
  std::optional<LatticePoint> truncation_;
};

struct ValidationReport {
  bool valid = true;
  bool proper = true;
  bool evaluable = true;
  std::vector<std::string> problems;
};

ValidationReport validate_height(const HeightFunction& h, const Window& window);
// Structural checks independent of any window: base consistency and overrides.
ValidationReport validate_structure(const HeightFunction& h);
void require_valid(const HeightFunction& h);

HeightFunction builtin_height(Family family);
HeightFunction builtin_height(const std::string& name);
HeightFunction gale_robinson_height(int k, int a, int b);
HeightFunction truncate_height(const HeightFunction& h, const LatticePoint& apex);

// Faces (i,j) with h(i,j) < p(i,j), sorted lexicographically.
std::vector<FacePoint> closed_faces(const HeightFunction& h, const LatticePoint& apex);
// {(n,i,j) in L : h(i,j) < n <= p(i,j)} sorted by (n,i,j).
std::vector<LatticePoint> cone_upper_points(const HeightFunction& h, const LatticePoint& apex);
std::size_t cone_upper_count(const HeightFunction& h, const LatticePoint& apex);
void require_above(const HeightFunction& h, const LatticePoint& apex);

nlohmann::json height_to_json(const HeightFunction& h);
HeightFunction height_from_json(const nlohmann::json& j);
HeightFunction load_height_file(const std::string& path);

}  // namespace octa
