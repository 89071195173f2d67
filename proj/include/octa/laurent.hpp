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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "octa/lattice.hpp"

namespace octa {

using Integer = mpz_class;
using Rational = mpq_class;

// Face variable x(i,j) or edge variable a/b/c/d(i,j). The packed key orders
// face variables before edge variables, then by (i, j, letter).
class VarId {
 public:
  static VarId face(int i, int j);
  static VarId face(const FacePoint& f) { return face(f.i, f.j); }
  static VarId edge(const EdgeLabel& e);

  bool is_face() const { return (key_ >> 62) == 0; }
  bool is_edge() const { return !is_face(); }
  int i() const;
  int j() const;
  Letter letter() const;
  FacePoint face_point() const { return FacePoint{i(), j()}; }
  EdgeLabel edge_label() const { return EdgeLabel{i(), j(), letter()}; }
  std::uint64_t key() const { return key_; }
  std::string name() const;

  auto operator<=>(const VarId&) const = default;

 private:
  explicit VarId(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

class Monomial {
 public:
  using Entry = std::pair<VarId, int>;

  Monomial() = default;
  static Monomial var(VarId v, int exponent = 1);
  // Entries may be unsorted or contain zeros; they are canonicalized.
  static Monomial from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  int degree() const { return degree_; }
  bool is_one() const { return entries_.empty(); }
  int exponent(VarId v) const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int e) const;
  // Componentwise minimum of exponents (absent variables count as 0).
  static Monomial gcd_floor(const Monomial& a, const Monomial& b);
  // True if every exponent of this is <= the corresponding exponent of o.
  bool divides(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
  // Graded lexicographic order.
  std::strong_ordering operator<=>(const Monomial& o) const;

 private:
  std::vector<Entry> entries_;
  int degree_ = 0;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer, std::greater<>>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly var(VarId v, int exponent = 1);
  static LaurentPoly term(const Monomial& m, const Integer& c);

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Integer& leading_coefficient() const { return terms_.begin()->second; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator*(const Monomial& m) const;
  LaurentPoly pow(int e) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  void add_term(const Monomial& m, const Integer& c);
  // Value with every variable set to 1.
  Integer sum_of_coefficients() const;
  // Componentwise minimum over the support (absent variables count as 0).
  Monomial min_monomial() const;

  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
// Throws DivisionByZero or DivisionNotExact.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

using Assignment = std::map<VarId, LaurentPoly>;
// Simultaneous substitution. Negative powers of non-monomial values are
// cleared by exact division; throws NegativePowerOfZero or DivisionNotExact.
LaurentPoly substitute(const LaurentPoly& p, const Assignment& assignment);
// Sets every variable of the selected kinds to 1.
LaurentPoly specialize_to_one(const LaurentPoly& p, bool faces, bool edges);

struct CoefficientProfile {
  std::size_t terms = 0;
  std::map<Integer, std::size_t> coefficients;
  int face_min = 0;
  int face_max = 0;
  int edge_min = 0;
  int edge_max = 0;
  bool all_coefficients_one() const;
};
CoefficientProfile coefficient_profile(const LaurentPoly& p);

LaurentPoly parse_laurent(const std::string& text);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace octa
