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

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "octa/lattice.hpp"
#include "octa/laurent.hpp"

namespace octa {

struct EdgeConstants {
  Integer a = 1;
  Integer b = 1;
  Integer c = 1;
  Integer d = 1;
};

struct EvalOptions {
  bool faces_to_one = false;
  std::optional<EdgeConstants> edges;
};

// Memoized evaluation of f over one initial surface. Safe for concurrent
// eval calls: reads take a shared lock, memo writes an exclusive one.
class EvalContext {
 public:
  explicit EvalContext(HeightFunction h, EvalOptions options = {});

  const HeightFunction& height() const { return h_; }
  const EvalOptions& options() const { return options_; }
  LaurentPoly eval(const LatticePoint& point);
  std::size_t memo_size() const;

 private:
  using Value = std::shared_ptr<const LaurentPoly>;
  Value initial(int i, int j) const;
  LaurentPoly edge(int i, int j, Letter q) const;
  Value lookup(const LatticePoint& p) const;

  HeightFunction h_;
  EvalOptions options_;
  mutable std::shared_mutex mu_;
  std::map<LatticePoint, Value> memo_;
};

LaurentPoly eval_f(EvalContext& ctx, const LatticePoint& point);
std::size_t count_terms(EvalContext& ctx, const LatticePoint& point);
// f at the point with every variable set to 1, computed with integer values.
Integer count_all_ones(const HeightFunction& h, const LatticePoint& point);

// g(0..N-1) with g(0..k-1) = 1; throws NonIntegerStep on an inexact division.
std::vector<Integer> gale_robinson_sequence(int k, int a, int b, const Integer& r, const Integer& s,
                                            int count);
// (kn + (2a-k)i + (2b-k)j) / 2.
int gale_robinson_index(int k, int a, int b, const LatticePoint& p);
// A lattice point of index m whose cone has the fewest upper points.
LatticePoint gale_robinson_point(int k, int a, int b, int m);
// Edge constants realizing the coefficients r (on a*c) and s (on b*d).
EdgeConstants gale_robinson_constants(const Integer& r, const Integer& s);

}  // namespace octa
