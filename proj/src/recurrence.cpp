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

#include "octa/recurrence.hpp"

#include <mutex>

#include "octa/error.hpp"

namespace octa {

EvalContext::EvalContext(HeightFunction h, EvalOptions options)
    : h_(std::move(h)), options_(std::move(options)) {}

EvalContext::Value EvalContext::initial(int i, int j) const {
  if (options_.faces_to_one) return std::make_shared<const LaurentPoly>(1L);
  return std::make_shared<const LaurentPoly>(LaurentPoly::var(VarId::face(i, j)));
}

LaurentPoly EvalContext::edge(int i, int j, Letter q) const {
  if (options_.edges) {
    const EdgeConstants& e = *options_.edges;
    switch (q) {
      case Letter::a: return LaurentPoly(e.a);
      case Letter::b: return LaurentPoly(e.b);
      case Letter::c: return LaurentPoly(e.c);
      case Letter::d: return LaurentPoly(e.d);
    }
  }
  return LaurentPoly::var(VarId::edge(make_label(i, j, q)));
}

EvalContext::Value EvalContext::lookup(const LatticePoint& p) const {
  int hp = h_(p.i, p.j);
  if (p.n == hp) return initial(p.i, p.j);
  std::shared_lock lock(mu_);
  auto it = memo_.find(p);
  if (it == memo_.end()) {
    fail(Errc::InvariantViolation, "missing dependency " + to_string(p));
  }
  return it->second;
}

LaurentPoly EvalContext::eval(const LatticePoint& point) {
  if (!point.on_lattice()) fail(Errc::ParityViolation, "point " + to_string(point));
  int hp = h_(point.i, point.j);
  if (point.n < hp) {
    fail(Errc::PointBelowSurface, to_string(point) + " lies below h=" + std::to_string(hp));
  }
  if (point.n == hp) return *initial(point.i, point.j);
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(point);
    if (it != memo_.end()) return *it->second;
  }
  for (const LatticePoint& q : cone_upper_points(h_, point)) {
    {
      std::shared_lock lock(mu_);
      if (memo_.count(q)) continue;
    }
    const int n = q.n;
    const int i = q.i;
    const int j = q.j;
    Value north = lookup(LatticePoint{n - 1, i, j + 1});
    Value south = lookup(LatticePoint{n - 1, i, j - 1});
    Value east = lookup(LatticePoint{n - 1, i + 1, j});
    Value west = lookup(LatticePoint{n - 1, i - 1, j});
    Value below = lookup(LatticePoint{n - 2, i, j});
    LaurentPoly numerator = edge(i + n - 1, j, Letter::a) * edge(i - n + 1, j, Letter::c) * *north * *south +
                            edge(i, j + n - 1, Letter::b) * edge(i, j - n + 1, Letter::d) * *east * *west;
    auto value = std::make_shared<const LaurentPoly>(exact_div(numerator, *below));
    std::unique_lock lock(mu_);
    memo_.try_emplace(q, std::move(value));
  }
  return *lookup(point);
}

std::size_t EvalContext::memo_size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

LaurentPoly eval_f(EvalContext& ctx, const LatticePoint& point) { return ctx.eval(point); }

std::size_t count_terms(EvalContext& ctx, const LatticePoint& point) {
  return ctx.eval(point).term_count();
}

Integer count_all_ones(const HeightFunction& h, const LatticePoint& point) {
  EvalContext ctx(h, EvalOptions{true, EdgeConstants{}});
  LaurentPoly v = ctx.eval(point);
  if (!v.is_zero() && !(v.is_monomial() && v.leading_monomial().is_one())) {
    fail(Errc::InvariantViolation, "all-ones evaluation is not a constant");
  }
  return v.sum_of_coefficients();
}

std::vector<Integer> gale_robinson_sequence(int k, int a, int b, const Integer& r, const Integer& s,
                                            int count) {
  if (!(k > 0 && a > 0 && a < k && b > 0 && b < k)) {
    fail(Errc::BadParameters, "gale-robinson parameters need 0 < a,b < k");
  }
  if (count < 0) fail(Errc::BadParameters, "negative term count");
  std::vector<Integer> g;
  g.reserve(count);
  for (int n = 0; n < count; ++n) {
    if (n < k) {
      g.emplace_back(1);
      continue;
    }
    Integer num = r * g[n - a] * g[n - k + a] + s * g[n - b] * g[n - k + b];
    const Integer& den = g[n - k];
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
      fail(Errc::NonIntegerStep, "term " + std::to_string(n) + " is not an integer");
    }
    g.push_back(num / den);
  }
  return g;
}

int gale_robinson_index(int k, int a, int b, const LatticePoint& p) {
  return (k * p.n + (2 * a - k) * p.i + (2 * b - k) * p.j) / 2;
}

LatticePoint gale_robinson_point(int k, int a, int b, int m) {
  HeightFunction h = gale_robinson_height(k, a, b);
  std::optional<LatticePoint> best;
  std::size_t best_count = 0;
  const int range = 2 * k;
  for (int i = -range; i <= range; ++i) {
    for (int j = -range; j <= range; ++j) {
      int rest = 2 * m - (2 * a - k) * i - (2 * b - k) * j;
      if (floor_mod(rest, k) != 0) continue;
      LatticePoint p{rest / k, i, j};
      if (!p.on_lattice() || p.n < h(i, j)) continue;
      std::size_t c = cone_upper_count(h, p);
      if (!best || c < best_count || (c == best_count && p < *best)) {
        best = p;
        best_count = c;
      }
    }
  }
  if (!best) fail(Errc::BadParameters, "no lattice point of index " + std::to_string(m));
  return *best;
}

EdgeConstants gale_robinson_constants(const Integer& r, const Integer& s) {
  return EdgeConstants{r, s, 1, 1};
}

}  // namespace octa
