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

#include "octa/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "octa/error.hpp"

namespace octa {

char letter_char(Letter q) { return "abcd"[static_cast<int>(q)]; }

Letter letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'c': return Letter::c;
    case 'd': return Letter::d;
    default: fail(Errc::Parse, std::string("unknown edge letter '") + c + "'");
  }
}

std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}
std::string to_string(const FacePoint& f) {
  return "(" + std::to_string(f.i) + "," + std::to_string(f.j) + ")";
}
std::string to_string(const EdgeLabel& e) {
  return std::string(1, letter_char(e.q)) + "(" + std::to_string(e.i) + "," + std::to_string(e.j) +
         ")";
}

LatticePoint make_point(int n, int i, int j) {
  LatticePoint p{n, i, j};
  if (!p.on_lattice()) fail(Errc::ParityViolation, "n+i+j must be even: " + to_string(p));
  return p;
}

EdgeLabel make_label(int i, int j, Letter q) {
  EdgeLabel e{i, j, q};
  if (!e.valid()) fail(Errc::ParityViolation, "edge label needs i+j odd: " + to_string(e));
  return e;
}

int p_value(const LatticePoint& apex, const FacePoint& face) {
  return apex.n - l1_distance(face, FacePoint{apex.i, apex.j});
}

ConeSide cone_membership(const LatticePoint& apex, const LatticePoint& point) {
  if (!apex.on_lattice()) fail(Errc::ParityViolation, "apex " + to_string(apex));
  if (!point.on_lattice()) fail(Errc::ParityViolation, "point " + to_string(point));
  int p = p_value(apex, FacePoint{point.i, point.j});
  if (point.n < p) return ConeSide::Inner;
  if (point.n == p) return ConeSide::Boundary;
  return ConeSide::Outside;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Aztec: return "aztec";
    case Family::Fortress: return "fortress";
    case Family::Douglass: return "douglass";
    case Family::Blum: return "blum";
  }
  return "?";
}

namespace {

int builtin_value(Family family, int i, int j) {
  if (is_even(i + j)) return 0;
  switch (family) {
    case Family::Aztec:
      return -1;
    case Family::Fortress:
      return is_even(i) ? 1 : -1;
    case Family::Douglass:
      return floor_mod(i + j, 4) == 1 ? 1 : -1;
    case Family::Blum:
      return floor_mod(j, 4) <= 1 ? 1 : -1;
  }
  return 0;
}

int gale_robinson_value(const GaleRobinsonBase& g, int i, int j) {
  int l = (2 * g.a - g.k) * i + (2 * g.b - g.k) * j;
  int n = floor_div(-l, g.k);
  if (!is_even(n - i - j)) --n;
  return n;
}

int periodic_value(const PeriodicBase& p, int i, int j) {
  return p.table[floor_mod(i, p.p1)][floor_mod(j, p.p2)] + p.c1 * floor_div(i, p.p1) +
         p.c2 * floor_div(j, p.p2);
}

}  // namespace

HeightFunction::HeightFunction(Base base) : base_(std::move(base)) {}

int HeightFunction::base_value(int i, int j) const {
  return std::visit(
      [&](const auto& b) -> int {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BuiltinBase>) {
          return builtin_value(b.family, i, j);
        } else if constexpr (std::is_same_v<T, GaleRobinsonBase>) {
          return gale_robinson_value(b, i, j);
        } else {
          return periodic_value(b, i, j);
        }
      },
      base_);
}

int HeightFunction::raw(int i, int j) const {
  if (!overrides_.empty()) {
    auto it = overrides_.find(FacePoint{i, j});
    if (it != overrides_.end()) return it->second;
  }
  return base_value(i, j);
}

int HeightFunction::operator()(int i, int j) const {
  int v = raw(i, j);
  if (truncation_) v = std::min(v, p_value(*truncation_, FacePoint{i, j}));
  return v;
}

HeightFunction HeightFunction::with_override(const FacePoint& f, int value) const {
  HeightFunction out = *this;
  if (value == out.base_value(f.i, f.j)) {
    out.overrides_.erase(f);
  } else {
    out.overrides_[f] = value;
  }
  return out;
}

HeightFunction HeightFunction::truncated(const LatticePoint& apex) const {
  HeightFunction out = *this;
  if (out.truncation_) {
    fail(Errc::BadParameters, "height function is already truncated");
  }
  out.truncation_ = apex;
  return out;
}

HeightFunction::Bound HeightFunction::lower_bound() const {
  Bound bound = std::visit(
      [&](const auto& b) -> Bound {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BuiltinBase>) {
          return Bound{0, 1, 1};
        } else if constexpr (std::is_same_v<T, GaleRobinsonBase>) {
          long long s = std::max(std::abs(2 * b.a - b.k), std::abs(2 * b.b - b.k));
          return Bound{s, b.k, 2};
        } else {
          long long t_min = 0;
          bool first = true;
          for (const auto& row : b.table) {
            for (int v : row) {
              if (first || v < t_min) t_min = v;
              first = false;
            }
          }
          long long s = std::max(1LL * std::abs(b.c1) * b.p2, 1LL * std::abs(b.c2) * b.p1);
          return Bound{s, 1LL * b.p1 * b.p2, -t_min + std::abs(b.c1) + std::abs(b.c2)};
        }
      },
      base_);
  for (const auto& [f, v] : overrides_) bound.offset = std::max<long long>(bound.offset, -v);
  return bound;
}

bool HeightFunction::certified_proper() const {
  if (truncation_) return false;
  Bound b = lower_bound();
  return b.slope_num < b.slope_den;
}

int HeightFunction::scan_radius(const LatticePoint& apex) const {
  if (truncation_) fail(Errc::BadParameters, "cone scan needs an untruncated height function");
  Bound b = lower_bound();
  if (b.slope_num >= b.slope_den) {
    fail(Errc::ScanBoundExceeded, "height function is not certified proper");
  }
  long long r0 = std::abs(apex.i) + std::abs(apex.j);
  long long num = b.slope_den * (apex.n + b.offset) + b.slope_num * r0;
  long long den = b.slope_den - b.slope_num;
  long long r = num >= 0 ? num / den : -((-num + den - 1) / den);
  return static_cast<int>(std::max<long long>(r + 1, 0));
}

namespace {

void check_step(const HeightFunction& h, int i1, int j1, int i2, int j2, ValidationReport& rep) {
  int d = h(i1, j1) - h(i2, j2);
  if (d != 1 && d != -1) {
    rep.valid = false;
    rep.problems.push_back("step " + std::to_string(d) + " between " + to_string(FacePoint{i1, j1}) +
                           " and " + to_string(FacePoint{i2, j2}));
  }
}

void check_parity(const HeightFunction& h, int i, int j, ValidationReport& rep) {
  if (!is_even(h(i, j) - i - j)) {
    rep.valid = false;
    rep.problems.push_back("parity violated at " + to_string(FacePoint{i, j}));
  }
}

}  // namespace

ValidationReport validate_structure(const HeightFunction& h) {
  ValidationReport rep;
  if (const auto* g = std::get_if<GaleRobinsonBase>(&h.base())) {
    if (!(g->k > 0 && g->a > 0 && g->a < g->k && g->b > 0 && g->b < g->k)) {
      rep.valid = false;
      rep.problems.push_back("gale-robinson parameters need 0 < a,b < k");
      rep.evaluable = false;
      return rep;
    }
  }
  if (const auto* p = std::get_if<PeriodicBase>(&h.base())) {
    if (p->p1 <= 0 || p->p2 <= 0 || static_cast<int>(p->table.size()) != p->p1) {
      rep.valid = false;
      rep.problems.push_back("periodic table shape does not match period");
      rep.evaluable = false;
      return rep;
    }
    for (const auto& row : p->table) {
      if (static_cast<int>(row.size()) != p->p2) {
        rep.valid = false;
        rep.problems.push_back("periodic table row length does not match period");
        rep.evaluable = false;
        return rep;
      }
    }
    HeightFunction bare{h.base()};
    for (int i = 0; i < p->p1; ++i) {
      for (int j = 0; j < p->p2; ++j) {
        check_parity(bare, i, j, rep);
        check_step(bare, i, j, i + 1, j, rep);
        check_step(bare, i, j, i, j + 1, rep);
      }
    }
  }
  for (const auto& [f, v] : h.overrides()) {
    check_parity(h, f.i, f.j, rep);
    check_step(h, f.i, f.j, f.i + 1, f.j, rep);
    check_step(h, f.i, f.j, f.i - 1, f.j, rep);
    check_step(h, f.i, f.j, f.i, f.j + 1, rep);
    check_step(h, f.i, f.j, f.i, f.j - 1, rep);
  }
  rep.proper = h.certified_proper();
  if (!rep.proper && !h.truncation()) {
    rep.valid = false;
    rep.problems.push_back("height function is not proper (drift slope must be below 1)");
  }
  return rep;
}

ValidationReport validate_height(const HeightFunction& h, const Window& w) {
  ValidationReport rep = validate_structure(h);
  if (!rep.evaluable) return rep;
  for (int i = w.i_lo; i <= w.i_hi; ++i) {
    for (int j = w.j_lo; j <= w.j_hi; ++j) {
      check_parity(h, i, j, rep);
      if (i < w.i_hi) check_step(h, i, j, i + 1, j, rep);
      if (j < w.j_hi) check_step(h, i, j, i, j + 1, rep);
    }
  }
  return rep;
}

void require_valid(const HeightFunction& h) {
  ValidationReport rep = validate_structure(h);
  if (!rep.valid) fail(Errc::InvalidHeight, rep.problems.front());
}

HeightFunction builtin_height(Family family) { return HeightFunction(BuiltinBase{family}); }

HeightFunction builtin_height(const std::string& name) {
  for (Family f : {Family::Aztec, Family::Fortress, Family::Douglass, Family::Blum}) {
    if (family_name(f) == name) return builtin_height(f);
  }
  fail(Errc::UnknownFamily, "unknown family '" + name + "'");
}

HeightFunction gale_robinson_height(int k, int a, int b) {
  if (!(k > 0 && a > 0 && a < k && b > 0 && b < k)) {
    fail(Errc::BadParameters, "gale-robinson parameters need 0 < a,b < k");
  }
  return HeightFunction(GaleRobinsonBase{k, a, b});
}

void require_above(const HeightFunction& h, const LatticePoint& apex) {
  if (!apex.on_lattice()) fail(Errc::ParityViolation, "apex " + to_string(apex) + " has odd n+i+j");
  if (apex.n <= h(apex.i, apex.j)) {
    fail(Errc::ApexNotAbove, "apex " + to_string(apex) + " is not above the initial surface (h=" +
                                 std::to_string(h(apex.i, apex.j)) + ")");
  }
}

HeightFunction truncate_height(const HeightFunction& h, const LatticePoint& apex) {
  require_above(h, apex);
  return h.truncated(apex);
}

std::vector<FacePoint> closed_faces(const HeightFunction& h, const LatticePoint& apex) {
  if (!apex.on_lattice()) fail(Errc::ParityViolation, "apex " + to_string(apex));
  int radius = h.scan_radius(apex);
  std::vector<FacePoint> out;
  for (int di = -radius; di <= radius; ++di) {
    int rem = radius - std::abs(di);
    for (int dj = -rem; dj <= rem; ++dj) {
      FacePoint f{apex.i + di, apex.j + dj};
      if (h(f) < p_value(apex, f)) {
        if (std::abs(di) + std::abs(dj) == radius) {
          fail(Errc::ScanBoundExceeded, "closed face found on the scan boundary");
        }
        out.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticePoint> cone_upper_points(const HeightFunction& h, const LatticePoint& apex) {
  std::vector<LatticePoint> out;
  for (const FacePoint& f : closed_faces(h, apex)) {
    int p = p_value(apex, f);
    for (int n = h(f) + 2; n <= p; n += 2) out.push_back(LatticePoint{n, f.i, f.j});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t cone_upper_count(const HeightFunction& h, const LatticePoint& apex) {
  std::size_t count = 0;
  for (const FacePoint& f : closed_faces(h, apex)) {
    count += static_cast<std::size_t>((p_value(apex, f) - h(f)) / 2);
  }
  return count;
}

nlohmann::json height_to_json(const HeightFunction& h) {
  nlohmann::json out;
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BuiltinBase>) {
          out["base"] = family_name(b.family);
        } else if constexpr (std::is_same_v<T, GaleRobinsonBase>) {
          out["base"] = {{"gale_robinson", {b.k, b.a, b.b}}};
        } else {
          out["base"] = {{"periodic",
                          {{"period", {b.p1, b.p2}}, {"table", b.table}, {"drift", {b.c1, b.c2}}}}};
        }
      },
      h.base());
  nlohmann::json ov = nlohmann::json::array();
  for (const auto& [f, v] : h.overrides()) ov.push_back({f.i, f.j, v});
  out["overrides"] = ov;
  return out;
}

HeightFunction height_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("base")) fail(Errc::Parse, "height JSON needs a \"base\" field");
  const auto& base = j.at("base");
  std::optional<HeightFunction> h;
  try {
    if (base.is_string()) {
      h = builtin_height(base.get<std::string>());
    } else if (base.is_object() && base.contains("gale_robinson")) {
      auto v = base.at("gale_robinson").get<std::vector<int>>();
      if (v.size() != 3) fail(Errc::Parse, "gale_robinson needs [k,a,b]");
      h = gale_robinson_height(v[0], v[1], v[2]);
    } else if (base.is_object() && base.contains("periodic")) {
      const auto& p = base.at("periodic");
      auto period = p.at("period").get<std::vector<int>>();
      auto drift = p.contains("drift") ? p.at("drift").get<std::vector<int>>() : std::vector<int>{0, 0};
      if (period.size() != 2 || drift.size() != 2) fail(Errc::Parse, "period and drift need 2 entries");
      PeriodicBase pb;
      pb.p1 = period[0];
      pb.p2 = period[1];
      pb.table = p.at("table").get<std::vector<std::vector<int>>>();
      pb.c1 = drift[0];
      pb.c2 = drift[1];
      h = HeightFunction(pb);
    } else {
      fail(Errc::Parse, "unrecognized base");
    }
    if (j.contains("overrides")) {
      for (const auto& o : j.at("overrides")) {
        auto v = o.get<std::vector<int>>();
        if (v.size() != 3) fail(Errc::Parse, "override needs [i,j,n]");
        h = h->with_override(FacePoint{v[0], v[1]}, v[2]);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, e.what());
  }
  require_valid(*h);
  return *h;
}

HeightFunction load_height_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Parse, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, path + ": " + e.what());
  }
  return height_from_json(j);
}

}  // namespace octa
