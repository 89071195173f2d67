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

#include "octa/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "octa/error.hpp"

namespace octa {

namespace {

constexpr std::int64_t kOffset = std::int64_t{1} << 27;
constexpr std::uint64_t kMask28 = (std::uint64_t{1} << 28) - 1;

std::uint64_t pack(bool edge, int i, int j, int kind) {
  if (i <= -kOffset || i >= kOffset || j <= -kOffset || j >= kOffset) {
    fail(Errc::BadParameters, "variable index out of range");
  }
  return (std::uint64_t{edge} << 62) | (static_cast<std::uint64_t>(i + kOffset) << 34) |
         (static_cast<std::uint64_t>(j + kOffset) << 6) | static_cast<std::uint64_t>(kind);
}

}  // namespace

VarId VarId::face(int i, int j) { return VarId(pack(false, i, j, 0)); }

VarId VarId::edge(const EdgeLabel& e) {
  if (!e.valid()) fail(Errc::ParityViolation, "edge variable " + to_string(e));
  return VarId(pack(true, e.i, e.j, static_cast<int>(e.q)));
}

int VarId::i() const { return static_cast<int>(static_cast<std::int64_t>((key_ >> 34) & kMask28) - kOffset); }
int VarId::j() const { return static_cast<int>(static_cast<std::int64_t>((key_ >> 6) & kMask28) - kOffset); }
Letter VarId::letter() const { return static_cast<Letter>(key_ & 7); }

std::string VarId::name() const {
  std::string s = is_face() ? "x" : std::string(1, letter_char(letter()));
  return s + "[" + std::to_string(i()) + "," + std::to_string(j()) + "]";
}

Monomial Monomial::var(VarId v, int exponent) {
  Monomial m;
  if (exponent != 0) {
    m.entries_.emplace_back(v, exponent);
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : entries) {
    if (!m.entries_.empty() && m.entries_.back().first == v) {
      m.entries_.back().second += e;
    } else {
      m.entries_.emplace_back(v, e);
    }
  }
  std::erase_if(m.entries_, [](const Entry& x) { return x.second == 0; });
  for (const auto& [v, e] : m.entries_) m.degree_ += e;
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& a, VarId b) { return a.first < b; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      r.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      r.entries_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) r.entries_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial r;
  if (e == 0) return r;
  r.entries_ = entries_;
  for (auto& x : r.entries_) x.second *= e;
  r.degree_ = degree_ * e;
  return r;
}

Monomial Monomial::gcd_floor(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto x = a.entries_.begin();
  auto y = b.entries_.begin();
  while (x != a.entries_.end() || y != b.entries_.end()) {
    if (y == b.entries_.end() || (x != a.entries_.end() && x->first < y->first)) {
      if (x->second < 0) r.entries_.push_back(*x);
      ++x;
    } else if (x == a.entries_.end() || y->first < x->first) {
      if (y->second < 0) r.entries_.push_back(*y);
      ++y;
    } else {
      int e = std::min(x->second, y->second);
      if (e != 0) r.entries_.emplace_back(x->first, e);
      ++x;
      ++y;
    }
  }
  for (const auto& [v, e] : r.entries_) r.degree_ += e;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& [v, e] : entries_) {
    if (e > o.exponent(v)) return false;
  }
  for (const auto& [v, e] : o.entries_) {
    if (e < 0 && exponent(v) > e) return false;
  }
  return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (degree_ != o.degree_) return degree_ <=> o.degree_;
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      return a->second <=> 0;
    }
    if (a == entries_.end() || b->first < a->first) {
      return 0 <=> b->second;
    }
    if (a->second != b->second) return a->second <=> b->second;
    ++a;
    ++b;
  }
  return std::strong_ordering::equal;
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

LaurentPoly LaurentPoly::var(VarId v, int exponent) {
  return term(Monomial::var(v, exponent), Integer(1));
}

LaurentPoly LaurentPoly::term(const Monomial& m, const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  if (terms_.empty() || o.terms_.empty()) return r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      auto [it, inserted] = r.terms_.try_emplace(m1 * m2);
      mpz_addmul(it->second.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

LaurentPoly LaurentPoly::operator*(const Monomial& m) const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k * m, c);
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (is_monomial() && (leading_coefficient() == 1 || leading_coefficient() == -1)) {
      Integer sign = (leading_coefficient() == -1 && (e & 1)) ? -1 : 1;
      return term(leading_monomial().pow(e), sign);
    }
    if (is_zero()) fail(Errc::NegativePowerOfZero, "zero raised to a negative power");
    fail(Errc::DivisionNotExact, "negative power of a non-unit");
  }
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Integer LaurentPoly::sum_of_coefficients() const {
  Integer s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

Monomial LaurentPoly::min_monomial() const {
  if (terms_.empty()) return Monomial();
  auto it = terms_.begin();
  Monomial r = it->first;
  for (++it; it != terms_.end(); ++it) r = Monomial::gcd_floor(r, it->first);
  return r;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) fail(Errc::DivisionByZero, "division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly();
  if (q.is_monomial()) {
    const Integer& c = q.leading_coefficient();
    Monomial inv = q.leading_monomial().inverse();
    LaurentPoly r;
    for (const auto& [m, pc] : p.terms()) {
      if (!mpz_divisible_p(pc.get_mpz_t(), c.get_mpz_t())) {
        fail(Errc::DivisionNotExact, "coefficient not divisible");
      }
      r.add_term(m * inv, Integer(pc / c));
    }
    return r;
  }
  Monomial mq = q.min_monomial();
  Monomial mp = p.min_monomial();
  LaurentPoly qq = q * mq.inverse();
  LaurentPoly rem = p * mp.inverse();
  const Monomial lt = qq.leading_monomial();
  const Integer lc = qq.leading_coefficient();
  Monomial lt_inv = lt.inverse();
  LaurentPoly quotient;
  Integer tc;
  while (!rem.is_zero()) {
    const Monomial lm = rem.leading_monomial();
    const Integer rc = rem.leading_coefficient();
    if (!lt.divides(lm) || !mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t())) {
      fail(Errc::DivisionNotExact, "nonzero remainder");
    }
    Monomial t = lm * lt_inv;
    mpz_divexact(tc.get_mpz_t(), rc.get_mpz_t(), lc.get_mpz_t());
    quotient.add_term(t, tc);
    for (const auto& [m, c] : qq.terms()) rem.add_term(m * t, Integer(-tc * c));
  }
  return quotient * (mp * mq.inverse());
}

namespace {

bool is_unit_monomial(const LaurentPoly& v) {
  return v.is_monomial() && (v.leading_coefficient() == 1 || v.leading_coefficient() == -1);
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const Assignment& assignment) {
  if (assignment.empty()) return p;
  // Largest negative exponent per variable whose value is not invertible.
  std::map<VarId, int> clear;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.entries()) {
      if (e >= 0) continue;
      auto it = assignment.find(v);
      if (it == assignment.end()) continue;
      if (it->second.is_zero()) {
        fail(Errc::NegativePowerOfZero, v.name() + " set to 0 appears with exponent " + std::to_string(e));
      }
      if (!is_unit_monomial(it->second)) clear[v] = std::max(clear[v], -e);
    }
  }
  std::map<std::pair<VarId, int>, LaurentPoly> power_cache;
  auto power = [&](VarId v, const LaurentPoly& val, int e) -> const LaurentPoly& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) it = power_cache.emplace(key, val.pow(e)).first;
    return it->second;
  };
  LaurentPoly numerator;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Entry> kept;
    LaurentPoly value = LaurentPoly::term(Monomial(), c);
    std::map<VarId, int> seen;
    for (const auto& [v, e] : m.entries()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      seen[v] = e;
    }
    for (const auto& [v, d] : clear) seen.try_emplace(v, 0);
    for (const auto& [v, e] : seen) {
      auto cl = clear.find(v);
      int shifted = e + (cl == clear.end() ? 0 : cl->second);
      if (shifted == 0) continue;
      value = value * power(v, assignment.at(v), shifted);
      if (value.is_zero()) break;
    }
    if (value.is_zero()) continue;
    numerator += value * Monomial::from_entries(std::move(kept));
  }
  if (clear.empty()) return numerator;
  LaurentPoly denominator(1L);
  for (const auto& [v, d] : clear) denominator = denominator * power(v, assignment.at(v), d);
  return exact_div(numerator, denominator);
}

LaurentPoly specialize_to_one(const LaurentPoly& p, bool faces, bool edges) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Entry> kept;
    for (const auto& [v, e] : m.entries()) {
      if ((v.is_face() && faces) || (v.is_edge() && edges)) continue;
      kept.emplace_back(v, e);
    }
    r.add_term(Monomial::from_entries(std::move(kept)), c);
  }
  return r;
}

bool CoefficientProfile::all_coefficients_one() const {
  return coefficients.size() == 1 && coefficients.begin()->first == 1;
}

CoefficientProfile coefficient_profile(const LaurentPoly& p) {
  CoefficientProfile prof;
  prof.terms = p.term_count();
  for (const auto& [m, c] : p.terms()) {
    ++prof.coefficients[c];
    for (const auto& [v, e] : m.entries()) {
      if (v.is_face()) {
        prof.face_min = std::min(prof.face_min, e);
        prof.face_max = std::max(prof.face_max, e);
      } else {
        prof.edge_min = std::min(prof.edge_min, e);
        prof.edge_max = std::max(prof.edge_max, e);
      }
    }
  }
  return prof;
}

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || m.is_one()) {
      out += mag.get_str();
      need_star = true;
    }
    for (const auto& [v, e] : m.entries()) {
      if (need_star) out += " * ";
      out += v.name();
      if (e != 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& [v, e] : m.entries()) {
      std::string kind = v.is_face() ? "x" : std::string(1, letter_char(v.letter()));
      vars.push_back({kind, v.i(), v.j(), e});
    }
    terms.push_back({{"coeff", c.get_str()}, {"vars", vars}});
  }
  return nlohmann::json{{"terms", terms}};
}

namespace {

VarId make_var(const std::string& kind, int i, int j) {
  if (kind == "x") return VarId::face(i, j);
  if (kind.size() == 1 && kind[0] >= 'a' && kind[0] <= 'd') {
    return VarId::edge(make_label(i, j, letter_from_char(kind[0])));
  }
  fail(Errc::Parse, "unknown variable kind '" + kind + "'");
}

class TextParser {
 public:
  explicit TextParser(const std::string& s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly out;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      parse_term(sign, out);
      skip();
    }
    if (first) error("empty polynomial");
    return out;
  }

 private:
  void parse_term(int sign, LaurentPoly& out) {
    Integer coeff = sign;
    std::vector<Monomial::Entry> entries;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= parse_integer();
      need_factor = false;
      skip();
      if (peek() != '*') {
        out.add_term(Monomial(), coeff);
        return;
      }
      get();
      skip();
      need_factor = true;
    }
    while (need_factor) {
      std::string kind(1, get());
      expect('[');
      int i = parse_int();
      expect(',');
      int j = parse_int();
      expect(']');
      int e = 1;
      skip();
      if (peek() == '^') {
        get();
        skip();
        e = parse_int();
        skip();
      }
      entries.emplace_back(make_var(kind, i, j), e);
      need_factor = false;
      if (peek() == '*') {
        get();
        skip();
        need_factor = true;
      }
    }
    out.add_term(Monomial::from_entries(std::move(entries)), coeff);
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected digits");
    return Integer(s_.substr(start, pos_ - start));
  }

  int parse_int() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      get();
    }
    Integer v = parse_integer();
    if (!v.fits_sint_p()) error("index out of range");
    skip();
    return neg ? -static_cast<int>(v.get_si()) : static_cast<int>(v.get_si());
  }

  void expect(char c) {
    skip();
    if (get() != c) error(std::string("expected '") + c + "'");
    skip();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() {
    if (pos_ >= s_.size()) error("unexpected end of input");
    return s_[pos_++];
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::Parse, what + " at offset " + std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text) { return TextParser(text).parse(); }

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  LaurentPoly out;
  try {
    for (const auto& t : j.at("terms")) {
      Integer c(t.at("coeff").get<std::string>());
      std::vector<Monomial::Entry> entries;
      for (const auto& v : t.at("vars")) {
        entries.emplace_back(make_var(v.at(0).get<std::string>(), v.at(1).get<int>(), v.at(2).get<int>()),
                             v.at(3).get<int>());
      }
      out.add_term(Monomial::from_entries(std::move(entries)), c);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, e.what());
  } catch (const std::invalid_argument& e) {
    fail(Errc::Parse, e.what());
  }
  return out;
}

}  // namespace octa
