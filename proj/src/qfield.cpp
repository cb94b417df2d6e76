// Copyright 2026 The pstkit Authors
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

#include "pstkit/qfield.hpp"

#include <boost/math/constants/constants.hpp>
#include <cctype>
#include <numeric>

namespace pstkit {

SquarefreeSplit squarefree_split(const Integer &n) {
  if (n <= 0) throw InvalidParameterError("squarefree_split needs a positive integer");
  Integer rest = n;
  Integer root = 1;
  Integer kernel = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      kernel *= p;
    }
  }
  kernel *= rest;
  if (!kernel.fits_slong_p()) throw InvalidParameterError("squarefree kernel too large");
  return {root, kernel.get_si()};
}

bool is_squarefree(std::int64_t d) {
  if (d < 1) return false;
  return squarefree_split(Integer(static_cast<long>(d))).kernel == d;
}

unsigned two_adic_valuation(const Integer &n) {
  if (n == 0) throw InvalidParameterError("2-adic valuation of zero");
  return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

Integer odd_part(const Integer &n) {
  Integer out;
  const Integer magnitude = abs(n);
  mpz_fdiv_q_2exp(out.get_mpz_t(), magnitude.get_mpz_t(), two_adic_valuation(n));
  return n < 0 ? Integer(-out) : out;
}

Integer mod_floor(const Integer &a, const Integer &m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Rational rational_gcd(const Rational &a, const Rational &b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Integer num = gcd(a.get_num(), b.get_num());
  Integer den = lcm(a.get_den(), b.get_den());
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational rational_lcm(const Rational &a, const Rational &b) {
  if (a == 0 || b == 0) return 0;
  Integer num = lcm(a.get_num(), b.get_num());
  Integer den = gcd(a.get_den(), b.get_den());
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool is_integer(const Rational &q) { return q.get_den() == 1; }

std::string to_string(const Rational &q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// QuadValue

QuadValue::QuadValue(Rational x, Rational y, std::int64_t delta)
    : x_(std::move(x)), y_(std::move(y)), delta_(delta) {
  if (!is_squarefree(delta_)) throw InvalidParameterError("delta must be a squarefree positive integer");
  canonicalize();
}

QuadValue QuadValue::half_form(const Integer &a, const Integer &b, std::int64_t delta) {
  return QuadValue(Rational(a, 2), Rational(b, 2), delta);
}

void QuadValue::canonicalize() {
  x_.canonicalize();
  y_.canonicalize();
  if (delta_ == 1) {
    x_ += y_;
    y_ = 0;
  }
  if (y_ == 0) delta_ = 1;
}

std::int64_t QuadValue::common_delta(const QuadValue &a, const QuadValue &b) {
  if (a.delta_ == 1) return b.delta_;
  if (b.delta_ == 1 || a.delta_ == b.delta_) return a.delta_;
  throw DeltaMismatchError("quadratic values from Q(sqrt(" + std::to_string(a.delta_) + ")) and Q(sqrt(" +
                           std::to_string(b.delta_) + "))");
}

int QuadValue::sign() const {
  const int sx = sgn(x_);
  const int sy = sgn(y_);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // Opposite signs: compare x^2 with delta*y^2; equality is impossible.
  return x_ * x_ > y_ * y_ * delta_ ? sx : sy;
}

int compare(const QuadValue &a, const QuadValue &b) {
  if (a.delta_ == 1 || b.delta_ == 1 || a.delta_ == b.delta_) return (a - b).sign();
  // (a.x - b.x) + a.y sqrt(p) - b.y sqrt(q) with p != q both > 1.
  const QuadValue lhs(a.x_ - b.x_, a.y_, a.delta_);
  const int s = lhs.sign();
  const int t = -sgn(b.y_);
  if (s == 0) return t;
  if (s == t) return s;
  // Opposite signs: compare lhs^2 with b.y^2 q; they cannot be equal since
  // sqrt(q) is not in Q(sqrt(p)).
  const QuadValue diff = lhs * lhs - QuadValue(b.y_ * b.y_ * b.delta_);
  return diff.sign() > 0 ? s : t;
}

QuadValue QuadValue::conj() const {
  QuadValue out = *this;
  out.y_ = -out.y_;
  return out;
}

Rational QuadValue::norm() const { return x_ * x_ - y_ * y_ * delta_; }

QuadValue QuadValue::operator-() const {
  QuadValue out = *this;
  out.x_ = -out.x_;
  out.y_ = -out.y_;
  return out;
}

QuadValue &QuadValue::operator+=(const QuadValue &o) {
  delta_ = common_delta(*this, o);
  x_ += o.x_;
  y_ += o.y_;
  canonicalize();
  return *this;
}

QuadValue &QuadValue::operator-=(const QuadValue &o) {
  delta_ = common_delta(*this, o);
  x_ -= o.x_;
  y_ -= o.y_;
  canonicalize();
  return *this;
}

QuadValue &QuadValue::operator*=(const QuadValue &o) {
  if (o.y_ == 0) {
    x_ *= o.x_;
    y_ *= o.x_;
  } else if (y_ == 0) {
    y_ = x_ * o.y_;
    x_ *= o.x_;
    delta_ = o.delta_;
  } else {
    const std::int64_t d = common_delta(*this, o);
    Rational nx = x_ * o.x_ + y_ * o.y_ * d;
    Rational ny = x_ * o.y_ + y_ * o.x_;
    x_ = std::move(nx);
    y_ = std::move(ny);
    delta_ = d;
  }
  canonicalize();
  return *this;
}

QuadValue &QuadValue::operator/=(const QuadValue &o) {
  if (o.is_zero()) throw DivisionByZeroError("division of quadratic value by zero");
  const Rational n = o.norm();
  *this *= o.conj();
  x_ /= n;
  y_ /= n;
  canonicalize();
  return *this;
}

double QuadValue::to_double() const { return to_bigfloat().convert_to<double>(); }

BigFloat QuadValue::to_bigfloat() const {
  BigFloat out = BigFloat(x_.get_num().get_str()) / BigFloat(x_.get_den().get_str());
  if (y_ != 0) {
    out += BigFloat(y_.get_num().get_str()) / BigFloat(y_.get_den().get_str()) *
           boost::multiprecision::sqrt(BigFloat(delta_));
  }
  return out;
}

std::string QuadValue::str() const {
  if (y_ == 0) return x_.get_str();
  const std::string root = "sqrt(" + std::to_string(delta_) + ")";
  // Prefer the (a+b*sqrt(D))/2 form when it is integral.
  const Rational a = 2 * x_;
  const Rational b = 2 * y_;
  auto coeff = [&](const Integer &c) {
    if (c == 1) return root;
    if (c == -1) return "-" + root;
    return c.get_str() + "*" + root;
  };
  if (x_ == 0 && pstkit::is_integer(y_)) return coeff(y_.get_num());
  if (pstkit::is_integer(a) && pstkit::is_integer(b) && x_.get_den() == 2) {
    std::string s = "(" + a.get_num().get_str();
    s += b > 0 ? "+" : "";
    s += coeff(b.get_num()) + ")/2";
    return s;
  }
  std::string s = x_ == 0 ? "" : x_.get_str();
  if (!s.empty() && y_ > 0) s += "+";
  s += y_ == 1 ? root : (y_ == -1 ? "-" + root : y_.get_str() + "*" + root);
  return s;
}

// ---------------------------------------------------------------------------
// RadicalSum

RadicalSum::RadicalSum(const Rational &q) { add_term(q, 1); }

RadicalSum::RadicalSum(const QuadValue &v) {
  add_term(v.x(), 1);
  add_term(v.y(), v.delta());
}

RadicalSum RadicalSum::term(const Rational &coeff, std::int64_t radicand) {
  RadicalSum out;
  auto split = squarefree_split(Integer(static_cast<long>(radicand)));
  Rational c = coeff;
  c.canonicalize();
  out.add_term(c * split.square_root, split.kernel);
  return out;
}

void RadicalSum::add_term(const Rational &raw, std::int64_t radicand) {
  Rational coeff = raw;
  coeff.canonicalize();  // callers may pass unreduced p/q
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational RadicalSum::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

RadicalSum RadicalSum::irrational_part() const {
  RadicalSum out = *this;
  out.terms_.erase(1);
  return out;
}

RadicalSum &RadicalSum::operator+=(const RadicalSum &o) {
  for (const auto &[r, c] : o.terms_) add_term(c, r);
  return *this;
}

RadicalSum &RadicalSum::operator-=(const RadicalSum &o) {
  for (const auto &[r, c] : o.terms_) add_term(-c, r);
  return *this;
}

RadicalSum operator*(const RadicalSum &a, const RadicalSum &b) {
  RadicalSum out;
  for (const auto &[ra, ca] : a.terms_) {
    for (const auto &[rb, cb] : b.terms_) {
      // sqrt(ra)*sqrt(rb) = k*sqrt(ra*rb/k^2) with k = gcd for squarefree ra, rb.
      const std::int64_t k = std::gcd(ra, rb);
      out.add_term(ca * cb * Rational(static_cast<long>(k)), (ra / k) * (rb / k));
    }
  }
  return out;
}

BigFloat RadicalSum::to_bigfloat() const {
  BigFloat out = 0;
  for (const auto &[r, c] : terms_) {
    BigFloat coeff = BigFloat(c.get_num().get_str()) / BigFloat(c.get_den().get_str());
    out += r == 1 ? coeff : coeff * boost::multiprecision::sqrt(BigFloat(r));
  }
  return out;
}

std::string RadicalSum::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto &[r, c] : terms_) {
    if (!s.empty() && c > 0) s += "+";
    s += c.get_str();
    if (r != 1) s += "*sqrt(" + std::to_string(r) + ")";
  }
  return s;
}

RadicalSum RadicalSum::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty radical sum");
  RadicalSum out;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = start + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string piece = s.substr(start, end - start);
    if (piece.front() == '+') piece.erase(0, 1);
    std::int64_t radicand = 1;
    const auto star = piece.find("*sqrt(");
    try {
      if (star != std::string::npos) {
        if (piece.back() != ')') throw ParseError("unterminated sqrt in '" + std::string(text) + "'");
        radicand = std::stoll(piece.substr(star + 6, piece.size() - star - 7));
        piece.resize(star);
      }
      Rational c(piece);
      c.canonicalize();
      if (radicand < 1 || !is_squarefree(radicand)) throw ParseError("radicand must be squarefree and positive");
      out.add_term(c, radicand);
    } catch (const std::invalid_argument &) {
      throw ParseError("malformed radical sum '" + std::string(text) + "'");
    }
    start = end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// ExactTime

ExactTime::ExactTime(Rational coeff, std::int64_t delta) : coeff_(std::move(coeff)), delta_(delta) {
  coeff_.canonicalize();
  if (coeff_ <= 0) throw InvalidParameterError("exact time must be positive");
  if (!is_squarefree(delta_)) throw InvalidParameterError("time radicand must be squarefree");
}

ExactTime ExactTime::over_sqrt_product(const Rational &coeff, std::int64_t d1, std::int64_t d2) {
  const std::int64_t k = std::gcd(d1, d2);
  return ExactTime(coeff / Rational(static_cast<long>(k)), (d1 / k) * (d2 / k));
}

ExactTime ExactTime::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const auto pi = s.find("pi");
  if (pi == std::string::npos) throw ParseError("time must have the form p/q*pi/sqrt(D)");
  std::string prefix = s.substr(0, pi);
  std::string suffix = s.substr(pi + 2);
  Rational coeff = 1;
  try {
    if (!prefix.empty()) {
      if (prefix.back() != '*') throw ParseError("expected '*' before pi");
      prefix.pop_back();
      coeff = Rational(prefix);
      coeff.canonicalize();
    }
    std::int64_t delta = 1;
    if (!suffix.empty()) {
      if (!suffix.starts_with("/sqrt(") || suffix.back() != ')') throw ParseError("expected /sqrt(D) after pi");
      delta = std::stoll(suffix.substr(6, suffix.size() - 7));
    }
    return ExactTime(coeff, delta);
  } catch (const std::invalid_argument &) {
    throw ParseError("malformed time '" + std::string(text) + "'");
  } catch (const InvalidParameterError &e) {
    throw ParseError(std::string("invalid time: ") + e.what());
  }
}

RadicalSum ExactTime::turns() const {
  return RadicalSum::term(coeff_ / Rational(static_cast<long>(delta_)), delta_);
}

double ExactTime::to_double() const { return to_bigfloat().convert_to<double>(); }

BigFloat ExactTime::to_bigfloat() const {
  return turns().to_bigfloat() * boost::math::constants::pi<BigFloat>();
}

std::string ExactTime::str() const {
  return coeff_.get_num().get_str() + "/" + coeff_.get_den().get_str() + "*pi/sqrt(" + std::to_string(delta_) + ")";
}

// ---------------------------------------------------------------------------
// Phases

UnitPhase::UnitPhase(const Rational &turns) {
  Rational t = turns;
  t.canonicalize();
  // Reduce into [0, 2).
  const Integer two_den = 2 * t.get_den();
  turns_ = Rational(mod_floor(t.get_num(), two_den), t.get_den());
  turns_.canonicalize();
}

Integer UnitPhase::order() const {
  const Integer &p = turns_.get_num();
  const Integer &q = turns_.get_den();
  return (p % 2 != 0) ? Integer(2 * q) : q;
}

Integer phase_order(const UnitPhase &lambda) { return lambda.order(); }

UnitPhase UnitPhase::pow(const Integer &k) const { return UnitPhase(turns_ * Rational(k)); }

std::complex<double> UnitPhase::value() const { return Phase(*this).value(); }

std::string UnitPhase::str() const {
  return "exp(i*pi*" + turns_.get_num().get_str() + "/" + turns_.get_den().get_str() + ")";
}

Phase::Phase(const RadicalSum &turns) : root_(turns.rational_part()), irrational_(turns.irrational_part()) {}

std::optional<UnitPhase> Phase::root_of_unity() const {
  if (!irrational_.is_zero()) return std::nullopt;
  return root_;
}

Phase Phase::negated() const {
  Phase out = *this;
  out.root_ = root_.negated();
  return out;
}

std::complex<double> Phase::value() const {
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  BigFloat angle = turns().to_bigfloat();
  angle -= 2 * boost::multiprecision::floor(angle / 2);
  angle *= pi;
  return {boost::multiprecision::cos(angle).convert_to<double>(), boost::multiprecision::sin(angle).convert_to<double>()};
}

std::string Phase::str() const {
  if (irrational_.is_zero()) return root_.str();
  return "exp(i*pi*(" + turns().str() + "))";
}

Phase Phase::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const std::string head = "exp(i*pi*";
  if (!s.starts_with(head) || s.back() != ')') throw ParseError("phase must have the form exp(i*pi*...)");
  std::string inner = s.substr(head.size(), s.size() - head.size() - 1);
  if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
  return Phase(RadicalSum::parse(inner));
}

Phase phase_at(const ExactTime &tau, const QuadValue &theta) { return Phase(tau.turns() * RadicalSum(theta)); }

}  // namespace pstkit
