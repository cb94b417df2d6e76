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

#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "pstkit/error.hpp"

namespace pstkit {

using Integer = mpz_class;
using Rational = mpq_class;
/// 50 significant digits; used wherever an exact quantity is rounded to a
/// double, so that rounding happens exactly once.
using BigFloat = boost::multiprecision::cpp_dec_float_50;

/// n = c^2 * d with d squarefree. Requires n > 0.
struct SquarefreeSplit {
  Integer square_root;  // c
  std::int64_t kernel;  // d
};
SquarefreeSplit squarefree_split(const Integer &n);
bool is_squarefree(std::int64_t d);

/// 2-adic valuation of a nonzero integer; sign is ignored.
unsigned two_adic_valuation(const Integer &n);
/// n with every factor of two removed; keeps the sign.
Integer odd_part(const Integer &n);
/// Floor-mod into [0, m).
Integer mod_floor(const Integer &a, const Integer &m);

Rational rational_gcd(const Rational &a, const Rational &b);
Rational rational_lcm(const Rational &a, const Rational &b);
bool is_integer(const Rational &q);

std::string to_string(const Rational &q);

/// x + y*sqrt(delta), delta squarefree. Canonical: y == 0 iff delta == 1.
class QuadValue {
 public:
  QuadValue() : x_(0), y_(0), delta_(1) {}
  QuadValue(long v) : x_(v), y_(0), delta_(1) {}  // NOLINT(google-explicit-constructor)
  QuadValue(Rational x) : x_(std::move(x)), y_(0), delta_(1) {}  // NOLINT(google-explicit-constructor)
  QuadValue(Rational x, Rational y, std::int64_t delta);

  /// (a + b*sqrt(delta)) / 2.
  static QuadValue half_form(const Integer &a, const Integer &b, std::int64_t delta);
  static QuadValue sqrt_of(std::int64_t delta) { return QuadValue(0, 1, delta); }

  const Rational &x() const { return x_; }
  const Rational &y() const { return y_; }
  std::int64_t delta() const { return delta_; }

  bool is_rational() const { return y_ == 0; }
  bool is_integer() const { return y_ == 0 && pstkit::is_integer(x_); }
  bool is_zero() const { return x_ == 0 && y_ == 0; }
  int sign() const;
  QuadValue conj() const;
  /// x^2 - delta*y^2.
  Rational norm() const;

  QuadValue operator-() const;
  QuadValue &operator+=(const QuadValue &o);
  QuadValue &operator-=(const QuadValue &o);
  QuadValue &operator*=(const QuadValue &o);
  QuadValue &operator/=(const QuadValue &o);
  friend QuadValue operator+(QuadValue a, const QuadValue &b) { return a += b; }
  friend QuadValue operator-(QuadValue a, const QuadValue &b) { return a -= b; }
  friend QuadValue operator*(QuadValue a, const QuadValue &b) { return a *= b; }
  friend QuadValue operator/(QuadValue a, const QuadValue &b) { return a /= b; }

  friend bool operator==(const QuadValue &a, const QuadValue &b) {
    return a.delta_ == b.delta_ && a.x_ == b.x_ && a.y_ == b.y_;
  }
  /// Three-way exact comparison: -1, 0, +1. Operands may come from
  /// different quadratic fields.
  friend int compare(const QuadValue &a, const QuadValue &b);
  friend bool operator<(const QuadValue &a, const QuadValue &b) { return compare(a, b) < 0; }
  friend bool operator>(const QuadValue &a, const QuadValue &b) { return compare(a, b) > 0; }

  double to_double() const;
  BigFloat to_bigfloat() const;
  /// Human form, e.g. "-2", "sqrt(3)", "(1+sqrt(5))/2", "1/2-3/2*sqrt(2)".
  std::string str() const;

 private:
  void canonicalize();
  static std::int64_t common_delta(const QuadValue &a, const QuadValue &b);

  Rational x_;
  Rational y_;
  std::int64_t delta_;
};

/// Finite sum of rational multiples of square roots of squarefree integers.
/// Radicand 1 holds the rational part. Used for angles measured in units of
/// pi, where products of times and eigenvalues can mix two radicands.
class RadicalSum {
 public:
  RadicalSum() = default;
  RadicalSum(long q) : RadicalSum(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  RadicalSum(const Rational &q);  // NOLINT(google-explicit-constructor)
  RadicalSum(const QuadValue &v);  // NOLINT(google-explicit-constructor)
  static RadicalSum term(const Rational &coeff, std::int64_t radicand);
  /// Inverse of str(): terms "c" or "c*sqrt(r)" joined by signs.
  static RadicalSum parse(std::string_view text);

  const std::map<std::int64_t, Rational> &terms() const { return terms_; }
  Rational rational_part() const;
  bool is_rational() const;
  bool is_zero() const { return terms_.empty(); }
  /// Drops the rational part.
  RadicalSum irrational_part() const;

  RadicalSum &operator+=(const RadicalSum &o);
  RadicalSum &operator-=(const RadicalSum &o);
  friend RadicalSum operator+(RadicalSum a, const RadicalSum &b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum &b) { return a -= b; }
  friend RadicalSum operator*(const RadicalSum &a, const RadicalSum &b);
  friend bool operator==(const RadicalSum &a, const RadicalSum &b) { return a.terms_ == b.terms_; }

  BigFloat to_bigfloat() const;
  std::string str() const;

 private:
  void add_term(const Rational &coeff, std::int64_t radicand);
  std::map<std::int64_t, Rational> terms_;
};

/// tau = coeff * pi / sqrt(delta), coeff > 0.
class ExactTime {
 public:
  ExactTime(Rational coeff, std::int64_t delta);
  /// tau = coeff * pi / (c * sqrt(d1 * d2)), canonicalized to one radicand.
  static ExactTime over_sqrt_product(const Rational &coeff, std::int64_t d1, std::int64_t d2);
  /// Parses "p/q*pi/sqrt(D)"; also accepts "p*pi/sqrt(D)", "p/q*pi" and "pi".
  static ExactTime parse(std::string_view text);

  const Rational &coeff() const { return coeff_; }
  std::int64_t delta() const { return delta_; }
  /// tau / pi as a radical sum.
  RadicalSum turns() const;
  ExactTime scaled(const Rational &k) const { return ExactTime(coeff_ * k, delta_); }

  double to_double() const;
  BigFloat to_bigfloat() const;
  /// Always "p/q*pi/sqrt(D)".
  std::string str() const;

  friend bool operator==(const ExactTime &a, const ExactTime &b) {
    return a.delta_ == b.delta_ && a.coeff_ == b.coeff_;
  }

 private:
  Rational coeff_;
  std::int64_t delta_;
};

/// Root of unity exp(i*pi*turns), turns reduced into [0, 2).
class UnitPhase {
 public:
  UnitPhase() : turns_(0) {}
  explicit UnitPhase(const Rational &turns);

  const Rational &turns() const { return turns_; }
  /// Smallest n >= 1 with lambda^n = 1.
  Integer order() const;
  UnitPhase pow(const Integer &k) const;
  UnitPhase negated() const { return UnitPhase(turns_ + 1); }
  UnitPhase operator*(const UnitPhase &o) const { return UnitPhase(turns_ + o.turns_); }
  std::complex<double> value() const;
  /// "exp(i*pi*p/q)".
  std::string str() const;

  friend bool operator==(const UnitPhase &a, const UnitPhase &b) { return a.turns_ == b.turns_; }

 private:
  Rational turns_;
};

Integer phase_order(const UnitPhase &lambda);

/// General unimodular phase exp(i*pi*turns) where turns may carry
/// irrational parts. Only the rational part is reduced mod 2.
class Phase {
 public:
  Phase() = default;
  explicit Phase(const RadicalSum &turns);
  Phase(const UnitPhase &root) : root_(root) {}  // NOLINT(google-explicit-constructor)
  /// Inverse of str().
  static Phase parse(std::string_view text);

  const UnitPhase &root() const { return root_; }
  const RadicalSum &irrational() const { return irrational_; }
  std::optional<UnitPhase> root_of_unity() const;
  Phase negated() const;
  /// Unit-phase angle / pi.
  RadicalSum turns() const { return RadicalSum(root_.turns()) + irrational_; }

  std::complex<double> value() const;
  /// "exp(i*pi*p/q)" or "exp(i*pi*(p/q+c*sqrt(D)))".
  std::string str() const;

  friend bool operator==(const Phase &a, const Phase &b) {
    return a.root_ == b.root_ && a.irrational_ == b.irrational_;
  }

 private:
  UnitPhase root_;
  RadicalSum irrational_;
};

/// exp(i*tau*theta) as an exact phase.
Phase phase_at(const ExactTime &tau, const QuadValue &theta);

}  // namespace pstkit
