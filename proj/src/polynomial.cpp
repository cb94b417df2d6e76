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

#include <algorithm>
#include <cstdint>

#include "pstkit/spectra.hpp"

namespace pstkit {

namespace {

void trim(std::vector<Integer> &c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

void trim(std::vector<Rational> &c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

using u64 = std::uint64_t;

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Characteristic polynomial mod p, p < 2^31, via Hessenberg form.
std::vector<u64> char_poly_mod(const IntMatrix &m, u64 p) {
  const std::size_t n = m.rows();
  std::vector<u64> h(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> u64 & { return h[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = m(i, j) % static_cast<std::int64_t>(p);
      at(i, j) = static_cast<u64>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }

  for (std::size_t col = 1; col + 1 < n; ++col) {
    std::size_t piv = col;
    while (piv < n && at(piv, col - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(at(j, piv), at(j, col));
    }
    const u64 inv = pow_mod(at(col, col - 1), p - 2, p);
    for (std::size_t i = col + 1; i < n; ++i) {
      const u64 f = at(i, col - 1) * inv % p;
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) at(i, j) = (at(i, j) + (p - f) * at(col, j)) % p;
      for (std::size_t j = 0; j < n; ++j) at(j, col) = (at(j, col) + f * at(j, i)) % p;
    }
  }

  // polys[k] = char poly of the leading k x k block.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> next(k + 1, 0);
    const auto &prev = polys[k - 1];
    const u64 diag = at(k - 1, k - 1);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j + 1] = (next[j + 1] + prev[j]) % p;
      next[j] = (next[j] + (p - diag) * prev[j]) % p;
    }
    u64 t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = t * at(k - i, k - i - 1) % p;
      const u64 f = t * at(k - 1 - i, k - 1) % p;
      if (f == 0) continue;
      const auto &lower = polys[k - 1 - i];
      for (std::size_t j = 0; j < lower.size(); ++j) next[j] = (next[j] + (p - f) * lower[j]) % p;
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

}  // namespace

QuadValue IntPolynomial::evaluate(const QuadValue &x) const {
  QuadValue acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += QuadValue(Rational(*it));
  }
  return acc;
}

IntPolynomial IntPolynomial::derivative(unsigned order) const {
  IntPolynomial out;
  if (coeffs.size() <= order) {
    out.coeffs = {0};
    return out;
  }
  for (std::size_t j = order; j < coeffs.size(); ++j) {
    Integer f = 1;
    for (unsigned k = 0; k < order; ++k) f *= static_cast<unsigned long>(j - k);
    out.coeffs.push_back(coeffs[j] * f);
  }
  return out;
}

std::string IntPolynomial::str() const {
  std::string s;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    const Integer &c = coeffs[j];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    const Integer a = abs(c);
    if (a != 1 || j == 0) s += a.get_str();
    if (j >= 1) s += "x";
    if (j >= 2) s += "^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b) {
  IntPolynomial out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  trim(out.coeffs);
  return out;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial &a, const IntPolynomial &d) {
  if (!d.monic()) throw InvalidParameterError("divide_exact needs a monic divisor");
  std::vector<Integer> rem = a.coeffs;
  const std::size_t dd = d.degree();
  if (rem.size() < d.coeffs.size()) {
    bool zero = std::all_of(rem.begin(), rem.end(), [](const Integer &c) { return c == 0; });
    if (!zero) return std::nullopt;
    return IntPolynomial{{0}};
  }
  std::vector<Integer> quot(rem.size() - dd, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer c = rem[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= c * d.coeffs[j];
  }
  for (std::size_t j = 0; j < dd; ++j)
    if (rem[j] != 0) return std::nullopt;
  trim(quot);
  return IntPolynomial{std::move(quot)};
}

IntPolynomial polynomial_gcd(const IntPolynomial &a, const IntPolynomial &b) {
  std::vector<Rational> x(a.coeffs.begin(), a.coeffs.end());
  std::vector<Rational> y(b.coeffs.begin(), b.coeffs.end());
  trim(x);
  trim(y);
  while (!y.empty()) {
    // x mod y
    while (x.size() >= y.size() && !x.empty()) {
      const Rational f = x.back() / y.back();
      const std::size_t shift = x.size() - y.size();
      for (std::size_t j = 0; j < y.size(); ++j) x[shift + j] -= f * y[j];
      x.pop_back();
      trim(x);
    }
    std::swap(x, y);
  }
  if (x.empty()) return IntPolynomial{{0}};
  const Rational lead = x.back();
  IntPolynomial out;
  for (auto &c : x) {
    Rational q = c / lead;
    if (!is_integer(q)) throw Error("polynomial gcd is not integral");
    out.coeffs.push_back(q.get_num());
  }
  return out;
}

IntPolynomial squarefree_part(const IntPolynomial &p) {
  IntPolynomial g = polynomial_gcd(p, p.derivative());
  auto q = divide_exact(p, g);
  if (!q) throw Error("squarefree_part: inexact division");
  return *q;
}

IntPolynomial char_poly(const IntMatrix &m) {
  if (!m.square()) throw SizeMismatchError("char_poly needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntPolynomial{{1}};

  // Coefficient c_k is an elementary symmetric function of the eigenvalues,
  // each bounded by the largest absolute row sum R: |c_k| <= C(n,k) R^k.
  std::int64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += m(i, j) < 0 ? -m(i, j) : m(i, j);
    r = std::max(r, s);
  }
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(r + 1), n);
  bound *= 2;  // room for the sign

  Integer modulus = 1;
  std::vector<Integer> acc(n + 1, 0);
  u64 p = (u64{1} << 31) - 1;
  while (modulus <= bound) {
    while (!is_prime(p)) --p;
    const auto residues = char_poly_mod(m, p);
    const Integer pz(static_cast<unsigned long>(p));
    Integer inv;
    {
      Integer mm = mod_floor(modulus, pz);
      mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
    }
    for (std::size_t k = 0; k <= n; ++k) {
      Integer diff = mod_floor(Integer(static_cast<unsigned long>(residues[k])) - acc[k], pz);
      Integer t = mod_floor(diff * inv, pz);
      acc[k] += modulus * t;
    }
    modulus *= pz;
    --p;
  }
  const Integer half = modulus / 2;
  IntPolynomial out;
  for (auto &c : acc) out.coeffs.push_back(c > half ? Integer(c - modulus) : c);
  return out;
}

IntPolynomial char_poly(const Graph &g) { return char_poly(g.adjacency()); }

BigIntMatrix to_big(const IntMatrix &m) {
  return m.map<Integer>([](std::int64_t v) { return Integer(static_cast<long>(v)); });
}

BigIntMatrix evaluate_at_matrix(const IntPolynomial &p, const IntMatrix &m) {
  const BigIntMatrix a = to_big(m);
  const std::size_t n = m.rows();
  BigIntMatrix acc(n, n);
  for (std::size_t j = p.coeffs.size(); j-- > 0;) {
    acc = a * acc;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += p.coeffs[j];
  }
  return acc;
}

}  // namespace pstkit
