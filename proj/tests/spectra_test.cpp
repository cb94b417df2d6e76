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

#include <gtest/gtest.h>

#include <random>

#include "pstkit/spectra.hpp"
#include "test_util.hpp"

using namespace pstkit;
using namespace pstkit::testing;

namespace {

IntPolynomial poly(std::initializer_list<long> low_to_high) {
  IntPolynomial p;
  for (long c : low_to_high) p.coeffs.emplace_back(c);
  return p;
}

/// Faddeev-LeVerrier over Q: an independent route to det(xI - M).
IntPolynomial faddeev_leverrier(const IntMatrix &m) {
  const std::size_t n = m.rows();
  using RM = Matrix<Rational>;
  RM a = m.map<Rational>([](std::int64_t v) { return Rational(static_cast<long>(v)); });
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RM mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RM next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    RM amk = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  IntPolynomial out;
  for (auto &q : c) out.coeffs.push_back(q.get_num());
  return out;
}

using RadMatrix = Matrix<RadicalSum>;

RadMatrix radical(const QuadMatrix &m) {
  return m.map<RadicalSum>([](const QuadValue &v) { return RadicalSum(v); });
}

Rational trace_x(const QuadMatrix &e) {
  Rational t = 0;
  for (std::size_t i = 0; i < e.rows(); ++i) t += e(i, i).x();
  return t;
}

void expect_exact_resolution(const SpectralDecomposition &d) {
  const std::size_t n = d.order();
  RadMatrix sum(n, n), recon(n, n);
  for (std::size_t r = 0; r < d.size(); ++r) {
    const auto &e = d[r].projector;
    sum += radical(e);
    QuadMatrix scaled = e;
    scaled.scale(d[r].value);
    recon += radical(scaled);
    EXPECT_EQ(e * e, e);
    EXPECT_EQ(trace_x(e), Rational(static_cast<long>(d[r].multiplicity)));
    for (std::size_t s = r + 1; s < d.size(); ++s) EXPECT_EQ(radical(e) * radical(d[s].projector), RadMatrix(n, n));
  }
  EXPECT_EQ(sum, RadMatrix::identity(n));
  EXPECT_EQ(recon, d.matrix().map<RadicalSum>([](std::int64_t v) { return RadicalSum(static_cast<long>(v)); }));
  for (std::size_t r = 0; r + 1 < d.size(); ++r) EXPECT_GT(d[r].value, d[r + 1].value);
}

}  // namespace

TEST(char_poly, small_examples) {
  EXPECT_EQ(char_poly(K(2)), poly({-1, 0, 1}));
  EXPECT_EQ(char_poly(P(3)), poly({0, -2, 0, 1}));
  EXPECT_EQ(char_poly(K(3)), poly({-2, -3, 0, 1}));
  EXPECT_EQ(char_poly(P(4)), poly({1, 0, -3, 0, 1}));
  EXPECT_EQ(char_poly(E(3)), poly({0, 0, 0, 1}));
}

TEST(char_poly, agrees_with_faddeev_leverrier) {
  for (const auto &g : small_corpus()) {
    if (g.order() > 6) continue;
    ASSERT_EQ(char_poly(g), faddeev_leverrier(g.adjacency())) << write_graph6(g);
  }
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 1 + static_cast<std::size_t>(it % 9);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
    ASSERT_EQ(char_poly(m), faddeev_leverrier(m));
  }
}

TEST(char_poly, larger_graph_coefficients) {
  // Q4: eigenvalues 4, 2 (x4), 0 (x6), -2 (x4), -4.
  IntPolynomial expected = poly({-4, 1}) * poly({4, 1}) * poly({0, 1}) * poly({0, 1}) * poly({0, 1}) *
                           poly({0, 1}) * poly({0, 1}) * poly({0, 1});
  for (int i = 0; i < 4; ++i) expected = expected * poly({-2, 1}) * poly({2, 1});
  EXPECT_EQ(char_poly(Q(4)), expected);
}

TEST(polynomial, division_and_gcd) {
  IntPolynomial p = poly({1, 0, -3, 0, 1});
  auto q = divide_exact(p, poly({-1, -1, 1}));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, poly({-1, 1, 1}));
  EXPECT_FALSE(divide_exact(p, poly({-1, 1})));
  IntPolynomial sq = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
  EXPECT_EQ(squarefree_part(sq), poly({-2, 1, 1}));
  EXPECT_EQ(poly({0, -2, 0, 1}).str(), "x^3 - 2x");
}

TEST(decompose, cycle4) {
  auto d = decompose(C(4));
  ASSERT_TRUE(d.complete());
  EXPECT_EQ(d.delta(), 1);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0].value, QuadValue(2));
  EXPECT_EQ(d[1].value, QuadValue(0));
  EXPECT_EQ(d[2].value, QuadValue(-2));
  EXPECT_EQ(d[0].multiplicity, 1u);
  EXPECT_EQ(d[1].multiplicity, 2u);
  EXPECT_EQ(d[2].multiplicity, 1u);
  expect_exact_resolution(d);
}

TEST(decompose, star3) {
  auto d = decompose(S(3));
  ASSERT_TRUE(d.complete());
  EXPECT_EQ(d.delta(), 3);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0].value, QuadValue(0, 1, 3));
  EXPECT_EQ(d[1].value, QuadValue(0));
  EXPECT_EQ(d[2].value, QuadValue(0, -1, 3));
  EXPECT_EQ(d[1].multiplicity, 2u);
  expect_exact_resolution(d);
}

TEST(decompose, path4_golden_ratio) {
  auto d = decompose(P(4));
  ASSERT_TRUE(d.complete());
  EXPECT_EQ(d.delta(), 5);
  ASSERT_EQ(d.size(), 4u);
  EXPECT_EQ(d[0].value, QuadValue::half_form(1, 1, 5));
  EXPECT_EQ(d[1].value, QuadValue::half_form(-1, 1, 5));
  EXPECT_EQ(d[2].value, QuadValue::half_form(1, -1, 5));
  EXPECT_EQ(d[3].value, QuadValue::half_form(-1, -1, 5));
  expect_exact_resolution(d);
}

TEST(decompose, cubic_irrationals_are_left_numeric) {
  // P6 has eigenvalues 2 cos(k pi / 7): roots of x^3 + x^2 - 2x - 1 and its negation.
  auto d = decompose(P(6));
  EXPECT_FALSE(d.complete());
  EXPECT_THROW(d.require_complete(), UnsupportedSpectrumError);
  for (const auto &s : d.eigenspaces()) EXPECT_FALSE(s.exact);
  Support su = support(d, 0);
  EXPECT_TRUE(su.indices.empty());
  EXPECT_EQ(su.unrecognized_weight, 1);
}

TEST(decompose, mixed_radicands) {
  // Disjoint union of P3 (sqrt 2) and S3 (sqrt 3).
  IntMatrix a(7, 7);
  auto edge = [&](std::size_t i, std::size_t j) { a(i, j) = a(j, i) = 1; };
  edge(0, 1);
  edge(1, 2);
  edge(3, 4);
  edge(3, 5);
  edge(3, 6);
  auto d = decompose(a);
  EXPECT_TRUE(d.complete());
  EXPECT_FALSE(d.delta());
  expect_exact_resolution(d);
}

TEST(decompose, galois_conjugation_permutes_pairs) {
  for (const Graph &g : {P(4), S(3), P(3), C(5), C(8)}) {
    auto d = decompose(g);
    ASSERT_TRUE(d.complete());
    for (std::size_t r = 0; r < d.size(); ++r) {
      if (d[r].value.is_rational()) continue;
      bool found = false;
      for (std::size_t s = 0; s < d.size(); ++s) {
        if (d[s].value == d[r].value.conj()) {
          found = true;
          EXPECT_EQ(d[s].projector, d[r].projector.map<QuadValue>([](const QuadValue &v) { return v.conj(); }));
        }
      }
      EXPECT_TRUE(found);
    }
  }
}

TEST(decompose, corpus_exactness_up_to_six_vertices) {
  std::size_t complete = 0;
  for (const auto &g : small_corpus()) {
    if (g.order() > 6) continue;
    auto d = decompose(g);
    std::size_t total = 0;
    for (const auto &s : d.eigenspaces()) total += s.multiplicity;
    EXPECT_EQ(total, g.order());
    if (!d.complete()) continue;
    ++complete;
    expect_exact_resolution(d);
  }
  // Count from an independent sympy factorization of every characteristic polynomial.
  EXPECT_EQ(complete, 99u);
}

TEST(support, examples) {
  auto s3 = decompose(S(3));
  Support center = support(s3, 0);
  ASSERT_EQ(center.indices.size(), 2u);
  EXPECT_EQ(s3[center.indices[0]].value, QuadValue(0, 1, 3));
  EXPECT_EQ(s3[center.indices[1]].value, QuadValue(0, -1, 3));
  EXPECT_FALSE(center.touches_unrecognized());

  auto c4 = decompose(C(4));
  EXPECT_EQ(support(c4, 1).indices.size(), 3u);

  auto k2 = decompose(K(2));
  EXPECT_EQ(support(k2, 0).indices.size(), 2u);
  EXPECT_EQ(support(k2, 1).indices.size(), 2u);
}

TEST(strong_cospectral, examples) {
  auto p3 = decompose(P(3));
  auto rep = strong_cospectral(p3, 0, 2);
  ASSERT_TRUE(rep.strongly_cospectral);
  ASSERT_EQ(rep.plus.size(), 2u);
  EXPECT_EQ(p3[rep.plus[0]].value, QuadValue(0, 1, 2));
  EXPECT_EQ(p3[rep.plus[1]].value, QuadValue(0, -1, 2));
  ASSERT_EQ(rep.minus.size(), 1u);
  EXPECT_EQ(p3[rep.minus[0]].value, QuadValue(0));

  auto k3 = decompose(K(3));
  auto no = strong_cospectral(k3, 0, 1);
  EXPECT_FALSE(no.strongly_cospectral);
  ASSERT_TRUE(no.witness);
  EXPECT_EQ(k3[*no.witness].value, QuadValue(-1));

  auto c4 = decompose(C(4));
  auto anti = strong_cospectral(c4, 0, 2);
  ASSERT_TRUE(anti.strongly_cospectral);
  ASSERT_EQ(anti.plus.size(), 2u);
  EXPECT_EQ(c4[anti.plus[0]].value, QuadValue(2));
  EXPECT_EQ(c4[anti.plus[1]].value, QuadValue(-2));
  ASSERT_EQ(anti.minus.size(), 1u);
  EXPECT_EQ(c4[anti.minus[0]].value, QuadValue(0));

  EXPECT_THROW(strong_cospectral(c4, 1, 1), InvalidParameterError);
}

TEST(strong_cospectral, implies_equal_supports) {
  for (const auto &g : small_corpus()) {
    if (g.order() > 5) continue;
    auto d = decompose(g);
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = u + 1; v < g.order(); ++v) {
        auto rep = strong_cospectral(d, u, v);
        if (!rep.strongly_cospectral) continue;
        EXPECT_EQ(support(d, u).indices, support(d, v).indices);
      }
  }
}
