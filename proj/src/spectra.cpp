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

#include "pstkit/spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace pstkit {

namespace {

struct Cluster {
  double center = 0.0;
  std::size_t multiplicity = 0;
  BigFloat refined;
  bool used = false;
};

BigFloat eval_big(const IntPolynomial &p, const BigFloat &x) {
  BigFloat acc = 0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + BigFloat(it->get_str());
  return acc;
}

/// Newton refinement of a root of multiplicity m: the (m-1)-th derivative
/// has a simple root there.
BigFloat refine_root(const IntPolynomial &p, double start, std::size_t multiplicity) {
  const IntPolynomial f = p.derivative(static_cast<unsigned>(multiplicity - 1));
  const IntPolynomial df = f.derivative();
  BigFloat x = start;
  const BigFloat eps("1e-45");
  for (int it = 0; it < 100; ++it) {
    const BigFloat d = eval_big(df, x);
    if (d == 0) break;
    const BigFloat step = eval_big(f, x) / d;
    x -= step;
    if (boost::multiprecision::abs(step) < eps) break;
  }
  return x;
}

std::optional<Integer> near_integer(const BigFloat &v) {
  const BigFloat r = boost::multiprecision::round(v);
  if (boost::multiprecision::abs(v - r) > BigFloat("1e-20")) return std::nullopt;
  return Integer(r.convert_to<std::string>());
}

bool is_perfect_square(const Integer &n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

/// Divides `residual` by f exactly `mult` times; leaves it untouched and
/// returns false unless f has exactly that multiplicity.
bool strip_factor(IntPolynomial &residual, const IntPolynomial &f, std::size_t mult) {
  IntPolynomial r = residual;
  for (std::size_t k = 0; k < mult; ++k) {
    auto q = divide_exact(r, f);
    if (!q) return false;
    r = std::move(*q);
  }
  if (divide_exact(r, f)) return false;
  residual = std::move(r);
  return true;
}

std::vector<Cluster> numeric_clusters(const IntMatrix &m) {
  const std::size_t n = m.rows();
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw EigensolverError("symmetric eigensolver did not converge");
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end());
  std::vector<Cluster> clusters;
  for (double v : ev) {
    if (!clusters.empty() && std::abs(v - clusters.back().center) < 1e-6 * std::max(1.0, std::abs(v))) {
      auto &c = clusters.back();
      c.center = (c.center * static_cast<double>(c.multiplicity) + v) / static_cast<double>(c.multiplicity + 1);
      ++c.multiplicity;
    } else {
      clusters.push_back({v, 1, {}, false});
    }
  }
  return clusters;
}

QuadMatrix rational_projector(const BigIntMatrix &q_of_a, const Rational &scale) {
  const std::size_t n = q_of_a.rows();
  QuadMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (q_of_a(i, j) == 0) continue;
      e(i, j) = QuadValue(Rational(q_of_a(i, j)) / scale);
    }
  return e;
}

}  // namespace

SpectralDecomposition::SpectralDecomposition(IntMatrix matrix, IntPolynomial charpoly, std::vector<Eigenspace> spaces)
    : matrix_(std::move(matrix)), charpoly_(std::move(charpoly)), spaces_(std::move(spaces)) {}

bool SpectralDecomposition::complete() const {
  return std::all_of(spaces_.begin(), spaces_.end(), [](const Eigenspace &s) { return s.exact; });
}

std::optional<std::int64_t> SpectralDecomposition::delta() const {
  if (!complete()) return std::nullopt;
  std::int64_t d = 1;
  for (const auto &s : spaces_) {
    if (s.value.delta() == 1) continue;
    if (d != 1 && d != s.value.delta()) return std::nullopt;
    d = s.value.delta();
  }
  return d;
}

void SpectralDecomposition::require_complete() const {
  for (const auto &s : spaces_)
    if (!s.exact)
      throw UnsupportedSpectrumError("eigenvalue " + std::to_string(s.numeric) +
                                     " is neither an integer nor a quadratic integer");
}

SpectralDecomposition decompose(const IntMatrix &m) {
  if (!m.symmetric()) throw InvalidParameterError("decompose needs a symmetric matrix");
  const std::size_t n = m.rows();
  IntPolynomial cp = char_poly(m);
  std::vector<Cluster> clusters = numeric_clusters(m);
  for (auto &c : clusters) c.refined = refine_root(cp, c.center, c.multiplicity);

  IntPolynomial residual = cp;
  IntPolynomial minimal{{1}};
  std::vector<Eigenspace> spaces;

  // Integer roots.
  for (auto &c : clusters) {
    auto k = near_integer(c.refined);
    if (!k) continue;
    IntPolynomial f{{-*k, 1}};
    if (!strip_factor(residual, f, c.multiplicity)) continue;
    c.used = true;
    Eigenspace s;
    s.value = QuadValue(Rational(*k));
    s.exact = true;
    s.numeric = c.center;
    s.multiplicity = c.multiplicity;
    s.minimal_polynomial = f;
    minimal = minimal * f;
    spaces.push_back(std::move(s));
  }

  // Conjugate pairs of quadratic integers: x^2 - s x + p with s, p integers.
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].used) continue;
    for (std::size_t j = i + 1; j < clusters.size(); ++j) {
      if (clusters[j].used || clusters[j].multiplicity != clusters[i].multiplicity) continue;
      auto s = near_integer(clusters[i].refined + clusters[j].refined);
      auto p = near_integer(clusters[i].refined * clusters[j].refined);
      if (!s || !p) continue;
      const Integer disc = (*s) * (*s) - 4 * (*p);
      if (disc <= 0 || is_perfect_square(disc)) continue;
      IntPolynomial f{{*p, -*s, 1}};
      if (!strip_factor(residual, f, clusters[i].multiplicity)) continue;
      clusters[i].used = clusters[j].used = true;
      const auto split = squarefree_split(disc);
      // Roots (s -+ c*sqrt(d))/2; cluster j holds the larger one.
      for (int sign : {+1, -1}) {
        Eigenspace e;
        e.value = QuadValue::half_form(*s, sign * split.square_root, split.kernel);
        e.exact = true;
        e.numeric = sign > 0 ? clusters[j].center : clusters[i].center;
        e.multiplicity = clusters[i].multiplicity;
        e.minimal_polynomial = f;
        spaces.push_back(std::move(e));
      }
      minimal = minimal * f;
      break;
    }
  }

  for (const auto &c : clusters) {
    if (c.used) continue;
    Eigenspace e;
    e.exact = false;
    e.numeric = c.center;
    e.multiplicity = c.multiplicity;
    spaces.push_back(std::move(e));
  }
  if (residual.degree() > 0) minimal = minimal * squarefree_part(residual);

  // Projectors: E = q(A) / q(theta) with q = minimal / (x - theta); for a
  // conjugate pair q = minimal / f and E = q(A)(A - theta' I) / (q(theta)(theta - theta')).
  for (std::size_t r = 0; r < spaces.size(); ++r) {
    auto &s = spaces[r];
    if (!s.exact || s.projector.rows() != 0) continue;
    auto q = divide_exact(minimal, s.minimal_polynomial);
    if (!q) throw Error("minimal polynomial does not divide");
    const BigIntMatrix qa = evaluate_at_matrix(*q, m);
    if (s.minimal_polynomial.degree() == 1) {
      s.projector = rational_projector(qa, q->evaluate(s.value).x());
      continue;
    }
    const QuadValue theta = s.value;
    const QuadValue other = theta.conj();
    const QuadValue scale = q->evaluate(theta) * (theta - other);
    const BigIntMatrix aqa = to_big(m) * qa;
    QuadMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (aqa(i, j) == 0 && qa(i, j) == 0) continue;
        e(i, j) = (QuadValue(Rational(aqa(i, j))) - other * QuadValue(Rational(qa(i, j)))) / scale;
      }
    // The conjugate eigenvalue's projector is the Galois image.
    for (auto &t : spaces) {
      if (t.exact && t.projector.rows() == 0 && t.value == other) {
        t.projector = e.map<QuadValue>([](const QuadValue &v) { return v.conj(); });
      }
    }
    s.projector = std::move(e);
  }

  std::sort(spaces.begin(), spaces.end(), [](const Eigenspace &a, const Eigenspace &b) {
    if (a.exact && b.exact) return a.value > b.value;
    return a.numeric > b.numeric;
  });
  return SpectralDecomposition(m, std::move(cp), std::move(spaces));
}

SpectralDecomposition decompose(const Graph &g) { return decompose(g.adjacency()); }

Support support(const SpectralDecomposition &d, std::size_t u) {
  if (u >= d.order()) throw InvalidParameterError("vertex out of range");
  Support s;
  Rational covered = 0;
  for (std::size_t r = 0; r < d.size(); ++r) {
    if (!d[r].exact) continue;
    const QuadValue &e = d[r].projector(u, u);
    if (e.is_zero()) continue;
    s.indices.push_back(r);
    // Irrational parts cancel between conjugate eigenspaces.
    covered += e.x();
  }
  s.unrecognized_weight = 1 - covered;
  return s;
}

CospectralReport strong_cospectral(const SpectralDecomposition &d, std::size_t u, std::size_t v) {
  if (u == v) throw InvalidParameterError("strong cospectrality needs two distinct vertices");
  if (u >= d.order() || v >= d.order()) throw InvalidParameterError("vertex out of range");
  CospectralReport rep;
  const std::size_t n = d.order();
  for (std::size_t r = 0; r < d.size(); ++r) {
    if (!d[r].exact) continue;
    const QuadMatrix &e = d[r].projector;
    if (e(u, u).is_zero() && e(v, v).is_zero()) continue;
    bool same = true;
    bool opposite = true;
    for (std::size_t i = 0; i < n && (same || opposite); ++i) {
      if (!(e(i, u) == e(i, v))) same = false;
      if (!(e(i, u) == -e(i, v))) opposite = false;
    }
    if (same) {
      rep.plus.push_back(r);
    } else if (opposite) {
      rep.minus.push_back(r);
    } else {
      rep.strongly_cospectral = false;
      rep.witness = r;
      rep.reason = "E_r e_u != +-E_r e_v at eigenvalue " + d[r].value.str();
      rep.plus.clear();
      rep.minus.clear();
      return rep;
    }
  }
  const Support su = support(d, u);
  const Support sv = support(d, v);
  if (su.unrecognized_weight != sv.unrecognized_weight) {
    rep.strongly_cospectral = false;
    rep.reason = "projections onto unrecognized eigenspaces differ in norm";
    rep.plus.clear();
    rep.minus.clear();
    return rep;
  }
  if (su.touches_unrecognized()) {
    rep.determined = false;
    rep.strongly_cospectral = false;
    rep.reason = "support meets eigenvalues that are not quadratic integers";
    return rep;
  }
  rep.strongly_cospectral = true;
  return rep;
}

}  // namespace pstkit
