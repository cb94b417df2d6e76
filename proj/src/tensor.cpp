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

#include "pstkit/tensor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pstkit {

namespace {

Eigen::MatrixXd dense_projector(const Eigenspace &e, const WalkSpectrum &numeric) {
  const auto n = static_cast<Eigen::Index>(numeric.order());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  if (e.exact) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        p(i, j) = e.projector(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
    return p;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::abs(numeric.eigenvalues()(k) - e.numeric) > 1e-6) continue;
    const Eigen::VectorXd q = numeric.eigenvectors().col(k);
    p += q * q.transpose();
  }
  return p;
}

Integer abs_value(const Integer &x) { return x < 0 ? Integer(-x) : x; }

void fail(TensorPSTReport &r, int condition, std::string witness) {
  auto &c = r.conditions[static_cast<std::size_t>(condition)];
  c.evaluated = true;
  c.pass = false;
  c.witness = std::move(witness);
  r.failed_condition = condition;
}

void pass(TensorPSTReport &r, int condition) { r.conditions[static_cast<std::size_t>(condition)] = {true, true, {}}; }

}  // namespace

UnitaryMatrix tensor_unitary(const SpectralDecomposition &dx, const Graph &y, double t) {
  const WalkSpectrum wx(dx.matrix());
  const WalkSpectrum wy(y);
  const auto dim = static_cast<Eigen::Index>(dx.order() * y.order());
  UnitaryMatrix out;
  out.t = t;
  out.u = Eigen::MatrixXcd::Zero(dim, dim);
  for (const Eigenspace &e : dx.eigenspaces()) {
    const double theta = e.exact ? e.value.to_double() : e.numeric;
    out.u += kron(dense_projector(e, wx).cast<std::complex<double>>(), wy.unitary(theta * t).u);
  }
  return out;
}

YCertificate make_y_certificate(const PSTCertificate &cert, std::size_t order) {
  if (cert.a != 0)
    throw UnsupportedSpectrumError("support eigenvalues of vertex " + std::to_string(cert.u) +
                                   " are not integer multiples of one square root");
  YCertificate y;
  y.pst = cert;
  y.order = order;
  for (const Integer &b : cert.b) {
    if (mpz_odd_p(b.get_mpz_t()))
      throw UnsupportedSpectrumError("support eigenvalues are half-integer multiples of a square root");
    y.b.push_back(b / 2);
  }
  y.h = cert.g;
  y.e = two_adic_valuation(y.h);
  y.ell = odd_part(y.h);
  const auto root = cert.phase.root_of_unity();
  if (!root) throw std::logic_error("internal error: phase of a pure-radical support is not a root of unity");
  y.lambda = *root;
  return y;
}

std::optional<YCertificate> y_certificate(const Graph &y, std::size_t u, std::size_t v) {
  const PSTResult r = certify_pst(y, u, v);
  if (!r.ok()) return std::nullopt;
  return make_y_certificate(*r.certificate, y.order());
}

std::size_t diagonal_vertex(std::size_t order, std::size_t u, std::size_t k) {
  if (k == 0) throw InvalidParameterError("cartesian power needs k >= 1");
  std::size_t idx = u;
  for (std::size_t i = 1; i < k; ++i) idx = idx * order + u;
  return idx;
}

YCertificate power_certificate(const YCertificate &y, std::size_t k) {
  if (k == 0) throw InvalidParameterError("cartesian power needs k >= 1");
  std::set<Integer, std::greater<>> sums(y.b.begin(), y.b.end());
  for (std::size_t i = 1; i < k; ++i) {
    std::set<Integer, std::greater<>> next;
    for (const Integer &s : sums)
      for (const Integer &b : y.b) next.insert(s + b);
    sums = std::move(next);
  }
  const std::int64_t delta = y.pst.delta;
  YCertificate out;
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) order *= y.order;
  out.order = order;
  PSTCertificate &c = out.pst;
  c.u = diagonal_vertex(y.order, y.pst.u, k);
  c.v = diagonal_vertex(y.order, y.pst.v, k);
  c.delta = delta;
  c.a = 0;
  const Integer top = *sums.begin();
  Integer g = 0;
  for (const Integer &s : sums) {
    const Integer diff = top - s;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), diff.get_mpz_t());
  }
  for (const Integer &s : sums) {
    c.eigenvalues.push_back(delta > 1 ? QuadValue(0, Rational(s), delta) : QuadValue(Rational(s)));
    c.b.push_back(2 * s);
    const Integer q = (top - s) / g;
    c.signs.push_back(mpz_even_p(q.get_mpz_t()) ? 1 : -1);
    out.b.push_back(s);
  }
  c.g = g;
  c.tau0 = y.pst.tau0;
  out.lambda = y.lambda.pow(Integer(static_cast<unsigned long>(k)));
  c.phase = Phase(out.lambda);
  for (auto &cond : c.conditions) cond = {true, true, {}};
  out.h = g;
  out.e = two_adic_valuation(g);
  out.ell = odd_part(g);
  return out;
}

TensorPSTReport tensor_pst_check(const SpectralDecomposition &dx, std::size_t w, std::size_t z,
                                 const YCertificate &y) {
  if (w >= dx.order() || z >= dx.order()) throw InvalidParameterError("vertex out of range");
  TensorPSTReport r;
  r.w = w;
  r.z = z;
  r.u = y.pst.u;
  r.v = y.pst.v;
  r.delta_u = y.pst.delta;
  r.e = y.e;
  r.ell = y.ell;
  r.n = phase_order(y.lambda);

  // Hypothesis: w and z strongly cospectral in X.
  std::vector<std::pair<std::size_t, int>> s;
  if (w == z) {
    const Support sup = support(dx, w);
    if (sup.touches_unrecognized()) {
      fail(r, 1, "support of vertex " + std::to_string(w) + " meets eigenvalues that are not quadratic integers");
      return r;
    }
    for (std::size_t idx : sup.indices) s.emplace_back(idx, 1);
  } else {
    const CospectralReport rep = strong_cospectral(dx, w, z);
    if (!rep.determined) {
      fail(r, 1, rep.reason);
      return r;
    }
    if (!rep.strongly_cospectral) {
      fail(r, 0, rep.reason);
      return r;
    }
    for (std::size_t idx : rep.plus) s.emplace_back(idx, 1);
    for (std::size_t idx : rep.minus) s.emplace_back(idx, -1);
    std::sort(s.begin(), s.end());
  }
  pass(r, 0);

  // (i) theta_r = t_r sqrt(delta_w).
  std::optional<QuadValue> rational_nonzero;
  std::optional<QuadValue> irrational;
  for (const auto &[idx, sign] : s) {
    const QuadValue &theta = dx[idx].value;
    r.eigenvalues.push_back(theta);
    r.signs.push_back(sign);
    if (theta.is_rational()) {
      if (!theta.is_zero()) rational_nonzero = theta;
      continue;
    }
    if (theta.x() != 0 || !is_integer(theta.y())) {
      fail(r, 1, "eigenvalue " + theta.str() + " is not an integer multiple of a square root");
      return r;
    }
    if (irrational && irrational->delta() != theta.delta()) {
      fail(r, 1, "eigenvalues " + irrational->str() + " and " + theta.str() + " lie in different quadratic fields");
      return r;
    }
    irrational = theta;
  }
  if (irrational && rational_nonzero) {
    fail(r, 1, "eigenvalues " + rational_nonzero->str() + " and " + irrational->str() +
                   " are not multiples of one square root");
    return r;
  }
  r.delta_w = irrational ? irrational->delta() : 1;
  for (const QuadValue &theta : r.eigenvalues)
    r.t.push_back(theta.is_rational() ? theta.x().get_num() : theta.y().get_num());
  pass(r, 1);

  // (ii) one power of two across all t_r.
  for (std::size_t k = 0; k < r.t.size(); ++k) {
    if (r.t[k] == 0) {
      fail(r, 2, "0 is in the support of vertex " + std::to_string(w));
      return r;
    }
    const unsigned f = two_adic_valuation(abs_value(r.t[k]));
    if (k == 0) {
      r.f = f;
    } else if (f != r.f) {
      fail(r, 2, "t = " + r.t[0].get_str() + " and t = " + r.t[k].get_str() + " have different powers of two");
      return r;
    }
    r.odd_parts.push_back(odd_part(r.t[k]));
  }
  pass(r, 2);

  // (iii) residues of the odd parts modulo the order of the phase.
  const Integer &n = r.n;
  const Integer half = n / 2;
  if (w != z && mpz_odd_p(n.get_mpz_t())) {
    fail(r, 3, "the phase " + y.lambda.str() + " has odd order " + n.get_str());
    return r;
  }
  auto shift = [&](int sign) { return sign < 0 ? half : Integer(0); };
  r.m = mod_floor(r.odd_parts[0] - shift(r.signs[0]), n);
  for (std::size_t k = 1; k < r.odd_parts.size(); ++k) {
    if (mod_floor(r.odd_parts[k] - shift(r.signs[k]) - r.m, n) != 0) {
      fail(r, 3, "odd part " + r.odd_parts[k].get_str() + " of t = " + r.t[k].get_str() + " is not congruent to " +
                     Integer(r.m + shift(r.signs[k])).get_str() + " modulo " + n.get_str());
      return r;
    }
  }
  pass(r, 3);

  Integer denom = r.ell;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), r.e + r.f);
  r.tau = ExactTime::over_sqrt_product(Rational(Integer(1), denom), r.delta_w, r.delta_u);
  UnitPhase gamma = y.lambda.pow(r.odd_parts[0]);
  if (r.signs[0] < 0) gamma = gamma.negated();
  r.phase = gamma;
  return r;
}

TensorPSTReport tensor_pst_check(const Graph &x, std::size_t w, std::size_t z, const YCertificate &y) {
  return tensor_pst_check(decompose(x), w, z, y);
}

namespace {

FactorCheck factor_check(const std::string &name, const Graph &g, std::size_t a, std::size_t b) {
  FactorCheck c;
  c.factor = name;
  c.from = a;
  c.to = b;
  if (a == b) {
    c.kind = RequirementKind::periodicity_at_u;
    const PeriodResult p = minimal_period(decompose(g), a);
    c.satisfied = p.verdict;
    if (p.certificate)
      c.detail = "periodic at " + p.certificate->period.str();
    else
      c.detail = p.reason;
  } else {
    c.kind = RequirementKind::pst_u_to_v;
    const PSTResult r = certify_pst(g, a, b);
    c.satisfied = r.ok() ? Verdict::yes : Verdict::no;
    c.detail = r.ok() ? "transfer at " + r.certificate->tau0.str() : r.failure->witness;
  }
  return c;
}

}  // namespace

TensorNecessaryResult tensor_necessary(const Graph &x, const Graph &y, std::pair<std::size_t, std::size_t> from,
                                       std::pair<std::size_t, std::size_t> to) {
  if (from.first >= x.order() || to.first >= x.order() || from.second >= y.order() || to.second >= y.order())
    throw InvalidParameterError("vertex out of range");
  TensorNecessaryResult res;
  res.checks.push_back(factor_check("Y", y, from.second, to.second));
  res.checks.push_back(factor_check("X", x, from.first, to.first));
  for (std::size_t i = 0; i < res.checks.size(); ++i) {
    if (res.checks[i].satisfied == Verdict::no) {
      res.violation = i;
      break;
    }
  }
  return res;
}

std::optional<MinPowerResult> min_cartesian_power(const SpectralDecomposition &dx, std::size_t w, std::size_t z,
                                                  const YCertificate &y) {
  const TensorPSTReport base = tensor_pst_check(dx, w, z, y);
  if (base.pass()) return MinPowerResult{1, base};
  if (base.failed_condition < 3) return std::nullopt;  // independent of k
  // Only the phase lambda^k changes with k, and it cycles with period n.
  const Integer n = phase_order(y.lambda);
  for (unsigned long k = 2; Integer(k) <= n; ++k) {
    TensorPSTReport r = tensor_pst_check(dx, w, z, power_certificate(y, k));
    if (r.pass()) return MinPowerResult{k, std::move(r)};
  }
  return std::nullopt;
}

std::optional<MinPowerResult> min_cartesian_power(const Graph &x, std::size_t w, const YCertificate &y) {
  return min_cartesian_power(decompose(x), w, w, y);
}

}  // namespace pstkit
