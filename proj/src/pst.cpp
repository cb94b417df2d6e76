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

#include "pstkit/pst.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pstkit {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

namespace {

bool is_even_integer(const RadicalSum &s) {
  if (!s.is_rational()) return false;
  const Rational q = s.rational_part();
  if (!is_integer(q)) return false;
  const Integer n = q.get_num();
  return mpz_even_p(n.get_mpz_t()) != 0;
}

// (index, sign) pairs sorted by eigenspace index, i.e. descending eigenvalue.
using SignedSupport = std::vector<std::pair<std::size_t, int>>;

SignedSupport signed_support(const CospectralReport &rep) {
  SignedSupport out;
  for (std::size_t r : rep.plus) out.emplace_back(r, 1);
  for (std::size_t r : rep.minus) out.emplace_back(r, -1);
  std::sort(out.begin(), out.end());
  return out;
}

// Checks sigma_r e^{i tau theta_r} is the same for every r.
PhaseResult common_phase(const SpectralDecomposition &d, const SignedSupport &s, const ExactTime &tau) {
  PhaseResult res;
  const RadicalSum turns = tau.turns();
  auto angle = [&](const std::pair<std::size_t, int> &rs) {
    RadicalSum t = turns * RadicalSum(d[rs.first].value);
    if (rs.second < 0) t += RadicalSum(1);
    return t;
  };
  const RadicalSum first = angle(s.front());
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!is_even_integer(angle(s[k]) - first)) {
      res.verdict = Verdict::no;
      res.reason = "phases at eigenvalues " + d[s.front().first].value.str() + " and " + d[s[k].first].value.str() +
                   " differ";
      return res;
    }
  }
  res.verdict = Verdict::yes;
  res.phase = Phase(first);
  return res;
}

PSTResult fail(int condition, std::string witness, std::array<ConditionResult, 3> conditions) {
  auto &c = conditions[static_cast<std::size_t>(condition - 1)];
  c.evaluated = true;
  c.pass = false;
  c.witness = witness;
  PSTResult res;
  res.failure = PSTFailure{condition, std::move(witness), std::move(conditions)};
  return res;
}

}  // namespace

PSTResult certify_pst(const SpectralDecomposition &d, std::size_t u, std::size_t v) {
  if (u == v) throw InvalidParameterError("certify_pst needs distinct vertices; use periodic_at for u == v");
  if (u >= d.order() || v >= d.order()) throw InvalidParameterError("vertex out of range");
  std::array<ConditionResult, 3> cond;

  // (i) strong cospectrality, decided on the recognized eigenspaces first.
  const CospectralReport rep = strong_cospectral(d, u, v);
  if (!rep.determined) {
    cond[0].witness = rep.reason;
    return fail(2, "support of vertex " + std::to_string(u) + " meets eigenvalues that are not quadratic integers",
                cond);
  }
  if (!rep.strongly_cospectral) return fail(1, rep.reason, cond);
  cond[0] = {true, true, {}};

  // (ii) theta_r = (a + b_r sqrt(delta)) / 2 with one a and one delta.
  const SignedSupport s = signed_support(rep);
  std::int64_t delta = 1;
  std::optional<std::size_t> irrational_at;
  for (const auto &[r, sign] : s) {
    const QuadValue &t = d[r].value;
    if (t.is_rational()) continue;
    if (!irrational_at) {
      irrational_at = r;
      delta = t.delta();
    } else if (t.delta() != delta) {
      return fail(2,
                  "eigenvalues " + d[*irrational_at].value.str() + " and " + t.str() + " lie in different quadratic fields",
                  cond);
    }
  }
  const QuadValue &theta0 = d[s.front().first].value;
  PSTCertificate cert;
  cert.u = u;
  cert.v = v;
  cert.delta = delta;
  cert.a = 0;
  if (delta > 1) {
    const Rational a = 2 * theta0.x();
    if (!is_integer(a)) return fail(2, "eigenvalue " + theta0.str() + " is not a quadratic integer", cond);
    cert.a = a.get_num();
  }
  for (const auto &[r, sign] : s) {
    const QuadValue &t = d[r].value;
    if (delta > 1 && t.x() != theta0.x())
      return fail(2, "eigenvalues " + theta0.str() + " and " + t.str() + " have no common integer a", cond);
    const Rational b = delta > 1 ? Rational(2 * t.y()) : Rational(2 * t.x());
    if (!is_integer(b)) return fail(2, "eigenvalue " + t.str() + " is not a quadratic integer", cond);
    cert.eigenvalues.push_back(t);
    cert.b.push_back(b.get_num());
    cert.signs.push_back(sign);
  }
  cond[1] = {true, true, {}};

  // (iii) parity of (theta_0 - theta_r) / (g sqrt(delta)) matches the sign
  // relative to theta_0 (always Phi+ for graphs, not for signed matrices).
  std::vector<Integer> diffs;
  Integer g = 0;
  for (const Integer &b : cert.b) {
    const Rational diff = Rational(cert.b.front() - b) / 2;
    if (!is_integer(diff)) return fail(2, "differences of support eigenvalues are not integer multiples", cond);
    diffs.push_back(diff.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), diffs.back().get_mpz_t());
  }
  if (g == 0) return fail(3, "support of vertex " + std::to_string(u) + " is a single eigenvalue", cond);
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    const Integer q = diffs[k] / g;
    const bool even = mpz_even_p(q.get_mpz_t()) != 0;
    const bool same = cert.signs[k] == cert.signs.front();
    if (even != same) {
      return fail(3,
                  "eigenvalue " + cert.eigenvalues[k].str() + (same ? " has" : " does not have") +
                      " the sign of theta_0" +
                      " but (theta_0 - theta_r)/(g sqrt(delta)) = " + q.get_str() + " is " + (even ? "even" : "odd"),
                  cond);
    }
  }
  cond[2] = {true, true, {}};

  cert.g = g;
  cert.tau0 = ExactTime(Rational(Integer(1), g), delta);
  cert.phase = phase_at(cert.tau0, theta0);
  if (cert.signs.front() < 0) cert.phase = cert.phase.negated();
  cert.conditions = cond;

  // The certificate must reproduce itself through the direct phase check.
  const PhaseResult check = common_phase(d, s, cert.tau0);
  if (check.verdict != Verdict::yes || !(*check.phase == cert.phase))
    throw std::logic_error("internal error: certificate does not transfer at tau0");

  PSTResult res;
  res.certificate = std::move(cert);
  return res;
}

PSTResult certify_pst(const Graph &g, std::size_t u, std::size_t v) {
  if (u == v) throw InvalidParameterError("certify_pst needs distinct vertices; use periodic_at for u == v");
  if (u >= g.order() || v >= g.order()) throw InvalidParameterError("vertex out of range");
  return certify_pst(decompose(g), u, v);
}

PhaseResult periodic_at(const SpectralDecomposition &d, std::size_t u, const ExactTime &tau) {
  if (u >= d.order()) throw InvalidParameterError("vertex out of range");
  const Support sup = support(d, u);
  if (sup.touches_unrecognized()) {
    PhaseResult res;
    res.reason = "support of vertex " + std::to_string(u) + " meets eigenvalues that are not quadratic integers";
    return res;
  }
  SignedSupport s;
  for (std::size_t r : sup.indices) s.emplace_back(r, 1);
  return common_phase(d, s, tau);
}

PhaseResult transfer_at(const SpectralDecomposition &d, std::size_t u, std::size_t v, const ExactTime &tau) {
  if (u == v) return periodic_at(d, u, tau);
  const CospectralReport rep = strong_cospectral(d, u, v);
  PhaseResult res;
  if (!rep.determined) {
    res.reason = rep.reason;
    return res;
  }
  if (!rep.strongly_cospectral) {
    res.verdict = Verdict::no;
    res.reason = "not strongly cospectral: " + rep.reason;
    return res;
  }
  return common_phase(d, signed_support(rep), tau);
}

PeriodResult minimal_period(const SpectralDecomposition &d, std::size_t u) {
  if (u >= d.order()) throw InvalidParameterError("vertex out of range");
  PeriodResult res;
  const Support sup = support(d, u);
  if (sup.touches_unrecognized()) {
    res.reason = "support of vertex " + std::to_string(u) + " meets eigenvalues that are not quadratic integers";
    return res;
  }
  const QuadValue &theta0 = d[sup.indices.front()].value;
  if (sup.indices.size() == 1) {
    res.verdict = Verdict::yes;
    res.every_time = true;
    res.reason = "e_" + std::to_string(u) + " is an eigenvector for " + theta0.str();
    return res;
  }
  std::int64_t delta = 1;
  for (std::size_t r : sup.indices) {
    const QuadValue &t = d[r].value;
    if (t.is_rational()) continue;
    if (delta == 1) {
      delta = t.delta();
    } else if (t.delta() != delta) {
      res.verdict = Verdict::no;
      res.reason = "support mixes quadratic fields";
      return res;
    }
  }
  Rational g = 0;
  for (std::size_t r : sup.indices) {
    const QuadValue &t = d[r].value;
    if (delta > 1 && t.x() != theta0.x()) {
      res.verdict = Verdict::no;
      res.reason = "eigenvalues " + theta0.str() + " and " + t.str() + " have different rational parts";
      return res;
    }
    const Rational diff = delta > 1 ? Rational(theta0.y() - t.y()) : Rational(theta0.x() - t.x());
    g = rational_gcd(g, diff);
  }
  ExactTime period(Rational(2) / g, delta);
  PhaseResult check = periodic_at(d, u, period);
  if (check.verdict != Verdict::yes) throw std::logic_error("internal error: constructed period does not verify");
  const unsigned bound = is_integer(g) ? two_adic_valuation(g.get_num()) : 0;
  for (unsigned k = 0; k < bound; ++k) {
    const ExactTime half = period.scaled(Rational(1, 2));
    PhaseResult h = periodic_at(d, u, half);
    if (h.verdict != Verdict::yes) break;
    period = half;
    check = std::move(h);
  }
  res.verdict = Verdict::yes;
  res.certificate = PeriodicityCertificate{u, period, *check.phase};
  return res;
}

}  // namespace pstkit
