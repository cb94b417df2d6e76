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

#include "pstkit/switching.hpp"

#include <stdexcept>

#include "pstkit/oracle.hpp"
#include "pstkit/pst.hpp"

namespace pstkit {

std::string to_string(SwitchingCase c) {
  switch (c) {
    case SwitchingCase::antipodal:
      return "antipodal";
    case SwitchingCase::same_layer:
      return "same_layer";
    case SwitchingCase::cross:
      return "cross";
    case SwitchingCase::none:
      return "none";
  }
  return "none";
}

std::string to_string(SwitchingMethod m) {
  switch (m) {
    case SwitchingMethod::commuting_exact:
      return "commuting_exact";
    case SwitchingMethod::block_spectra:
      return "block_spectra";
    case SwitchingMethod::complement_corollary:
      return "complement_corollary";
    case SwitchingMethod::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

SwitchingBlocks switching_blocks(const IntMatrix &a, const IntMatrix &b) {
  if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw SizeMismatchError("switching blocks need square matrices of equal size");
  return {a + b, a - b};
}

SwitchingBlocks switching_blocks(const Graph &x, const Graph &y) {
  if (x.order() != y.order()) throw SizeMismatchError("switching blocks need graphs of equal order");
  return switching_blocks(x.adjacency(), y.adjacency());
}

double block_identity_error(const IntMatrix &a, const IntMatrix &b, double t) {
  const SwitchingBlocks blocks = switching_blocks(a, b);
  const std::size_t n = a.rows();
  IntMatrix layered(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      layered(i, j) = layered(n + i, n + j) = a(i, j);
      layered(i, n + j) = layered(n + i, j) = b(i, j);
    }
  Eigen::MatrixXcd h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  const auto dim = static_cast<Eigen::Index>(n);
  const Eigen::MatrixXcd hi = kron(h, Eigen::MatrixXcd::Identity(dim, dim));
  const Eigen::MatrixXcd conj = hi * WalkSpectrum(layered).unitary(t).u * hi;
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(2 * dim, 2 * dim);
  expect.topLeftCorner(dim, dim) = WalkSpectrum(blocks.sum).unitary(t).u;
  expect.bottomRightCorner(dim, dim) = WalkSpectrum(blocks.diff).unitary(t).u;
  return max_abs_diff(conj, expect);
}

namespace {

struct Candidate {
  SwitchingCase kind;
  ExactTime tau;
  Phase lambda;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

std::optional<Rational> rational_turns(const Phase &a, const Phase &b) {
  const RadicalSum d = a.turns() - b.turns();
  if (!d.is_rational()) return std::nullopt;
  return d.rational_part();
}

/// Smallest k in {first, first + step, ...} with k * turns = target (mod 2).
std::optional<unsigned long> least_power(const Rational &turns, const Rational &target, unsigned long first,
                                         unsigned long step) {
  const UnitPhase rho(turns);
  const UnitPhase goal(target);
  const Integer limit = 2 * rho.order() + 1;
  for (unsigned long k = first; Integer(k) <= limit; k += step)
    if (rho.pow(Integer(k)) == goal) return k;
  return std::nullopt;
}

/// e^{i tau diff} = -1 at the least tau > 0, when tau is representable.
std::optional<ExactTime> half_turn_time(const QuadValue &s, const QuadValue &d) {
  const RadicalSum diff = RadicalSum(s) - RadicalSum(d);
  if (diff.is_zero() || diff.terms().size() != 1) return std::nullopt;
  const auto &[radicand, coeff] = *diff.terms().begin();
  return ExactTime(Rational(1) / abs(coeff), radicand);
}

// Case (i) at vertex u.
std::optional<Candidate> antipodal(const SpectralDecomposition &ds, const SpectralDecomposition &dd, std::size_t u,
                                   std::size_t n, bool &undetermined) {
  const PeriodResult ps = minimal_period(ds, u);
  const PeriodResult pd = minimal_period(dd, u);
  if (ps.verdict == Verdict::undetermined || pd.verdict == Verdict::undetermined) {
    undetermined = true;
    return std::nullopt;
  }
  if (ps.verdict == Verdict::no || pd.verdict == Verdict::no) return std::nullopt;
  std::optional<ExactTime> lattice;
  if (ps.certificate && pd.certificate) {
    const ExactTime &ts = ps.certificate->period;
    const ExactTime &td = pd.certificate->period;
    if (ts.delta() != td.delta()) return std::nullopt;  // incommensurable periods
    lattice = ExactTime(rational_lcm(ts.coeff(), td.coeff()), ts.delta());
  } else if (ps.certificate) {
    lattice = ps.certificate->period;
  } else if (pd.certificate) {
    lattice = pd.certificate->period;
  } else {
    // e_u is an eigenvector of both S and D.
    const QuadValue &s = ds[support(ds, u).indices.front()].value;
    const QuadValue &d = dd[support(dd, u).indices.front()].value;
    if (s == d) return std::nullopt;
    lattice = half_turn_time(s, d);
    if (!lattice) {
      undetermined = true;
      return std::nullopt;
    }
  }
  const PhaseResult a = periodic_at(ds, u, *lattice);
  const PhaseResult b = periodic_at(dd, u, *lattice);
  const auto turns = rational_turns(*a.phase, *b.phase);
  if (!turns) return std::nullopt;
  const auto k = least_power(*turns, 1, 1, 1);
  if (!k) return std::nullopt;
  const ExactTime tau = lattice->scaled(Rational(static_cast<long>(*k)));
  const PhaseResult sa = periodic_at(ds, u, tau);
  const PhaseResult sb = periodic_at(dd, u, tau);
  if (sa.verdict != Verdict::yes || sb.verdict != Verdict::yes || !(*sa.phase == sb.phase->negated()))
    throw std::logic_error("internal error: antipodal candidate does not verify");
  return Candidate{SwitchingCase::antipodal, tau, *sa.phase, {{u, n + u}}};
}

// Cases (ii) and (iii) for the pair u, v.
void transfers(const SpectralDecomposition &ds, const SpectralDecomposition &dd, std::size_t u, std::size_t v,
               std::size_t n, std::vector<Candidate> &out) {
  const PSTResult cs = certify_pst(ds, u, v);
  if (!cs.ok()) return;
  const PSTResult cd = certify_pst(dd, u, v);
  if (!cd.ok()) return;
  const ExactTime &ts = cs.certificate->tau0;
  const ExactTime &td = cd.certificate->tau0;
  if (ts.delta() != td.delta()) return;
  // Common transfer times are odd multiples of both minimal times.
  const Rational ratio = ts.coeff() / td.coeff();
  const Integer r = ratio.get_num();
  const Integer s = ratio.get_den();
  if (mpz_even_p(r.get_mpz_t()) || mpz_even_p(s.get_mpz_t())) return;
  const ExactTime lattice = ts.scaled(Rational(s));
  const PhaseResult a = transfer_at(ds, u, v, lattice);
  const PhaseResult b = transfer_at(dd, u, v, lattice);
  const auto turns = rational_turns(*a.phase, *b.phase);
  if (!turns) return;
  const std::pair<SwitchingCase, Rational> goals[] = {{SwitchingCase::same_layer, 0}, {SwitchingCase::cross, 1}};
  for (const auto &[kind, target] : goals) {
    const auto j = least_power(*turns, target, 1, 2);
    if (!j) continue;
    const ExactTime tau = lattice.scaled(Rational(static_cast<long>(*j)));
    const PhaseResult sa = transfer_at(ds, u, v, tau);
    const PhaseResult sb = transfer_at(dd, u, v, tau);
    const Phase expect = kind == SwitchingCase::same_layer ? *sb.phase : sb.phase->negated();
    if (sa.verdict != Verdict::yes || sb.verdict != Verdict::yes || !(*sa.phase == expect))
      throw std::logic_error("internal error: transfer candidate does not verify");
    if (kind == SwitchingCase::same_layer)
      out.push_back({kind, tau, *sa.phase, {{u, v}, {n + u, n + v}}});
    else
      out.push_back({kind, tau, *sa.phase, {{u, n + v}, {n + u, v}}});
  }
}

std::vector<SwitchingReport> group(std::vector<Candidate> &cands, SwitchingMethod method) {
  std::vector<SwitchingReport> out;
  for (Candidate &c : cands) {
    SwitchingReport *hit = nullptr;
    for (SwitchingReport &r : out)
      if (r.kind == c.kind && *r.tau == c.tau && *r.lambda == c.lambda) hit = &r;
    if (!hit) {
      SwitchingReport r;
      r.kind = c.kind;
      r.tau = c.tau;
      r.lambda = c.lambda;
      r.method = method;
      out.push_back(std::move(r));
      hit = &out.back();
    }
    hit->pairs.insert(hit->pairs.end(), c.pairs.begin(), c.pairs.end());
  }
  return out;
}

}  // namespace

std::vector<SwitchingReport> switching_pst_check(const IntMatrix &a, const IntMatrix &b) {
  if (!a.symmetric() || !b.symmetric()) throw InvalidParameterError("switching check needs symmetric matrices");
  const SwitchingBlocks blocks = switching_blocks(a, b);
  const SpectralDecomposition ds = decompose(blocks.sum);
  const SpectralDecomposition dd = decompose(blocks.diff);
  const SwitchingMethod method = commute(a, b) ? SwitchingMethod::commuting_exact : SwitchingMethod::block_spectra;
  const std::size_t n = a.rows();
  bool undetermined = false;
  std::vector<Candidate> cands;
  for (std::size_t u = 0; u < n; ++u)
    if (auto c = antipodal(ds, dd, u, n, undetermined)) cands.push_back(std::move(*c));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) transfers(ds, dd, u, v, n, cands);
  std::vector<SwitchingReport> out = group(cands, method);
  if (out.empty()) {
    SwitchingReport none;
    none.method = undetermined ? SwitchingMethod::undetermined : method;
    none.reason = undetermined ? "some vertex supports meet eigenvalues that are not quadratic integers"
                               : "no time satisfies any of the three cases";
    out.push_back(std::move(none));
  }
  return out;
}

std::vector<SwitchingReport> switching_pst_check(const Graph &x, const Graph &y) {
  if (x.order() != y.order()) throw SizeMismatchError("switching check needs graphs of equal order");
  return switching_pst_check(x.adjacency(), y.adjacency());
}

std::vector<SwitchingReport> matching_pst_check(const Graph &x) {
  return switching_pst_check(x.adjacency(), IntMatrix::identity(x.order()));
}

ComplementReport complement_switching_check(const Graph &x) {
  const std::size_t n = x.order();
  if (n <= 2) throw InvalidParameterError("complement switching needs more than 2 vertices");
  const IntMatrix &a = x.adjacency();
  IntMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = 2 * a(i, j) + (i == j ? 1 : 0) - 1;
  const SpectralDecomposition dd = decompose(d);
  ComplementReport rep;
  for (const Eigenspace &e : dd.eigenspaces())
    if (e.exact) rep.eigenvalues.push_back(e.value);

  // The spectral condition as stated, per vertex.
  for (std::size_t u = 0; u < n && n % 2 == 0 && !rep.stated_condition; ++u) {
    const Support sup = support(dd, u);
    if (sup.touches_unrecognized()) continue;
    bool ok = true;
    std::optional<unsigned> power;
    for (std::size_t r : sup.indices) {
      const QuadValue s = dd[r].value + QuadValue(1);
      if (!s.is_integer() || s.is_zero()) {
        ok = false;
        break;
      }
      const Integer si = s.x().get_num();
      const unsigned p = two_adic_valuation(si < 0 ? Integer(-si) : si);
      if (power && *power != p) ok = false;
      power = p;
    }
    rep.stated_condition = ok;
  }

  // Exact search: A + B = J - I is periodic exactly at tau = 2 k pi / n with
  // phase e^{-i tau}; case (i) needs e^{i tau theta_r} = -e^{-i tau} on the
  // support of u. Phases repeat after k = n.
  std::vector<Candidate> cands;
  for (std::size_t u = 0; u < n; ++u) {
    const Support sup = support(dd, u);
    if (sup.touches_unrecognized()) continue;
    for (std::size_t k = 1; k <= n; ++k) {
      const ExactTime tau(Rational(static_cast<long>(2 * k), static_cast<long>(n)), 1);
      bool ok = true;
      for (std::size_t r : sup.indices) {
        const RadicalSum turns = tau.turns() * RadicalSum(dd[r].value + QuadValue(1)) - RadicalSum(1);
        const Rational q = turns.rational_part();
        if (!turns.is_rational() || !is_integer(q) || mpz_odd_p(q.get_num().get_mpz_t())) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cands.push_back({SwitchingCase::antipodal, tau, Phase(UnitPhase(-tau.coeff())), {{u, n + u}}});
      break;
    }
  }
  rep.pass = !cands.empty();
  if (rep.pass) {
    rep.reports = group(cands, SwitchingMethod::complement_corollary);
  } else {
    rep.reason = n % 2 ? "odd number of vertices" : "no tau = 2k pi/n gives opposite phases on any vertex support";
  }
  return rep;
}

}  // namespace pstkit
