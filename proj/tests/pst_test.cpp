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

#include <cmath>

#include "pstkit/oracle.hpp"
#include "pstkit/pst.hpp"
#include "test_util.hpp"

using namespace pstkit;
using namespace pstkit::testing;

TEST(Certify, K2) {
  const PSTResult r = certify_pst(P(2), 0, 1);
  ASSERT_TRUE(r.ok());
  const PSTCertificate &c = *r.certificate;
  EXPECT_EQ(c.delta, 1);
  EXPECT_EQ(c.g, 2);
  EXPECT_EQ(c.tau0, ExactTime(Rational(1, 2), 1));
  EXPECT_EQ(c.phase, Phase(UnitPhase(Rational(1, 2))));
  EXPECT_EQ(c.phase.str(), "exp(i*pi*1/2)");
  EXPECT_EQ(c.signs, (std::vector<int>{1, -1}));
}

TEST(Certify, P3EndToEnd) {
  const PSTResult r = certify_pst(P(3), 0, 2);
  ASSERT_TRUE(r.ok());
  const PSTCertificate &c = *r.certificate;
  EXPECT_EQ(c.delta, 2);
  EXPECT_EQ(c.g, 1);
  EXPECT_EQ(c.a, 0);
  EXPECT_EQ(c.tau0.str(), "1/1*pi/sqrt(2)");
  EXPECT_EQ(c.phase, Phase(UnitPhase(1)));
  ASSERT_EQ(c.eigenvalues.size(), 3u);
  EXPECT_EQ(c.eigenvalues[1], QuadValue(0));
  EXPECT_EQ(c.signs, (std::vector<int>{1, -1, 1}));
  EXPECT_EQ(c.b, (std::vector<Integer>{2, 0, -2}));
  for (const auto &cond : c.conditions) EXPECT_TRUE(cond.evaluated && cond.pass);
}

TEST(Certify, P4FailsShape) {
  const PSTResult r = certify_pst(P(4), 0, 3);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failure->condition, 2);
  EXPECT_NE(r.failure->witness.find("no common integer a"), std::string::npos) << r.failure->witness;
  EXPECT_TRUE(r.failure->conditions[0].pass);
}

TEST(Certify, FailsStrongCospectrality) {
  // End and interior vertices of P3 have different supports.
  const PSTResult r = certify_pst(P(3), 0, 1);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failure->condition, 1);
  // K3 vertices are cospectral but not strongly cospectral.
  EXPECT_EQ(certify_pst(K(3), 0, 1).failure->condition, 1);
}

TEST(Certify, FailsParity) {
  // C6 antipodal vertices are strongly cospectral with integer spectrum,
  // but the sign pattern does not follow the parity rule.
  const PSTResult r = certify_pst(C(6), 0, 3);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failure->condition, 3);
  EXPECT_LT(scan(C(6), 0, 3, 20.0, 1e-3).best_fidelity, 1 - 1e-6);
}

TEST(Certify, UnrecognizedSupportFailsShape) {
  const PSTResult r = certify_pst(P(6), 0, 5);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failure->condition, 2);
}

TEST(Certify, RejectsSameVertex) { EXPECT_THROW(certify_pst(P(3), 1, 1), InvalidParameterError); }

TEST(Certify, Hypercube) {
  const PSTResult r = certify_pst(Q(3), 0, 7);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.certificate->tau0, ExactTime(Rational(1, 2), 1));
  EXPECT_EQ(r.certificate->phase, Phase(UnitPhase(Rational(3, 2))));
}

TEST(Periodic, Examples) {
  const PhaseResult c4 = periodic_at(decompose(C(4)), 1, ExactTime(1, 1));
  ASSERT_EQ(c4.verdict, Verdict::yes);
  EXPECT_EQ(*c4.phase, Phase(UnitPhase(0)));
  const PhaseResult s3 = periodic_at(decompose(S(3)), 0, ExactTime(1, 3));
  ASSERT_EQ(s3.verdict, Verdict::yes);
  EXPECT_EQ(*s3.phase, Phase(UnitPhase(1)));
  EXPECT_EQ(periodic_at(decompose(P(2)), 0, ExactTime(Rational(1, 3), 1)).verdict, Verdict::no);
  EXPECT_EQ(periodic_at(decompose(P(6)), 0, ExactTime(1, 1)).verdict, Verdict::undetermined);
}

TEST(Periodic, TransferAtMatchesCertificate) {
  const SpectralDecomposition d = decompose(P(3));
  const PhaseResult t = transfer_at(d, 0, 2, ExactTime(1, 2));
  ASSERT_EQ(t.verdict, Verdict::yes);
  EXPECT_EQ(*t.phase, Phase(UnitPhase(1)));
  EXPECT_EQ(transfer_at(d, 0, 2, ExactTime(2, 2)).verdict, Verdict::no);
  EXPECT_EQ(transfer_at(d, 0, 1, ExactTime(1, 2)).verdict, Verdict::no);
}

TEST(MinimalPeriod, Examples) {
  const PeriodResult c4 = minimal_period(decompose(C(4)), 0);
  ASSERT_TRUE(c4.certificate);
  EXPECT_EQ(c4.certificate->period, ExactTime(1, 1));
  EXPECT_EQ(c4.certificate->phase, Phase(UnitPhase(0)));
  const PeriodResult k2 = minimal_period(decompose(P(2)), 0);
  ASSERT_TRUE(k2.certificate);
  EXPECT_EQ(k2.certificate->period, ExactTime(1, 1));
  EXPECT_EQ(k2.certificate->phase, Phase(UnitPhase(1)));
  const PeriodResult s3 = minimal_period(decompose(S(3)), 0);
  ASSERT_TRUE(s3.certificate);
  EXPECT_EQ(s3.certificate->period, ExactTime(1, 3));
  EXPECT_EQ(s3.certificate->phase, Phase(UnitPhase(1)));
  EXPECT_EQ(minimal_period(decompose(P(6)), 0).verdict, Verdict::undetermined);
  EXPECT_TRUE(minimal_period(decompose(E(2)), 0).every_time);
  // Eigenvalues 1 and +-sqrt(2) share no rational multiple: never periodic.
  EXPECT_EQ(minimal_period(decompose(P(5)), 0).verdict, Verdict::no);
}

// Over all small graphs: certificates are sound for the numerical walk, obey
// the odd-multiple law, are symmetric in u and v, and failures with
// recognized spectra show no transfer on a fine grid.
TEST(CertifyProperty, CorpusAgainstOracle) {
  std::size_t certificates = 0;
  for (const Graph &g : small_corpus()) {
    const SpectralDecomposition d = decompose(g);
    const WalkSpectrum w(g);
    for (std::size_t u = 0; u < g.order(); ++u) {
      for (std::size_t v = u + 1; v < g.order(); ++v) {
        const PSTResult r = certify_pst(d, u, v);
        const PSTResult back = certify_pst(d, v, u);
        ASSERT_EQ(r.ok(), back.ok()) << g.name();
        if (!r.ok()) continue;
        ++certificates;
        const PSTCertificate &c = *r.certificate;
        EXPECT_EQ(c.tau0, back.certificate->tau0);
        EXPECT_TRUE(verify_transfer(w, u, v, c.tau0, c.phase).pass) << g.name();
        for (int k = 1; k <= 5; ++k) {
          const double t = k * c.tau0.to_double();
          if (k % 2) {
            EXPECT_GE(std::abs(w.amplitude(u, v, t)), 1 - 1e-9);
          } else {
            EXPECT_GE(std::abs(w.amplitude(u, u, t)), 1 - 1e-9);
            EXPECT_EQ(periodic_at(d, u, c.tau0.scaled(k)).verdict, Verdict::yes);
          }
        }
        EXPECT_EQ(transfer_at(d, u, v, c.tau0.scaled(3)).verdict, Verdict::yes);
        EXPECT_EQ(transfer_at(d, u, v, c.tau0.scaled(2)).verdict, Verdict::no);
      }
    }
  }
  // Pairs with transfer on up to 7 vertices, counted independently by a
  // numerical peak search over (0, 3.2] (the minimal time never exceeds pi).
  EXPECT_EQ(certificates, 107u);
}

TEST(CertifyProperty, FailuresShowNoTransferOnGrid) {
  std::vector<Graph> graphs;
  for (const Graph &g : small_corpus())
    if (g.order() <= 5) graphs.push_back(g);
  for (std::size_t n = 6; n <= 10; ++n) graphs.push_back(C(n));
  graphs.push_back(Q(3));
  graphs.push_back(cartesian(P(3), P(3)));
  graphs.push_back(P(5));
  for (const Graph &g : graphs) {
    const SpectralDecomposition d = decompose(g);
    if (!d.complete()) continue;
    const WalkSpectrum w(g);
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = u + 1; v < g.order(); ++v)
        if (!certify_pst(d, u, v).ok())
          EXPECT_LT(scan(w, u, v, 20.0, 1e-3).best_fidelity, 1 - 1e-6) << g.name() << " " << u << " " << v;
  }
}

TEST(MinimalPeriodProperty, NoSmallerRationalFraction) {
  for (const Graph &g : small_corpus()) {
    if (g.order() > 5) continue;
    const SpectralDecomposition d = decompose(g);
    const WalkSpectrum w(g);
    for (std::size_t u = 0; u < g.order(); ++u) {
      const PeriodResult p = minimal_period(d, u);
      if (!p.certificate) continue;
      const ExactTime &tau = p.certificate->period;
      EXPECT_GE(std::abs(w.amplitude(u, u, tau.to_double())), 1 - 1e-9);
      EXPECT_LT(std::abs(w.amplitude(u, u, tau.to_double()) - p.certificate->phase.value()), 1e-8);
      for (long q = 2; q <= 6; ++q)
        for (long k = 1; k < q; ++k)
          EXPECT_NE(periodic_at(d, u, tau.scaled(Rational(k, q))).verdict, Verdict::yes) << g.name();
    }
  }
}

TEST(CertifyPst, SignedMatrixLargestEigenvalueInMinusSet) {
  // -A(K2): theta_0 = 1 sits on (1, -1), so the parity is read relative to it.
  const IntMatrix m = IntMatrix(2, 2) - P(2).adjacency();
  const PSTResult r = certify_pst(decompose(m), 0, 1);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.certificate->signs, (std::vector<int>{-1, 1}));
  EXPECT_EQ(r.certificate->tau0, ExactTime(Rational(1, 2), 1));
  EXPECT_EQ(r.certificate->phase, Phase(UnitPhase(Rational(3, 2))));  // exp(-i pi A / 2) = -iA
  const WalkSpectrum w(m);
  EXPECT_TRUE(verify_transfer(w, 0, 1, r.certificate->tau0, r.certificate->phase).pass);
}
