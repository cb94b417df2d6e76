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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pstkit/graph.hpp"
#include "pstkit/oracle.hpp"
#include "pstkit/product.hpp"
#include "pstkit/pst.hpp"
#include "pstkit/spectra.hpp"

namespace pstkit {

/// exp(i t A(X) kron A(Y)) as sum_r E_r kron U_Y(theta_r t). Eigenspaces of X
/// without exact projectors use numerical ones, so this is total.
UnitaryMatrix tensor_unitary(const SpectralDecomposition &dx, const Graph &y, double t);

/// Transfer in Y from u to v whose support eigenvalues are integer multiples
/// phi_i = b_i sqrt(delta_u) of one square root.
struct YCertificate {
  PSTCertificate pst;
  /// Number of vertices of Y; needed to index Cartesian powers.
  std::size_t order = 0;
  std::vector<Integer> b;
  /// h = gcd of support differences = 2^e * ell with ell odd.
  Integer h;
  unsigned e = 0;
  Integer ell;
  /// Phase at the minimal time, a root of unity.
  UnitPhase lambda;
};

/// Throws UnsupportedSpectrumError when the support is not of the form
/// b_i sqrt(delta) (nonzero common rational part).
YCertificate make_y_certificate(const PSTCertificate &cert, std::size_t order);
/// Convenience: certify_pst on Y, then make_y_certificate. Nullopt when Y has
/// no transfer from u to v.
std::optional<YCertificate> y_certificate(const Graph &y, std::size_t u, std::size_t v);

/// The certificate for Y^{box k} from (u,...,u) to (v,...,v): same time,
/// phase lambda^k, support made of k-fold sums.
YCertificate power_certificate(const YCertificate &y, std::size_t k);

/// Index of (u,...,u) in cartesian_power(Y, k).
std::size_t diagonal_vertex(std::size_t order, std::size_t u, std::size_t k);

struct TensorPSTReport {
  std::size_t w = 0;
  std::size_t z = 0;
  std::size_t u = 0;
  std::size_t v = 0;
  std::int64_t delta_w = 1;
  std::int64_t delta_u = 1;
  std::vector<QuadValue> eigenvalues;  // Phi_w, descending
  std::vector<int> signs;               // +1 on Phi^+, -1 on Phi^-
  std::vector<Integer> t;               // theta_r = t_r sqrt(delta_w)
  std::vector<Integer> odd_parts;       // k_r, signed
  unsigned f = 0;
  unsigned e = 0;
  Integer ell;
  Integer n;
  Integer m;
  /// [0]: w, z strongly cospectral in X; [1..3]: conditions (i)-(iii).
  std::array<ConditionResult, 4> conditions;
  /// 0 for the strong-cospectrality hypothesis, 1-3 for (i)-(iii); -1 on pass.
  int failed_condition = -1;
  std::optional<ExactTime> tau;
  std::optional<UnitPhase> phase;

  bool pass() const { return failed_condition < 0; }
};

/// Decides transfer in X x Y from (w,u) to (z,v) given transfer u -> v in Y.
TensorPSTReport tensor_pst_check(const SpectralDecomposition &dx, std::size_t w, std::size_t z,
                                 const YCertificate &y);
TensorPSTReport tensor_pst_check(const Graph &x, std::size_t w, std::size_t z, const YCertificate &y);

/// One factor-level consequence of transfer in a tensor product.
struct FactorCheck {
  std::string factor;  // "X" or "Y"
  RequirementKind kind = RequirementKind::pst_u_to_v;
  std::size_t from = 0;
  std::size_t to = 0;
  Verdict satisfied = Verdict::undetermined;
  std::string detail;
};

struct TensorNecessaryResult {
  std::vector<FactorCheck> checks;
  /// Index into checks of the first definite failure.
  std::optional<std::size_t> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Transfer (w,u) -> (z,v) in X x Y forces transfer (or periodicity when the
/// endpoints coincide) in each factor.
TensorNecessaryResult tensor_necessary(const Graph &x, const Graph &y, std::pair<std::size_t, std::size_t> from,
                                       std::pair<std::size_t, std::size_t> to);

struct MinPowerResult {
  std::size_t k0 = 0;
  TensorPSTReport report;
};

/// Smallest k >= 1 with transfer in X x Y^{box k} from (w,u,...,u) to
/// (z,v,...,v). Nullopt when no k works; k ranges over one period of the
/// phase, which exhausts every case.
std::optional<MinPowerResult> min_cartesian_power(const SpectralDecomposition &dx, std::size_t w, std::size_t z,
                                                  const YCertificate &y);
std::optional<MinPowerResult> min_cartesian_power(const Graph &x, std::size_t w, const YCertificate &y);

}  // namespace pstkit
