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
#include "pstkit/qfield.hpp"
#include "pstkit/spectra.hpp"

namespace pstkit {

/// Three-valued answer for questions that may touch unrecognized eigenvalues.
enum class Verdict { yes, no, undetermined };

std::string to_string(Verdict v);

struct ConditionResult {
  bool evaluated = false;
  bool pass = false;
  std::string witness;
};

/// Exact certificate of perfect state transfer u -> v at minimal time tau0.
/// Support eigenvalues are listed in descending order, theta_0 first, and
/// satisfy theta_r = (a + b_r sqrt(delta)) / 2.
struct PSTCertificate {
  std::size_t u = 0;
  std::size_t v = 0;
  std::int64_t delta = 1;
  Integer a;
  std::vector<QuadValue> eigenvalues;
  std::vector<Integer> b;
  /// +1 for Phi^+, -1 for Phi^-.
  std::vector<int> signs;
  Integer g;
  ExactTime tau0{1, 1};
  Phase phase;
  std::array<ConditionResult, 3> conditions;
};

struct PSTFailure {
  /// 1, 2 or 3 for conditions (i), (ii), (iii).
  int condition = 0;
  std::string witness;
  std::array<ConditionResult, 3> conditions;
};

struct PSTResult {
  std::optional<PSTCertificate> certificate;
  std::optional<PSTFailure> failure;
  bool ok() const { return certificate.has_value(); }
};

/// Decides perfect state transfer between distinct vertices u and v exactly.
PSTResult certify_pst(const SpectralDecomposition &d, std::size_t u, std::size_t v);
PSTResult certify_pst(const Graph &g, std::size_t u, std::size_t v);

/// Exact phase of a walk amplitude, when it is a pure phase.
struct PhaseResult {
  Verdict verdict = Verdict::undetermined;
  std::optional<Phase> phase;
  std::string reason;
};

/// Is U(tau) e_u = lambda e_u? Undetermined only when the support of u meets
/// unrecognized eigenvalues.
PhaseResult periodic_at(const SpectralDecomposition &d, std::size_t u, const ExactTime &tau);
/// Is U(tau) e_u = lambda e_v? Reduces to periodic_at when u == v.
PhaseResult transfer_at(const SpectralDecomposition &d, std::size_t u, std::size_t v, const ExactTime &tau);

struct PeriodicityCertificate {
  std::size_t u = 0;
  ExactTime period{1, 1};
  Phase phase;
};

struct PeriodResult {
  Verdict verdict = Verdict::undetermined;
  std::optional<PeriodicityCertificate> certificate;
  /// e_u is itself an eigenvector, so the vertex is periodic at every time
  /// and there is no least period.
  bool every_time = false;
  std::string reason;
};

/// Least period of the walk at u, verified exactly.
PeriodResult minimal_period(const SpectralDecomposition &d, std::size_t u);

}  // namespace pstkit
