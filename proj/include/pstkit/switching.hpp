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

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pstkit/graph.hpp"
#include "pstkit/matrix.hpp"
#include "pstkit/qfield.hpp"
#include "pstkit/spectra.hpp"

namespace pstkit {

/// S = A + B and D = A - B for the layered graph [[A, B], [B, A]].
struct SwitchingBlocks {
  IntMatrix sum;
  IntMatrix diff;
};

SwitchingBlocks switching_blocks(const IntMatrix &a, const IntMatrix &b);
SwitchingBlocks switching_blocks(const Graph &x, const Graph &y);

/// max |(H kron I) U(t) (H kron I) - diag(U_S(t), U_D(t))| for the layered
/// graph of (A, B).
double block_identity_error(const IntMatrix &a, const IntMatrix &b, double t);

enum class SwitchingCase {
  antipodal,   // (0,u) <-> (1,u): S and D periodic at u with phases lambda, -lambda
  same_layer,  // (l,u) <-> (l,v): S and D transfer u -> v with equal phases
  cross,       // (l,u) <-> (1-l,v): S and D transfer u -> v with phases lambda, -lambda
  none,
};

enum class SwitchingMethod {
  commuting_exact,       // AB = BA
  block_spectra,         // A, B do not commute but S and D are decided exactly
  complement_corollary,  // Y is the complement of X
  undetermined,
};

std::string to_string(SwitchingCase c);
std::string to_string(SwitchingMethod m);

struct SwitchingReport {
  SwitchingCase kind = SwitchingCase::none;
  std::optional<ExactTime> tau;
  /// Phase of the transfer in the layered graph, equal to the phase of S.
  std::optional<Phase> lambda;
  SwitchingMethod method = SwitchingMethod::undetermined;
  /// Transfer pairs as vertex indices layer * n + u of the layered graph.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::string reason;
};

/// Finds every minimal transfer in the layered graph of (A, B), grouped by
/// (case, tau, lambda). Returns a single `none` report when there is none;
/// its method is `undetermined` when some vertex could not be decided.
std::vector<SwitchingReport> switching_pst_check(const IntMatrix &a, const IntMatrix &b);
std::vector<SwitchingReport> switching_pst_check(const Graph &x, const Graph &y);
/// B = I, the layered graph being matching_cover(X).
std::vector<SwitchingReport> matching_pst_check(const Graph &x);

struct ComplementReport {
  bool pass = false;
  /// n even, and for some u every theta_r + 1 over the support of u in
  /// A(X) - A(complement X) is a nonzero integer with one power of two.
  bool stated_condition = false;
  /// Distinct eigenvalues of 2A + I - J, descending.
  std::vector<QuadValue> eigenvalues;
  /// Reports grouped by tau; empty unless pass.
  std::vector<SwitchingReport> reports;
  std::string reason;
};

/// Transfer in the switching graph of X, decided by an exact search over
/// tau = 2 k pi / n with lambda = e^{-i tau}. Requires n > 2.
ComplementReport complement_switching_check(const Graph &x);

}  // namespace pstkit
