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

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pstkit/matrix.hpp"
#include "pstkit/oracle.hpp"
#include "pstkit/qfield.hpp"
#include "pstkit/spectra.hpp"

namespace pstkit {

/// Matrix over sums of square roots; entries of common eigenprojectors of two
/// matrices may need two radicands at once.
using RadicalMatrix = Matrix<RadicalSum>;

RadicalMatrix to_radical(const QuadMatrix &m);
RadicalMatrix to_radical(const IntMatrix &m);
Eigen::MatrixXd to_dense(const RadicalMatrix &m);

/// A joint eigenspace of two commuting symmetric matrices B and M:
/// B E = beta E and M E = mu E.
struct CommonEigenspace {
  QuadValue beta;
  QuadValue mu;
  RadicalMatrix projector;
  std::size_t rank = 0;
};

/// Joint spectral decomposition of a commuting pair (B, M), listed in
/// descending order of (beta, mu).
class BlockDecomposition {
 public:
  BlockDecomposition(IntMatrix b, IntMatrix m, std::vector<CommonEigenspace> pairs);

  const IntMatrix &b() const { return b_; }
  const IntMatrix &m() const { return m_; }
  std::size_t order() const { return b_.rows(); }
  const std::vector<CommonEigenspace> &pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  const CommonEigenspace &operator[](std::size_t r) const { return pairs_[r]; }

  /// L_r = beta_r C + mu_r N.
  RadicalMatrix block(std::size_t r, const IntMatrix &c, const IntMatrix &n) const;

  /// Orthonormal P with P^T B P and P^T M P diagonal; columns are grouped by
  /// joint eigenspace, and owner()[j] names the eigenspace of column j.
  Eigen::MatrixXd basis() const;
  std::vector<std::size_t> owner() const;

 private:
  IntMatrix b_;
  IntMatrix m_;
  std::vector<CommonEigenspace> pairs_;
};

/// Throws NotCommutingError when BM != MB and UnsupportedSpectrumError when
/// either spectrum has eigenvalues that are not quadratic integers.
BlockDecomposition simultaneous_decompose(const IntMatrix &b, const IntMatrix &m);

/// exp(i t (B kron C + M kron N)) evaluated as the double sum over joint
/// eigenspaces of (B, M) and (C, N).
UnitaryMatrix sum_product_unitary(const IntMatrix &b, const IntMatrix &c, const IntMatrix &m, const IntMatrix &n,
                                  double t);

/// B kron C + M kron N.
IntMatrix sum_product(const IntMatrix &b, const IntMatrix &c, const IntMatrix &m, const IntMatrix &n);

enum class RequirementKind { periodicity_at_u, pst_u_to_v };

std::string to_string(RequirementKind k);

/// What block L_r must do for the product to transfer (w,u) -> (z,v).
struct FactorRequirement {
  std::size_t block = 0;
  RequirementKind kind = RequirementKind::pst_u_to_v;
  /// E_r e_w = sigma E_r e_z.
  int sigma = 1;
};

struct Violation {
  std::string reason;
  std::optional<std::size_t> witness;
};

struct NecessaryResult {
  std::vector<FactorRequirement> requirements;
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Necessary conditions for transfer (w,u) -> (z,v) in B kron C + M kron N:
/// w, z strongly cospectral for the joint eigenspaces, and one requirement
/// per block with E_r e_w != 0.
NecessaryResult necessary_check(const BlockDecomposition &bm, std::pair<std::size_t, std::size_t> from,
                                std::pair<std::size_t, std::size_t> to);
NecessaryResult necessary_check(const IntMatrix &b, const IntMatrix &c, const IntMatrix &m, const IntMatrix &n,
                                std::pair<std::size_t, std::size_t> from, std::pair<std::size_t, std::size_t> to);

}  // namespace pstkit
