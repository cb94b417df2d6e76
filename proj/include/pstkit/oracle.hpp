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
#include <complex>
#include <cstddef>
#include <string>

#include "pstkit/graph.hpp"
#include "pstkit/matrix.hpp"
#include "pstkit/qfield.hpp"

namespace pstkit {

/// Default oracle tolerance on fidelities and unitarity.
inline constexpr double kOracleTolerance = 1e-9;
/// Default tolerance on phase agreement.
inline constexpr double kPhaseTolerance = 1e-8;

struct UnitaryMatrix {
  Eigen::MatrixXcd u;
  double t = 0.0;
  std::string source;
};

/// Dense numerical eigendecomposition A = Q diag(lambda) Q^T of a symmetric
/// integer matrix. Independent of the exact machinery; every exact answer in
/// the library is cross-checked against it.
class WalkSpectrum {
 public:
  explicit WalkSpectrum(const IntMatrix &a, std::string source = {});
  explicit WalkSpectrum(const Graph &g) : WalkSpectrum(g.adjacency(), g.name()) {}

  std::size_t order() const { return static_cast<std::size_t>(values_.size()); }
  const Eigen::VectorXd &eigenvalues() const { return values_; }
  const Eigen::MatrixXd &eigenvectors() const { return vectors_; }

  /// U(t) = exp(i t A) = Q diag(exp(i t lambda)) Q^T.
  UnitaryMatrix unitary(double t) const;
  /// <e_v, U(t) e_u>.
  std::complex<double> amplitude(std::size_t u, std::size_t v, double t) const;

 private:
  Eigen::VectorXd values_;
  Eigen::MatrixXd vectors_;
  std::string source_;
};

UnitaryMatrix unitary(const Graph &g, double t);
UnitaryMatrix unitary(const IntMatrix &a, double t);

/// |<e_v, U(t) e_u>|.
double fidelity(const Graph &g, std::size_t u, std::size_t v, double t);
double fidelity(const IntMatrix &a, std::size_t u, std::size_t v, double t);

/// max |U U* - I| entrywise.
double unitarity_error(const Eigen::MatrixXcd &u);

struct ScanResult {
  double best_t = 0.0;
  double best_fidelity = 0.0;
  double t_max = 0.0;
  double step = 0.0;
};

/// Peaks closer than this are treated as ties by scan(); a grid of step 1e-3
/// misses a true peak by up to ~1e-7.
inline constexpr double kScanTieTolerance = 1e-6;

/// Exhaustive grid t = step, 2 step, ..., t_max. best_fidelity is the grid
/// maximum; best_t is the earliest grid time within kScanTieTolerance of it.
ScanResult scan(const WalkSpectrum &spectrum, std::size_t u, std::size_t v, double t_max, double step);
ScanResult scan(const Graph &g, std::size_t u, std::size_t v, double t_max, double step);

/// Outcome of checking U(tau) e_u = phase * e_v numerically.
struct VerifyResult {
  bool pass = false;
  double fidelity = 0.0;
  double phase_error = 0.0;
  std::string detail;
};

/// Checks |<e_v, U(tau) e_u>| >= 1 - tol and |<e_v, U(tau) e_u> - phase| <= phase_tol.
VerifyResult verify_transfer(const WalkSpectrum &spectrum, std::size_t u, std::size_t v, const ExactTime &tau,
                             const Phase &phase, double tol = kOracleTolerance, double phase_tol = kPhaseTolerance);

/// exp(i t H) for a real symmetric H by dense eigendecomposition.
Eigen::MatrixXcd exp_it(const Eigen::MatrixXd &h, double t);
Eigen::MatrixXd to_dense(const IntMatrix &a);

/// Max entrywise distance between two matrices of equal shape.
double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);
/// Kronecker product of dense complex matrices.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

}  // namespace pstkit
