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

#include "pstkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace pstkit {

WalkSpectrum::WalkSpectrum(const IntMatrix &a, std::string source) : source_(std::move(source)) {
  if (!a.symmetric()) throw InvalidParameterError("walk oracle needs a symmetric matrix");
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = static_cast<double>(a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw EigensolverError("symmetric eigensolver did not converge");
  values_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

UnitaryMatrix WalkSpectrum::unitary(double t) const {
  if (!std::isfinite(t)) throw InvalidParameterError("time must be finite");
  const Eigen::Index n = values_.size();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) phases(k) = std::polar(1.0, t * values_(k));
  const Eigen::MatrixXcd q = vectors_.cast<std::complex<double>>();
  UnitaryMatrix out;
  out.u = q * phases.asDiagonal() * q.transpose();
  out.t = t;
  out.source = source_;
  return out;
}

std::complex<double> WalkSpectrum::amplitude(std::size_t u, std::size_t v, double t) const {
  std::complex<double> acc = 0;
  const auto iu = static_cast<Eigen::Index>(u);
  const auto iv = static_cast<Eigen::Index>(v);
  for (Eigen::Index k = 0; k < values_.size(); ++k)
    acc += vectors_(iv, k) * vectors_(iu, k) * std::polar(1.0, t * values_(k));
  return acc;
}

UnitaryMatrix unitary(const Graph &g, double t) { return WalkSpectrum(g).unitary(t); }
UnitaryMatrix unitary(const IntMatrix &a, double t) { return WalkSpectrum(a).unitary(t); }

double fidelity(const Graph &g, std::size_t u, std::size_t v, double t) { return fidelity(g.adjacency(), u, v, t); }

double fidelity(const IntMatrix &a, std::size_t u, std::size_t v, double t) {
  if (u >= a.rows() || v >= a.rows()) throw InvalidParameterError("vertex out of range");
  return std::abs(WalkSpectrum(a).amplitude(u, v, t));
}

double unitarity_error(const Eigen::MatrixXcd &u) {
  const Eigen::MatrixXcd d = u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

ScanResult scan(const WalkSpectrum &spectrum, std::size_t u, std::size_t v, double t_max, double step) {
  if (!(step > 0)) throw InvalidParameterError("scan step must be positive");
  ScanResult best;
  best.t_max = t_max;
  best.step = step;
  const auto count = static_cast<long>(std::floor(t_max / step + 1e-9));
  // Precompute Q_vk Q_uk so each grid point costs O(n).
  const Eigen::Index n = spectrum.eigenvalues().size();
  Eigen::VectorXd w(n);
  for (Eigen::Index k = 0; k < n; ++k)
    w(k) = spectrum.eigenvectors()(static_cast<Eigen::Index>(v), k) *
           spectrum.eigenvectors()(static_cast<Eigen::Index>(u), k);
  std::vector<double> values(static_cast<std::size_t>(std::max(count, 0L)));
  for (long i = 1; i <= count; ++i) {
    const double t = static_cast<double>(i) * step;
    std::complex<double> acc = 0;
    for (Eigen::Index k = 0; k < n; ++k) acc += w(k) * std::polar(1.0, t * spectrum.eigenvalues()(k));
    values[static_cast<std::size_t>(i - 1)] = std::abs(acc);
    best.best_fidelity = std::max(best.best_fidelity, values[static_cast<std::size_t>(i - 1)]);
  }
  // Recurring peaks differ only by grid placement; report the earliest one.
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= best.best_fidelity - kScanTieTolerance) {
      best.best_t = static_cast<double>(i + 1) * step;
      break;
    }
  }
  return best;
}

ScanResult scan(const Graph &g, std::size_t u, std::size_t v, double t_max, double step) {
  return scan(WalkSpectrum(g), u, v, t_max, step);
}

VerifyResult verify_transfer(const WalkSpectrum &spectrum, std::size_t u, std::size_t v, const ExactTime &tau,
                             const Phase &phase, double tol, double phase_tol) {
  VerifyResult r;
  const std::complex<double> amp = spectrum.amplitude(u, v, tau.to_double());
  r.fidelity = std::abs(amp);
  r.phase_error = std::abs(amp - phase.value());
  r.pass = r.fidelity >= 1 - tol && r.phase_error <= phase_tol;
  if (!r.pass) {
    r.detail = r.fidelity < 1 - tol ? "fidelity below threshold" : "phase mismatch";
  }
  return r;
}

Eigen::MatrixXcd exp_it(const Eigen::MatrixXd &h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) throw EigensolverError("symmetric eigensolver did not converge");
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) phases(k) = std::polar(1.0, t * solver.eigenvalues()(k));
  const Eigen::MatrixXcd q = solver.eigenvectors().cast<std::complex<double>>();
  return q * phases.asDiagonal() * q.transpose();
}

Eigen::MatrixXd to_dense(const IntMatrix &a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(a(i, j));
  return m;
}

double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw SizeMismatchError("matrix shapes differ");
  return (a - b).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace pstkit
