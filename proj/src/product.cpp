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

#include "pstkit/product.hpp"

#include <complex>
#include <stdexcept>

namespace pstkit {

RadicalMatrix to_radical(const QuadMatrix &m) {
  return m.map<RadicalSum>([](const QuadValue &v) { return RadicalSum(v); });
}

RadicalMatrix to_radical(const IntMatrix &m) {
  return m.map<RadicalSum>([](std::int64_t v) { return RadicalSum(static_cast<long>(v)); });
}

Eigen::MatrixXd to_dense(const RadicalMatrix &m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_bigfloat().convert_to<double>();
  return out;
}

BlockDecomposition::BlockDecomposition(IntMatrix b, IntMatrix m, std::vector<CommonEigenspace> pairs)
    : b_(std::move(b)), m_(std::move(m)), pairs_(std::move(pairs)) {}

RadicalMatrix BlockDecomposition::block(std::size_t r, const IntMatrix &c, const IntMatrix &n) const {
  if (r >= pairs_.size()) throw InvalidParameterError("block index out of range");
  if (c.rows() != n.rows() || c.cols() != n.cols() || !c.square())
    throw SizeMismatchError("C and N must be square of equal size");
  const RadicalSum beta(pairs_[r].beta);
  const RadicalSum mu(pairs_[r].mu);
  RadicalMatrix out(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      out(i, j) = beta * RadicalSum(static_cast<long>(c(i, j))) + mu * RadicalSum(static_cast<long>(n(i, j)));
  return out;
}

Eigen::MatrixXd BlockDecomposition::basis() const {
  const auto n = static_cast<Eigen::Index>(order());
  Eigen::MatrixXd p(n, n);
  Eigen::Index col = 0;
  for (const CommonEigenspace &e : pairs_) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_dense(e.projector));
    if (solver.info() != Eigen::Success) throw EigensolverError("symmetric eigensolver did not converge");
    // Eigenvalues ascend, so the range of the projector is the last `rank` columns.
    const auto rank = static_cast<Eigen::Index>(e.rank);
    p.middleCols(col, rank) = solver.eigenvectors().rightCols(rank);
    col += rank;
  }
  return p;
}

std::vector<std::size_t> BlockDecomposition::owner() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < pairs_.size(); ++r) out.insert(out.end(), pairs_[r].rank, r);
  return out;
}

BlockDecomposition simultaneous_decompose(const IntMatrix &b, const IntMatrix &m) {
  if (!b.square() || b.rows() != m.rows() || b.cols() != m.cols())
    throw SizeMismatchError("B and M must be square of equal size");
  if (!b.symmetric() || !m.symmetric()) throw InvalidParameterError("B and M must be symmetric");
  if (!commute(b, m)) throw NotCommutingError("B and M do not commute");
  const SpectralDecomposition db = decompose(b);
  const SpectralDecomposition dm = decompose(m);
  db.require_complete();
  dm.require_complete();
  // For commuting matrices the joint eigenprojectors are the nonzero
  // products of the individual ones.
  std::vector<CommonEigenspace> pairs;
  for (const Eigenspace &eb : db.eigenspaces()) {
    const RadicalMatrix pb = to_radical(eb.projector);
    for (const Eigenspace &em : dm.eigenspaces()) {
      RadicalMatrix prod = pb * to_radical(em.projector);
      RadicalSum trace;
      for (std::size_t i = 0; i < prod.rows(); ++i) trace += prod(i, i);
      if (trace.is_zero()) continue;  // trace of a projector is its rank
      if (!trace.is_rational() || !is_integer(trace.rational_part()))
        throw std::logic_error("internal error: joint projector has non-integral trace");
      CommonEigenspace ce;
      ce.beta = eb.value;
      ce.mu = em.value;
      ce.rank = trace.rational_part().get_num().get_ui();
      ce.projector = std::move(prod);
      pairs.push_back(std::move(ce));
    }
  }
  return BlockDecomposition(b, m, std::move(pairs));
}

IntMatrix sum_product(const IntMatrix &b, const IntMatrix &c, const IntMatrix &m, const IntMatrix &n) {
  return kronecker(b, c) + kronecker(m, n);
}

UnitaryMatrix sum_product_unitary(const IntMatrix &b, const IntMatrix &c, const IntMatrix &m, const IntMatrix &n,
                                  double t) {
  const BlockDecomposition bm = simultaneous_decompose(b, m);
  const BlockDecomposition cn = simultaneous_decompose(c, n);
  std::vector<Eigen::MatrixXcd> e;
  std::vector<Eigen::MatrixXcd> f;
  for (const auto &p : bm.pairs()) e.push_back(to_dense(p.projector).cast<std::complex<double>>());
  for (const auto &p : cn.pairs()) f.push_back(to_dense(p.projector).cast<std::complex<double>>());
  const auto dim = static_cast<Eigen::Index>(b.rows() * c.rows());
  UnitaryMatrix out;
  out.t = t;
  out.u = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t r = 0; r < bm.size(); ++r) {
    for (std::size_t s = 0; s < cn.size(); ++s) {
      const double theta = bm[r].beta.to_double() * cn[s].beta.to_double() + bm[r].mu.to_double() * cn[s].mu.to_double();
      out.u += std::polar(1.0, t * theta) * kron(e[r], f[s]);
    }
  }
  return out;
}

std::string to_string(RequirementKind k) {
  return k == RequirementKind::periodicity_at_u ? "periodicity_at_u" : "pst_u_to_v";
}

NecessaryResult necessary_check(const BlockDecomposition &bm, std::pair<std::size_t, std::size_t> from,
                                std::pair<std::size_t, std::size_t> to) {
  const auto [w, u] = from;
  const auto [z, v] = to;
  if (w >= bm.order() || z >= bm.order()) throw InvalidParameterError("vertex out of range");
  const RequirementKind kind = u == v ? RequirementKind::periodicity_at_u : RequirementKind::pst_u_to_v;
  NecessaryResult res;
  const std::size_t dim = bm.order();
  for (std::size_t r = 0; r < bm.size(); ++r) {
    const RadicalMatrix &e = bm[r].projector;
    bool same = true;
    bool opposite = true;
    bool zero = true;
    for (std::size_t i = 0; i < dim; ++i) {
      const RadicalSum &a = e(i, w);
      const RadicalSum &b = e(i, z);
      if (!a.is_zero()) zero = false;
      if (!(a == b)) same = false;
      if (!(a + b).is_zero()) opposite = false;
    }
    if (!same && !opposite) {
      res.violation = Violation{"E_r e_w != +-E_r e_z for the joint eigenspace (" + bm[r].beta.str() + ", " +
                                    bm[r].mu.str() + ")",
                                r};
      res.requirements.clear();
      return res;
    }
    if (zero) continue;
    res.requirements.push_back(FactorRequirement{r, kind, same ? 1 : -1});
  }
  return res;
}

NecessaryResult necessary_check(const IntMatrix &b, const IntMatrix &c, const IntMatrix &m, const IntMatrix &n,
                                std::pair<std::size_t, std::size_t> from, std::pair<std::size_t, std::size_t> to) {
  if (!c.square() || c.rows() != n.rows() || c.cols() != n.cols())
    throw SizeMismatchError("C and N must be square of equal size");
  if (from.second >= c.rows() || to.second >= c.rows()) throw InvalidParameterError("vertex out of range");
  return necessary_check(simultaneous_decompose(b, m), from, to);
}

}  // namespace pstkit
