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
#include <vector>

#include "pstkit/graph.hpp"
#include "pstkit/matrix.hpp"
#include "pstkit/qfield.hpp"

namespace pstkit {

using QuadMatrix = Matrix<QuadValue>;
using BigIntMatrix = Matrix<Integer>;

/// Polynomial with integer coefficients, lowest degree first.
struct IntPolynomial {
  std::vector<Integer> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  QuadValue evaluate(const QuadValue &x) const;
  IntPolynomial derivative(unsigned order = 1) const;
  std::string str() const;

  friend bool operator==(const IntPolynomial &a, const IntPolynomial &b) { return a.coeffs == b.coeffs; }
};

IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b);
/// Exact division by a monic divisor; nullopt when the remainder is nonzero.
std::optional<IntPolynomial> divide_exact(const IntPolynomial &a, const IntPolynomial &monic_divisor);
/// Monic gcd over Q of two integer polynomials (itself integral by Gauss).
IntPolynomial polynomial_gcd(const IntPolynomial &a, const IntPolynomial &b);
/// p / gcd(p, p'), monic.
IntPolynomial squarefree_part(const IntPolynomial &p);

/// det(xI - M) for a square integer matrix, exact. Computed by Hessenberg
/// reduction modulo enough word-sized primes and Chinese remaindering.
IntPolynomial char_poly(const IntMatrix &m);
IntPolynomial char_poly(const Graph &g);

BigIntMatrix to_big(const IntMatrix &m);
/// p(M) by Horner's rule.
BigIntMatrix evaluate_at_matrix(const IntPolynomial &p, const IntMatrix &m);

struct Eigenspace {
  /// Exact eigenvalue; meaningful only when `exact`.
  QuadValue value;
  bool exact = false;
  double numeric = 0.0;
  std::size_t multiplicity = 0;
  /// Minimal polynomial over Q (degree 1 or 2) when exact.
  IntPolynomial minimal_polynomial;
  /// Orthogonal projector onto the eigenspace, empty when not exact.
  QuadMatrix projector;
};

/// Spectral decomposition M = sum theta_r E_r of a symmetric integer matrix.
///
/// Eigenvalues that are integers or quadratic integers are recognized exactly
/// and carry exact projectors over Q(sqrt(delta)), each with its own delta.
/// Any other roots are kept only numerically; `complete()` is false then.
/// Eigenspaces are sorted strictly descending.
class SpectralDecomposition {
 public:
  SpectralDecomposition(IntMatrix matrix, IntPolynomial charpoly, std::vector<Eigenspace> spaces);

  const IntMatrix &matrix() const { return matrix_; }
  std::size_t order() const { return matrix_.rows(); }
  const IntPolynomial &characteristic_polynomial() const { return charpoly_; }
  const std::vector<Eigenspace> &eigenspaces() const { return spaces_; }
  const Eigenspace &operator[](std::size_t r) const { return spaces_[r]; }
  std::size_t size() const { return spaces_.size(); }

  bool complete() const;
  /// The single radicand shared by all irrational eigenvalues (1 when all are
  /// integers); nullopt when radicands are mixed or the spectrum is incomplete.
  std::optional<std::int64_t> delta() const;
  /// Throws UnsupportedSpectrumError unless complete().
  void require_complete() const;

 private:
  IntMatrix matrix_;
  IntPolynomial charpoly_;
  std::vector<Eigenspace> spaces_;
};

SpectralDecomposition decompose(const IntMatrix &m);
SpectralDecomposition decompose(const Graph &g);

/// Eigenvalue support of a vertex: exact eigenspaces with E_r e_u != 0.
struct Support {
  std::vector<std::size_t> indices;
  /// Squared norm of the projection of e_u onto all unrecognized eigenspaces,
  /// computed exactly as 1 - sum_r (E_r)_{uu}.
  Rational unrecognized_weight;
  bool touches_unrecognized() const { return unrecognized_weight != 0; }
};

Support support(const SpectralDecomposition &d, std::size_t u);

struct CospectralReport {
  bool strongly_cospectral = false;
  /// False when the answer depends on eigenspaces without exact projectors.
  bool determined = true;
  /// Phi^+ and Phi^- as eigenspace indices.
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  /// Eigenspace where E_r e_u != +-E_r e_v, if any.
  std::optional<std::size_t> witness;
  std::string reason;
};

CospectralReport strong_cospectral(const SpectralDecomposition &d, std::size_t u, std::size_t v);

}  // namespace pstkit
