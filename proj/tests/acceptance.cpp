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

// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and time
// limits are pinned below. The process exits non-zero only for failures that
// are not listed in kKnownUnattainable.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pstkit/oracle.hpp"
#include "pstkit/product.hpp"
#include "pstkit/pst.hpp"
#include "pstkit/switching.hpp"
#include "pstkit/tensor.hpp"
#include "test_util.hpp"

using namespace pstkit;
using namespace pstkit::testing;

namespace {

constexpr double kFidelityTol = 1e-9;   // "fidelity >= 1 - 1e-9"
constexpr double kPhaseTol = 1e-8;      // phase match
constexpr double kNoTransfer = 1e-6;    // failing pairs stay below 1 - 1e-6 on the grid
constexpr double kCoarseNoTransfer = 1e-3;
constexpr double kMatrixTol = 1e-9;     // max-entry deviations
constexpr double kScanEnd = 20.0;
constexpr double kScanStep = 1e-3;

// Criteria that cannot be met as written; see README ("Acceptance suite").
const std::set<int> kKnownUnattainable = {6};

const double kPi = std::acos(-1.0);

/// Collects sub-check failures for one criterion.
class Outcome {
 public:
  void require(bool ok, const std::string &what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string &s) { notes_.push_back(s); }
  bool pass() const { return failures_.empty(); }
  std::string detail() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < failures_.size(); ++i) os << (i ? "; " : "") << failures_[i];
    if (!failures_.empty() && !notes_.empty()) os << " | ";
    for (std::size_t i = 0; i < notes_.size(); ++i) os << (i ? "; " : "") << notes_[i];
    return os.str();
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

double return_fidelity(const Graph &g, std::size_t u, double t) { return std::abs(unitary(g, t).u(u, u)); }

// 1. K2: minimal time, phase, odd multiples and return.
Outcome path2() {
  Outcome o;
  const Graph g = P(2);
  const PSTResult r = certify_pst(g, 0, 1);
  o.require(r.ok(), "certify_pst(P2, 0, 1) failed");
  if (!r.ok()) return o;
  const PSTCertificate &c = *r.certificate;
  o.require(c.tau0 == ExactTime(Rational(1, 2), 1), "tau0 = " + c.tau0.str() + ", expected pi/2");
  o.require(c.phase == Phase(UnitPhase(Rational(1, 2))), "phase = " + c.phase.str() + ", expected i");
  const double t = c.tau0.to_double();
  const double f1 = fidelity(g, 0, 1, t), f3 = fidelity(g, 0, 1, 3 * t), f2 = return_fidelity(g, 0, 2 * t);
  o.require(f1 >= 1 - kFidelityTol, "fidelity at tau0 = " + fmt(f1));
  o.require(f3 >= 1 - kFidelityTol, "fidelity at 3 tau0 = " + fmt(f3));
  o.require(f2 >= 1 - kFidelityTol, "return fidelity at 2 tau0 = " + fmt(f2));
  const VerifyResult v = verify_transfer(WalkSpectrum(g), 0, 1, c.tau0, c.phase, kFidelityTol, kPhaseTol);
  o.require(v.pass, "oracle phase check: " + v.detail);
  o.note("tau0 = " + c.tau0.str() + ", phase " + c.phase.str());
  return o;
}

// 2. P3 transfers; P4 and P5 do not.
Outcome path3() {
  Outcome o;
  const Graph g = P(3);
  const PSTResult r = certify_pst(g, 0, 2);
  o.require(r.ok(), "certify_pst(P3, 0, 2) failed");
  if (r.ok()) {
    const PSTCertificate &c = *r.certificate;
    o.require(c.tau0 == ExactTime(Rational(1), 2), "tau0 = " + c.tau0.str() + ", expected pi/sqrt(2)");
    o.require(c.phase == Phase(UnitPhase(Rational(1))), "phase = " + c.phase.str() + ", expected -1");
    std::vector<QuadValue> minus;
    for (std::size_t k = 0; k < c.signs.size(); ++k)
      if (c.signs[k] < 0) minus.push_back(c.eigenvalues[k]);
    o.require(minus == std::vector<QuadValue>{QuadValue(0)}, "Phi- is not {0}");
    const VerifyResult v = verify_transfer(WalkSpectrum(g), 0, 2, c.tau0, c.phase, kFidelityTol, kPhaseTol);
    o.require(v.pass, "P3 oracle: " + v.detail);
  }
  for (std::size_t n : {4u, 5u}) {
    const Graph p = P(n);
    const std::string name = "P" + std::to_string(n);
    o.require(!certify_pst(p, 0, n - 1).ok(), "certify_pst accepts " + name);
    const double best = scan(p, 0, n - 1, kScanEnd, kScanStep).best_fidelity;
    o.require(best < 1 - kNoTransfer, name + " grid maximum " + fmt(best));
    o.note(name + " grid maximum " + fmt(best));
  }
  return o;
}

IntMatrix random_circulant(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::vector<std::int64_t> c(n);
  for (std::size_t k = 0; k <= n / 2; ++k) c[k] = c[(n - k) % n] = coeff(rng);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c[(j + n - i) % n];
  return m;
}

// 3. Projector-sum unitary of B kron C + M kron N, and the Cartesian law.
Outcome sum_products() {
  Outcome o;
  // Circulant spectra are quadratic exactly for these orders (7 is cubic).
  static const std::size_t sizes[] = {2, 3, 4, 5, 6, 8};
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(sizes) - 1);
  std::uniform_real_distribution<double> time(0.0, 2 * kPi);
  double worst = 0, worst_cart = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t nb = sizes[pick(rng)], nc = sizes[pick(rng)];
    // Circulants of one size commute.
    const IntMatrix b = random_circulant(rng, nb), m = random_circulant(rng, nb);
    const IntMatrix c = random_circulant(rng, nc), n = random_circulant(rng, nc);
    const double t = time(rng);
    const UnitaryMatrix u = sum_product_unitary(b, c, m, n, t);
    worst = std::max(worst, max_abs_diff(u.u, exp_it(to_dense(sum_product(b, c, m, n)), t)));
    const Eigen::MatrixXcd cart = exp_it(to_dense(sum_product(b, IntMatrix::identity(nc), IntMatrix::identity(nb), c)), t);
    worst_cart = std::max(worst_cart, max_abs_diff(cart, kron(exp_it(to_dense(b), t), exp_it(to_dense(c), t))));
  }
  o.require(worst < kMatrixTol, "projector-sum deviation " + fmt(worst));
  o.require(worst_cart < kMatrixTol, "Cartesian deviation " + fmt(worst_cart));
  o.note("50 instances, max deviation " + fmt(worst) + ", Cartesian " + fmt(worst_cart));
  return o;
}

// 4. Tensor-product walk against dense exponentiation.
Outcome tensor_unitaries() {
  Outcome o;
  std::mt19937_64 rng(64);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  double worst = 0;
  for (int done = 0; done < 20;) {
    const std::size_t nx = size(rng), ny = size(rng);
    if (nx * ny > 64) continue;
    const Graph x = random_graph(rng, nx, 0.5), y = random_graph(rng, ny, 0.5);
    const double t = time(rng);
    worst = std::max(worst, max_abs_diff(tensor_unitary(decompose(x), y, t).u, unitary(tensor(x, y), t).u));
    ++done;
  }
  o.require(worst < kMatrixTol, "max deviation " + fmt(worst));
  o.note("20 pairs, max deviation " + fmt(worst));
  return o;
}

// 5. K4 x C4, and checker/oracle agreement over small connected X with Y = C4.
Outcome tensor_transfer() {
  Outcome o;
  const YCertificate yc = *y_certificate(C(4), 0, 2);
  const TensorPSTReport r = tensor_pst_check(K(4), 0, 0, yc);
  o.require(r.pass(), "K4 x C4 fails the check");
  if (r.pass()) {
    o.require(*r.tau == ExactTime(Rational(1, 2), 1), "tau = " + r.tau->str());
    o.require(*r.phase == UnitPhase(Rational(1)), "phase = " + r.phase->str());
    const VerifyResult v =
        verify_transfer(WalkSpectrum(tensor(K(4), C(4))), 0, 2, *r.tau, Phase(*r.phase), kFidelityTol, kPhaseTol);
    o.require(v.pass, "K4 x C4 oracle: " + v.detail);
  }
  std::size_t graphs = 0, passes = 0, fails = 0;
  for (const Graph &x : small_corpus()) {
    if (x.order() > 5 || !connected(x)) continue;
    const SpectralDecomposition dx = decompose(x);
    if (!dx.complete()) continue;
    ++graphs;
    const WalkSpectrum walk(tensor(x, C(4)));
    for (std::size_t w = 0; w < x.order(); ++w) {
      for (std::size_t z = w; z < x.order(); ++z) {
        const std::size_t a = w * 4, b = z * 4 + 2;
        const TensorPSTReport t = tensor_pst_check(dx, w, z, yc);
        if (t.pass()) {
          ++passes;
          const double f = std::abs(walk.amplitude(a, b, t.tau->to_double()));
          o.require(f >= 1 - kFidelityTol, x.name() + " pass but fidelity " + fmt(f));
        } else {
          ++fails;
          const double best = scan(walk, a, b, kScanEnd, kScanStep).best_fidelity;
          o.require(best < 1 - kNoTransfer, x.name() + " fail but grid maximum " + fmt(best));
        }
      }
    }
  }
  o.note(std::to_string(graphs) + " graphs, " + std::to_string(passes) + " passing and " + std::to_string(fails) +
         " failing pairs agree with the oracle");
  return o;
}

// 6. Stars with Cartesian powers of C4.
Outcome stars() {
  Outcome o;
  const YCertificate yc = *y_certificate(C(4), 0, 2);
  const auto res = min_cartesian_power(decompose(S(3)), 0, 0, yc);
  const std::string k0 = res ? std::to_string(res->k0) : "none";
  o.require(res && res->k0 == 2, "least power k0 = " + k0 + ", expected 2 (S3 x C4 already transfers at " +
                                     (res ? res->report.tau->str() : "-") + ")");
  const Graph host = tensor(S(3), cartesian_power(C(4), 2));
  const std::size_t a = diagonal_vertex(4, 0, 2), b = diagonal_vertex(4, 2, 2);  // center is vertex 0 of S3
  const double f = fidelity(host, a, b, kPi / (2 * std::sqrt(3.0)));
  o.require(f >= 1 - kFidelityTol, "S3 x (C4 box C4) fidelity " + fmt(f));
  o.note("S3 x (C4 box C4) fidelity " + fmt(f) + " at pi/(2 sqrt(3))");
  return o;
}

// 7. Switching graph of K4 box K4 with its complement; K3 as negative control.
Outcome complement_switching() {
  Outcome o;
  const Graph x = cartesian(K(4), K(4));
  const ComplementReport c = complement_switching_check(x);
  o.require(c.pass, "K4 box K4 fails");
  if (c.pass) {
    const SwitchingReport &r = c.reports.front();
    o.require(*r.tau == ExactTime(Rational(1, 2), 1), "tau = " + r.tau->str());
    const WalkSpectrum walk(switching_pair(x, complement(x)));
    const Phase minus_i(UnitPhase(Rational(3, 2)));
    for (std::size_t u = 0; u < 16; ++u) {
      const VerifyResult v = verify_transfer(walk, u, 16 + u, *r.tau, minus_i, kFidelityTol, kPhaseTol);
      o.require(v.pass, "(0," + std::to_string(u) + ") -> (1," + std::to_string(u) + "): " + v.detail);
    }
  }
  o.require(!complement_switching_check(K(3)).pass, "K3 passes");
  const WalkSpectrum k3(switching_pair(K(3), complement(K(3))));
  double best = 0;
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t u = 0; u < 3; ++u) best = std::max(best, std::abs(k3.amplitude(u, 3 + u, 2 * kPi * k / 3)));
  o.require(best < 1 - kCoarseNoTransfer, "K3 maximum " + fmt(best));
  o.note("16 antipodal pairs at pi/2 with phase -i; K3 maximum " + fmt(best));
  return o;
}

// 8. Block identity and the matching cover of C4.
Outcome switching_blocks_and_matching() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = size(rng);
    worst = std::max(worst, block_identity_error(random_graph(rng, n, 0.5).adjacency(),
                                                 random_graph(rng, n, 0.5).adjacency(), time(rng)));
  }
  o.require(worst < kMatrixTol, "block identity deviation " + fmt(worst));
  const Graph cover = matching_cover(C(4));
  o.require(isomorphic_small(cover, Q(3)), "matching cover of C4 is not Q3");
  const SwitchingReport *cross = nullptr;
  const auto reports = matching_pst_check(C(4));
  for (const SwitchingReport &r : reports)
    for (auto [a, b] : r.pairs)
      if (r.kind == SwitchingCase::cross && a == 0 && b == 6) cross = &r;
  o.require(cross != nullptr, "no cross-layer transfer 0 -> 6");
  const PSTResult direct = certify_pst(cover, 0, 6);
  o.require(direct.ok(), "certify_pst on the cover fails");
  if (cross && direct.ok()) {
    o.require(*cross->tau == direct.certificate->tau0, "times differ");
    o.require(*cross->lambda == direct.certificate->phase, "phases differ");
    o.note("block deviation " + fmt(worst) + "; both give " + cross->tau->str() + ", " + cross->lambda->str());
  }
  return o;
}

// 9. Exact spectral resolution over the corpus.
Outcome exactness() {
  Outcome o;
  std::size_t checked = 0;
  double worst = 0;
  for (const Graph &g : small_corpus()) {
    const SpectralDecomposition d = decompose(g);
    if (!d.complete()) continue;
    ++checked;
    const std::size_t n = g.order();
    RadicalMatrix sum(n, n), recon(n, n);
    bool idempotent = true;
    for (const Eigenspace &e : d.eigenspaces()) {
      const RadicalMatrix p = to_radical(e.projector);
      idempotent = idempotent && p * p == p;
      sum += p;
      const RadicalSum theta(e.value);
      recon += p.map<RadicalSum>([&](const RadicalSum &x) { return theta * x; });
    }
    o.require(idempotent, g.name() + ": projector not idempotent");
    o.require(sum == RadicalMatrix::identity(n), g.name() + ": projectors do not sum to I");
    o.require(recon == to_radical(g.adjacency()), g.name() + ": A != sum theta E");
    // Spectral mapping: exp(itA) from exact projectors vs the eigensolver.
    const WalkSpectrum walk(g);
    for (double t : {0.37, 2.0, 5.5}) {
      Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
      for (const Eigenspace &e : d.eigenspaces())
        u += std::polar(1.0, t * e.value.to_double()) * to_dense(to_radical(e.projector)).cast<std::complex<double>>();
      worst = std::max(worst, max_abs_diff(u, walk.unitary(t).u));
    }
  }
  o.require(checked == 243, std::to_string(checked) + " fully resolved graphs, expected 243");
  o.require(worst < kMatrixTol, "spectral mapping deviation " + fmt(worst));
  o.note(std::to_string(checked) + " graphs exact; spectral mapping deviation " + fmt(worst));
  return o;
}

struct Criterion {
  int id;
  const char *title;
  double time_limit;  // seconds, 0 = none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "P2 transfer at pi/2 with phase i", 0.1, path2},
      {2, "P3 transfer at pi/sqrt(2); P4 and P5 have none", 0, path3},
      {3, "projector-sum unitaries of commuting sums", 10.0, sum_products},
      {4, "tensor-product walk from factor projectors", 0, tensor_unitaries},
      {5, "K4 x C4 transfer and tensor-check completeness", 120.0, tensor_transfer},
      {6, "stars with Cartesian powers of C4", 0, stars},
      {7, "switching graph of K4 box K4 with its complement", 1.0, complement_switching},
      {8, "switching block identity and matching cover of C4", 0, switching_blocks_and_matching},
      {9, "exact spectral resolution of the corpus", 0, exactness},
  };
  int unexpected = 0;
  for (const Criterion &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0) o.require(secs < c.time_limit, "took " + fmt(secs) + " s, limit " + fmt(c.time_limit) + " s");
    const bool known = kKnownUnattainable.count(c.id) > 0;
    std::printf("%s [%d] %s (%.3f s)%s: %s\n", o.pass() ? "PASS" : "FAIL", c.id, c.title, secs,
                !o.pass() && known ? " [known]" : "", o.detail().c_str());
    if (!o.pass() && !known) ++unexpected;
  }
  std::printf("%d unexpected failure(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
