// Copyright 2026 The piamp Authors
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

#include "piamp/qsys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "piamp/errors.hpp"

namespace piamp {

QuantumStateSpace::QuantumStateSpace(DoubledUpMatrix a, DoubledUpMatrix b, DoubledUpMatrix c,
                                     DoubledUpMatrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const Eigen::Index n = a_.rows();
  const Eigen::Index m = d_.rows();
  auto shape = [](const DoubledUpMatrix& x) {
    return std::to_string(x.rows()) + "x" + std::to_string(x.cols());
  };
  if (a_.cols() != n || d_.cols() != m || b_.rows() != n || b_.cols() != m || c_.rows() != m ||
      c_.cols() != n) {
    throw DimensionError("inconsistent state-space blocks (half dimensions): A " + shape(a_) +
                         ", B " + shape(b_) + ", C " + shape(c_) + ", D " + shape(d_));
  }
}

namespace {

Complex nearest_eigenvalue(const ComplexMatrix& a, Complex s) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(a, /*computeEigenvectors=*/false);
  const auto& ev = es.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i) {
    if (std::abs(ev(i) - s) < std::abs(ev(best) - s)) best = i;
  }
  return ev(best);
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(10);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "j";
  return os.str();
}

}  // namespace

ComplexMatrix transfer_at(const QuantumStateSpace& sys, Complex s) {
  const ComplexMatrix d = sys.d().expand();
  if (sys.modes() == 0) return d;

  const ComplexMatrix a = sys.a().expand();
  const ComplexMatrix resolvent = s * ComplexMatrix::Identity(a.rows(), a.cols()) - a;
  Eigen::PartialPivLU<ComplexMatrix> lu(resolvent);
  const double rcond = lu.rcond();
  if (!(rcond >= 1.0 / kMaxConditionNumber)) {
    throw SingularityError("sI - A is singular at s = " + format_complex(s) +
                           " (nearest eigenvalue of A: " +
                           format_complex(nearest_eigenvalue(a, s)) + ")");
  }
  return sys.c().expand() * lu.solve(sys.b().expand()) + d;
}

bool is_stable(const QuantumStateSpace& sys) {
  if (sys.modes() == 0) return true;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(sys.a().expand(), false);
  return es.eigenvalues().real().maxCoeff() < -kMarginalStability;
}

RealizabilityCertificate check_realizability(const QuantumStateSpace& sys,
                                             const ComplexMatrix& theta, double tol) {
  const Eigen::Index n = sys.modes();
  if (theta.rows() != 2 * n || theta.cols() != 2 * n) {
    throw ContractError("theta must be " + std::to_string(2 * n) + "x" + std::to_string(2 * n));
  }
  if (!is_hermitian(theta, tol * std::max(1.0, theta.norm()))) {
    throw ContractError("theta is not Hermitian");
  }

  const ComplexMatrix a = sys.a().expand();
  const ComplexMatrix b = sys.b().expand();
  const ComplexMatrix c = sys.c().expand();
  const ComplexMatrix d = sys.d().expand();
  const ComplexMatrix jm = j_matrix(sys.channels());

  RealizabilityCertificate cert;
  cert.theta = theta;
  cert.residual_lyap = (a * theta + theta * a.adjoint() + b * jm * b.adjoint()).norm();
  cert.residual_b = (b + theta * c.adjoint() * jm).norm();
  cert.residual_d = (d - ComplexMatrix::Identity(d.rows(), d.cols())).norm();
  cert.tolerance = tol * std::max(1.0, a.norm());

  const ComplexMatrix sym = 0.5 * (theta + theta.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  Eigen::Index positive = 0;
  Eigen::Index negative = 0;
  for (double ev : es.eigenvalues()) {
    if (ev > kInertiaZeroThreshold) ++positive;
    if (ev < -kInertiaZeroThreshold) ++negative;
  }
  cert.inertia_ok = positive == n && negative == n;
  return cert;
}

ComplexMatrix solve_theta(const QuantumStateSpace& sys) {
  const Eigen::Index dim = 2 * sys.modes();
  if (dim == 0) return ComplexMatrix(0, 0);

  const ComplexMatrix a = sys.a().expand();
  const ComplexMatrix b = sys.b().expand();
  const ComplexMatrix rhs = -(b * j_matrix(sys.channels()) * b.adjoint());

  // Bartels-Stewart on A = U T U^dagger: T Y + Y T^dagger = U^dagger rhs U.
  Eigen::ComplexSchur<ComplexMatrix> schur(a);
  const ComplexMatrix& t = schur.matrixT();
  const ComplexMatrix& u = schur.matrixU();

  const double floor = 1e-12 * std::max(1.0, a.norm());
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (std::abs(t(i, i) + std::conj(t(j, j))) <= floor) {
        throw NoUniqueSolutionError(
            "A and -A^dagger share an eigenvalue; the Lyapunov equation for theta has no unique "
            "solution (eigenvalue " +
            format_complex(t(i, i)) + ")");
      }
    }
  }

  const ComplexMatrix f = u.adjoint() * rhs * u;
  ComplexMatrix y = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index j = dim - 1; j >= 0; --j) {
    Eigen::VectorXcd col = f.col(j);
    for (Eigen::Index k = j + 1; k < dim; ++k) col -= std::conj(t(j, k)) * y.col(k);
    ComplexMatrix shifted = t;
    shifted.diagonal().array() += std::conj(t(j, j));
    y.col(j) = shifted.triangularView<Eigen::Upper>().solve(col);
  }

  const ComplexMatrix theta = u * y * u.adjoint();
  return 0.5 * (theta + theta.adjoint());
}

HamiltonianCoupling extract_mn(const QuantumStateSpace& sys, const ComplexMatrix& theta,
                               double tol) {
  const RealizabilityCertificate cert = check_realizability(sys, theta, tol);
  if (!cert.passed()) {
    throw ContractError("extract_mn needs a physically realizable system");
  }
  Eigen::FullPivLU<ComplexMatrix> lu(theta);
  if (!lu.isInvertible()) {
    throw SingularityError("theta is singular");
  }

  HamiltonianCoupling hc;
  hc.n = sys.c().expand();
  const ComplexMatrix jm = j_matrix(sys.channels());
  const ComplexMatrix a = sys.a().expand();
  const ComplexMatrix inner = a + 0.5 * theta * hc.n.adjoint() * jm * hc.n;
  hc.m = Complex(0.0, 1.0) * lu.solve(inner);
  hc.hermiticity_residual = (hc.m - hc.m.adjoint()).norm();
  if (hc.hermiticity_residual > 1e-9 * std::max(1.0, hc.m.norm())) {
    throw ContractError("recovered Hamiltonian matrix M is not Hermitian (residual " +
                        std::to_string(hc.hermiticity_residual) + ")");
  }
  return hc;
}

namespace {

double infinity_form_residual(const ComplexMatrix& g) {
  const Eigen::Index m = g.rows() / 2;
  const ComplexMatrix s = g.topLeftCorner(m, m);
  return g.topRightCorner(m, m).norm() + g.bottomLeftCorner(m, m).norm() +
         (g.bottomRightCorner(m, m) - s.conjugate()).norm() +
         (s.adjoint() * s - ComplexMatrix::Identity(m, m)).norm();
}

}  // namespace

TfProbeReport tf_realizability_probe(const TransferFunction& gbar, const ComplexMatrix& g_infinity,
                                     const std::vector<double>& freqs, double tol) {
  if (g_infinity.rows() != g_infinity.cols() || g_infinity.rows() % 2 != 0) {
    throw DimensionError("transfer matrix at infinity must be square of even size");
  }
  TfProbeReport report;
  report.tolerance = tol;
  report.frequencies = freqs;
  report.residuals.reserve(freqs.size());
  for (double w : freqs) {
    const double res = bogoliubov_residual(gbar(Complex(0.0, w)));
    report.residuals.push_back(res);
    report.max_residual = std::max(report.max_residual, res);
  }
  // No samples means nothing was verified.
  report.symplectic_ok = !freqs.empty() && report.max_residual <= tol;
  report.infinity_residual = infinity_form_residual(g_infinity);
  report.infinity_ok = report.infinity_residual <= tol;
  return report;
}

TfProbeReport tf_realizability_probe(const QuantumStateSpace& sys, const std::vector<double>& freqs,
                                     double tol) {
  return tf_realizability_probe([&sys](Complex s) { return transfer_at(sys, s); },
                                sys.d().expand(), freqs, tol);
}

}  // namespace piamp
