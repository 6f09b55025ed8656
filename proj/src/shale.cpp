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

#include "piamp/shale.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "piamp/errors.hpp"

namespace piamp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitaryTol = 1e-10;
constexpr double kSymplecticTol = 1e-8;
constexpr double kDegenerateGap = 1e-9;
constexpr double kOffDiagonalTol = 1e-6;
constexpr double kNegligible = 1e-12;

// Maps an angle into (-pi, pi].
double wrap_angle(double x) {
  x = std::remainder(x, 2.0 * kPi);
  if (x <= -kPi) x += 2.0 * kPi;
  return x;
}

// First entry of a column that is not negligible; a unit column always has one.
Eigen::Index leading_index(const Eigen::Vector2cd& col) {
  return std::abs(col(0)) > kNegligible ? 0 : 1;
}

// Takagi factorization K = W D W^T of a complex symmetric 2x2 matrix, with
// D real nonnegative (descending). Uses the real symmetric embedding
// [[Re K, Im K], [Im K, -Re K]], whose eigenpairs (d, [x; y]) give Takagi
// vectors x + i y.
Eigen::Matrix2cd takagi_vectors(const Eigen::Matrix2cd& k) {
  Eigen::Matrix4d embed;
  embed << k.real(), k.imag(), k.imag(), -k.real();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(embed);
  Eigen::Matrix2cd w;
  for (int c = 0; c < 2; ++c) {
    const Eigen::Vector4d v = es.eigenvectors().col(3 - c);
    w.col(c) = v.head<2>().cast<Complex>() + Complex(0.0, 1.0) * v.tail<2>().cast<Complex>();
  }
  return w;
}

}  // namespace

ShaleFactors shale_decompose(const ComplexMatrix& gbar) {
  if (gbar.rows() != 4 || gbar.cols() != 4) {
    throw DimensionError("shale_decompose expects a 4x4 matrix");
  }
  DoubledUpMatrix d;
  try {
    d = DoubledUpMatrix::extract(gbar, kSymplecticTol);
  } catch (const ContractError& e) {
    throw NotSymplecticError(e.what());
  }
  const double sympl = bogoliubov_residual(gbar);
  if (!(sympl < kSymplecticTol)) {
    throw NotSymplecticError("matrix violates the J-metric condition (residual " +
                             std::to_string(sympl) + ")");
  }

  const Eigen::Matrix2cd g = d.block1();
  const Eigen::Matrix2cd h = d.block2();

  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2cd u = svd.matrixU();
  Eigen::Matrix2cd v = svd.matrixV();
  const Eigen::Vector2d sigma = svd.singularValues();
  if (sigma(1) < 1.0 - 1e-10) {
    throw NotSymplecticError("signal block has a singular value below one (" +
                             std::to_string(sigma(1)) + ")");
  }

  // With G = U Sigma V^dagger, the sinh block seen through the SVD bases is
  // K = U^dagger H conj(V). Equal singular values leave the bases free up to
  // a common unitary; pick the one that diagonalizes K.
  if (sigma(0) - sigma(1) < kDegenerateGap) {
    const Eigen::Matrix2cd k = u.adjoint() * h * v.conjugate();
    const Eigen::Matrix2cd ksym = 0.5 * (k + k.transpose());
    if (ksym.norm() > kNegligible) {
      const Eigen::Matrix2cd w = takagi_vectors(ksym);
      u = u * w;
      v = v * w;
    }
  }
  const Eigen::Matrix2cd k = u.adjoint() * h * v.conjugate();
  const double off = std::abs(k(0, 1)) + std::abs(k(1, 0));
  if (off > kOffDiagonalTol) {
    throw DecompositionError("recovered sinh block is not diagonal (off-diagonal mass " +
                             std::to_string(off) + ")");
  }

  // S1 = -U Psi, S2 = Psi^dagger V^dagger, sinh(R) = Psi^dagger K Psi^dagger
  // for a diagonal phase matrix Psi.
  Eigen::Vector2cd psi;
  Eigen::Vector2d r;
  for (int c = 0; c < 2; ++c) {
    const Eigen::Vector2cd col = -u.col(c);
    const Eigen::Index lead = leading_index(col);
    const double lead_arg = std::arg(col(lead));
    const double kk_abs = std::abs(k(c, c));

    double phase = 0.0;
    if (kk_abs <= kNegligible) {
      phase = -lead_arg;
    } else {
      const double base = std::arg(k(c, c)) / 2.0;
      phase = base;
      for (int q = 0; q < 4; ++q) {
        const double candidate = base + q * kPi / 2.0;
        const double a = wrap_angle(lead_arg + candidate);
        if (a > -kPi / 4.0 && a <= kPi / 4.0) {
          phase = candidate;
          break;
        }
      }
    }
    psi(c) = std::polar(1.0, phase);

    const double sinh_val = (std::conj(psi(c)) * std::conj(psi(c)) * k(c, c)).real();
    const double consistency = std::abs(sigma(c) * sigma(c) - sinh_val * sinh_val - 1.0);
    if (consistency > 1e-12 * sigma(c) * sigma(c) + sympl) {
      throw DecompositionError("cosh^2 - sinh^2 = 1 fails on channel " + std::to_string(c + 1) +
                               " (deviation " + std::to_string(consistency) + ")");
    }
    r(c) = std::asinh(sinh_val);
  }

  ShaleFactors f;
  f.s1 = -u * psi.asDiagonal();
  f.s2 = psi.conjugate().asDiagonal() * v.adjoint();
  f.r1 = r(0);
  f.r2 = r(1);
  return f;
}

ComplexMatrix shale_reconstruct(const ShaleFactors& f) {
  if (!is_unitary(f.s1, kUnitaryTol) || !is_unitary(f.s2, kUnitaryTol)) {
    throw ContractError("Shale factors S1 and S2 must be unitary");
  }
  Eigen::Matrix4cd core = Eigen::Matrix4cd::Zero();
  const double ch[2] = {std::cosh(f.r1), std::cosh(f.r2)};
  const double sh[2] = {std::sinh(f.r1), std::sinh(f.r2)};
  for (int c = 0; c < 2; ++c) {
    core(c, c) = -ch[c];
    core(c + 2, c + 2) = -ch[c];
    core(c, c + 2) = -sh[c];
    core(c + 2, c) = -sh[c];
  }
  return passive_block(f.s1) * core * passive_block(f.s2);
}

BeamsplitterFit beamsplitter_params(const Eigen::Matrix2cd& s) {
  if (!is_unitary(s, kUnitaryTol)) {
    throw ContractError("beamsplitter matrix must be unitary");
  }
  const Complex a = s(0, 0), b = s(0, 1), c = s(1, 0), d = s(1, 1);

  // The sign of sin(theta) absorbs half-turns of phi1; cos(theta) >= 0.
  double phi1 = 0.0;
  double sin_t = 0.0;
  if (std::abs(a) > kNegligible) {
    phi1 = std::arg(a);
    if (phi1 > kPi / 2.0) phi1 -= kPi;
    if (phi1 <= -kPi / 2.0) phi1 += kPi;
    sin_t = (a * std::polar(1.0, -phi1)).real();
  }
  const double cos_t = std::abs(b);

  double phi2 = 0.0;
  double phi3 = 0.0;
  if (cos_t > kNegligible) {
    phi3 = wrap_angle(std::arg(b) - phi1);
    phi2 = std::arg(c);
  } else {
    phi2 = std::arg(-d / sin_t);
  }

  BeamsplitterFit fit;
  fit.params = {std::atan2(sin_t, cos_t), wrap_angle(phi1), wrap_angle(phi2), wrap_angle(phi3)};
  fit.global_phase = wrap_angle(std::arg((bs_matrix(fit.params).adjoint() * s).trace()));
  if (std::abs(fit.global_phase) < kNegligible) fit.global_phase = 0.0;
  return fit;
}

Eigen::Matrix2cd bs_matrix(const BeamsplitterParams& p) {
  const double st = std::sin(p.theta);
  const double ct = std::cos(p.theta);
  Eigen::Matrix2cd m;
  m << std::polar(1.0, p.phi1) * st, std::polar(1.0, p.phi1 + p.phi3) * ct,
      std::polar(1.0, p.phi2) * ct, -std::polar(1.0, p.phi2 + p.phi3) * st;
  return m;
}

}  // namespace piamp
