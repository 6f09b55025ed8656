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

#pragma once

// Linear quantum systems in doubled-up state-space form
//
//     d[a; a^#]  = A [a; a^#] dt + B d[u; u^#]
//     d[y; y^#]  = C [a; a^#] dt + D d[u; u^#]
//
// with A, B, C, D all Delta-form, plus the physical-realizability tests
// built around the commutation matrix Theta.

#include <functional>
#include <vector>

#include "piamp/dup_linalg.hpp"

namespace piamp {

// Frobenius-norm tolerance for realizability residuals, applied relative to
// max(1, |A|) because cavity decay rates reach 1e7 rad/s.
inline constexpr double kRealizabilityTolerance = 1e-8;
// Eigenvalues of Theta with magnitude below this count as zero inertia.
inline constexpr double kInertiaZeroThreshold = 1e-10;
// Real parts within this distance of zero count as marginal (unstable).
inline constexpr double kMarginalStability = 1e-12;
// (sI - A) with a reciprocal condition estimate below this is singular.
inline constexpr double kMaxConditionNumber = 1e12;

class QuantumStateSpace {
 public:
  QuantumStateSpace() = default;
  // n modes, m channels. Throws DimensionError when block shapes disagree:
  // A is n x n, B is n x m, C is m x n, D is m x m (half dimensions).
  QuantumStateSpace(DoubledUpMatrix a, DoubledUpMatrix b, DoubledUpMatrix c, DoubledUpMatrix d);

  const DoubledUpMatrix& a() const { return a_; }
  const DoubledUpMatrix& b() const { return b_; }
  const DoubledUpMatrix& c() const { return c_; }
  const DoubledUpMatrix& d() const { return d_; }

  Eigen::Index modes() const { return a_.rows(); }
  Eigen::Index channels() const { return d_.rows(); }

 private:
  DoubledUpMatrix a_, b_, c_, d_;
};

struct RealizabilityCertificate {
  ComplexMatrix theta;
  double residual_lyap = 0.0;  // |A Theta + Theta A^dagger + B J B^dagger|
  double residual_b = 0.0;     // |B + Theta C^dagger J|
  double residual_d = 0.0;     // |D - I|
  bool inertia_ok = false;     // Theta has n positive and n negative eigenvalues
  double tolerance = 0.0;      // effective (already scaled) bound on each residual

  bool passed() const {
    return inertia_ok && residual_lyap <= tolerance && residual_b <= tolerance &&
           residual_d <= tolerance;
  }
};

// Coefficient matrices of the Hamiltonian H = 1/2 [a^dagger a^T] M [a; a^#]
// and the coupling L = [N1 N2] [a; a^#].
struct HamiltonianCoupling {
  ComplexMatrix m;
  ComplexMatrix n;
  double hermiticity_residual = 0.0;  // |M - M^dagger|
};

// Evaluates C (sI - A)^{-1} B + D. Throws SingularityError naming the
// eigenvalue of A closest to s when sI - A is numerically singular.
ComplexMatrix transfer_at(const QuantumStateSpace& sys, Complex s);

bool is_stable(const QuantumStateSpace& sys);

// Throws ContractError if theta is not Hermitian (relative to |theta|) or
// has the wrong size.
RealizabilityCertificate check_realizability(const QuantumStateSpace& sys,
                                             const ComplexMatrix& theta,
                                             double tol = kRealizabilityTolerance);

// Unique Hermitian solution of A Theta + Theta A^dagger + B J B^dagger = 0.
// Throws NoUniqueSolutionError when A and -A^dagger share an eigenvalue.
ComplexMatrix solve_theta(const QuantumStateSpace& sys);

// Recovers N = C and M = i Theta^{-1} (A + 1/2 Theta N^dagger J N) from a
// realizable system.
HamiltonianCoupling extract_mn(const QuantumStateSpace& sys, const ComplexMatrix& theta,
                               double tol = kRealizabilityTolerance);

struct TfProbeReport {
  std::vector<double> frequencies;  // rad/s
  std::vector<double> residuals;    // bogoliubov_residual at each j*omega
  double max_residual = 0.0;
  // |D2| + |D1^dagger D1 - I| for the value at s -> infinity.
  double infinity_residual = 0.0;
  bool symplectic_ok = false;
  bool infinity_ok = false;
  double tolerance = 0.0;

  std::size_t sample_count() const { return frequencies.size(); }
  bool passed() const { return symplectic_ok && infinity_ok; }
};

using TransferFunction = std::function<ComplexMatrix(Complex)>;

// Sampled check of Gbar(jw)^dagger J Gbar(jw) = J together with the
// block-unitary form of Gbar(infinity). The identity is rational in s, so
// agreement on enough samples stands in for "all s".
TfProbeReport tf_realizability_probe(const TransferFunction& gbar, const ComplexMatrix& g_infinity,
                                     const std::vector<double>& freqs,
                                     double tol = kRealizabilityTolerance);
TfProbeReport tf_realizability_probe(const QuantumStateSpace& sys, const std::vector<double>& freqs,
                                     double tol = kRealizabilityTolerance);

}  // namespace piamp
