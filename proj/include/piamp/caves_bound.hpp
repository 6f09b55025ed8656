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

// Added-noise bound for phase-insensitive amplification and the DC gain
// matrix that attains it.
//
// Channel ordering is (s, w, s^*, w^*): signal and noise input/output,
// followed by their conjugate quadratures. The full 4x4 transfer matrix is
// Delta(G, H).

#include <array>

#include "piamp/dup_linalg.hpp"

namespace piamp {

class AmplifierDCSpec {
 public:
  // Throws DomainError unless |g11| >= 1.
  explicit AmplifierDCSpec(Complex g11);

  Complex g11() const { return g11_; }

 private:
  Complex g11_;
};

struct AmplifierGainMatrix {
  Eigen::Matrix2cd g;
  Eigen::Matrix2cd h;

  static AmplifierGainMatrix from_full(const ComplexMatrix& gbar);
  ComplexMatrix full() const;  // Delta(G, H), 4x4
};

// |g11|^2 - 1.
double min_added_noise(const AmplifierDCSpec& spec);

// Optimal matrix with g12 = h11 = 0; all square roots take the principal
// branch. For complex g11 the formulas are applied literally: only h12
// carries the phase of g11.
AmplifierGainMatrix optimal_dc_matrix(const AmplifierDCSpec& spec);

// |g12|^2 + |h12|^2.
double noise_figure(const AmplifierGainMatrix& m);

bool is_phase_insensitive(const AmplifierGainMatrix& m, double tol);

// Absolute residuals of the five scalar identities obtained by expanding
// Gbar^dagger J Gbar = J:
//   [0] g11* h12 + g21* h22 = h11 g12* + h21 g22*
//   [1] g12* h12 + g22* h22 = h12 g12* + h22 g22*
//   [2] g11* g11 + g21* g21 = h11 h11* + h21 h21* + 1
//   [3] g11* g12 + g21* g22 = h11 h12* + h21 h22*
//   [4] g12* g12 + g22* g22 = h12 h12* + h22 h22* + 1
std::array<double, 5> pr_equation_residuals(const AmplifierGainMatrix& m);

}  // namespace piamp
