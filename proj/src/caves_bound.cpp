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

#include "piamp/caves_bound.hpp"

#include <cmath>
#include <string>

#include "piamp/errors.hpp"

namespace piamp {

AmplifierDCSpec::AmplifierDCSpec(Complex g11) : g11_(g11) {
  // Also rejects NaN.
  if (!(std::abs(g11) >= 1.0)) {
    throw DomainError("amplifier gain must satisfy |g11| >= 1, got |g11| = " +
                      std::to_string(std::abs(g11)));
  }
}

AmplifierGainMatrix AmplifierGainMatrix::from_full(const ComplexMatrix& gbar) {
  if (gbar.rows() != 4 || gbar.cols() != 4) {
    throw DimensionError("amplifier gain matrix must be 4x4");
  }
  return {gbar.topLeftCorner<2, 2>(), gbar.topRightCorner<2, 2>()};
}

ComplexMatrix AmplifierGainMatrix::full() const { return DoubledUpMatrix(g, h).expand(); }

double min_added_noise(const AmplifierDCSpec& spec) { return std::norm(spec.g11()) - 1.0; }

AmplifierGainMatrix optimal_dc_matrix(const AmplifierDCSpec& spec) {
  const Complex g11 = spec.g11();
  const double gain2 = std::norm(g11);

  AmplifierGainMatrix m;
  m.g(0, 0) = g11;
  m.g(0, 1) = 0.0;
  m.g(1, 0) = std::sqrt((gain2 - 1.0) / gain2);
  m.g(1, 1) = std::sqrt(1.0 + gain2);
  m.h(0, 0) = 0.0;
  m.h(0, 1) = std::sqrt(gain2 * (gain2 - 1.0)) / std::conj(g11);
  m.h(1, 0) = std::sqrt((gain2 * gain2 - 1.0) / gain2);
  m.h(1, 1) = 1.0;
  return m;
}

double noise_figure(const AmplifierGainMatrix& m) {
  return std::norm(m.g(0, 1)) + std::norm(m.h(0, 1));
}

bool is_phase_insensitive(const AmplifierGainMatrix& m, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("phase-insensitivity tolerance must be positive");
  }
  return std::abs(m.h(0, 0)) <= tol;
}

std::array<double, 5> pr_equation_residuals(const AmplifierGainMatrix& m) {
  const Complex g11 = m.g(0, 0), g12 = m.g(0, 1), g21 = m.g(1, 0), g22 = m.g(1, 1);
  const Complex h11 = m.h(0, 0), h12 = m.h(0, 1), h21 = m.h(1, 0), h22 = m.h(1, 1);
  using std::conj;
  return {
      std::abs(conj(g11) * h12 + conj(g21) * h22 - (h11 * conj(g12) + h21 * conj(g22))),
      std::abs(conj(g12) * h12 + conj(g22) * h22 - (h12 * conj(g12) + h22 * conj(g22))),
      std::abs(conj(g11) * g11 + conj(g21) * g21 - (h11 * conj(h11) + h21 * conj(h21) + 1.0)),
      std::abs(conj(g11) * g12 + conj(g21) * g22 - (h11 * conj(h12) + h21 * conj(h22))),
      std::abs(conj(g12) * g12 + conj(g22) * g22 - (h12 * conj(h12) + h22 * conj(h22) + 1.0)),
  };
}

}  // namespace piamp
