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

#include "piamp/squeezer.hpp"

#include <cmath>
#include <string>

#include "piamp/errors.hpp"

namespace piamp {

QuantumStateSpace squeezer_system(const SqueezerParams& p) {
  if (!(p.kappa > 0.0)) {
    throw DomainError("squeezer decay rate kappa must be positive, got " + std::to_string(p.kappa));
  }
  const double root_kappa = std::sqrt(p.kappa);
  ComplexMatrix a1(1, 1), a2(1, 1);
  a1(0, 0) = -p.kappa / 2.0;
  a2(0, 0) = -p.chi;
  const ComplexMatrix one = ComplexMatrix::Identity(1, 1);
  const ComplexMatrix zero = ComplexMatrix::Zero(1, 1);
  return QuantumStateSpace(DoubledUpMatrix(a1, a2), DoubledUpMatrix(-root_kappa * one, zero),
                           DoubledUpMatrix(root_kappa * one, zero), DoubledUpMatrix(one, zero));
}

Eigen::Matrix2cd dc_gain_from_alpha(double alpha) {
  if (!(alpha * alpha < 1.0)) {
    throw DomainError("squeezer with alpha = " + std::to_string(alpha) +
                      " is unstable (need alpha^2 < 1)");
  }
  const double denom = 1.0 - alpha * alpha;
  const double diag = -(1.0 + alpha * alpha) / denom;
  const double off = 2.0 * alpha / denom;
  Eigen::Matrix2cd g;
  g << diag, off, off, diag;
  return g;
}

double alpha_from_r(double r) { return -std::tanh(r / 2.0); }

SqueezerParams design_squeezer(double r, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw DomainError("bandwidth scale epsilon must be positive, got " + std::to_string(epsilon));
  }
  SqueezerParams p;
  p.epsilon = epsilon;
  p.kappa = epsilon;
  p.chi = alpha_from_r(r) * epsilon / 2.0;
  return p;
}

}  // namespace piamp
