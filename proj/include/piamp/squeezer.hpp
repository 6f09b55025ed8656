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

// Single-channel dynamic squeezer: an optical cavity with decay rate kappa
// and a nonlinear element of strength chi,
//
//     da = -kappa/2 a dt - chi a^* dt - sqrt(kappa) du
//     dy =  sqrt(kappa) a dt + du
//
// Stable iff kappa^2 > 4 |chi|^2.

#include "piamp/qsys.hpp"

namespace piamp {

struct SqueezerParams {
  double kappa = 1.0;  // rad/s
  Complex chi{0.0, 0.0};  // rad/s
  double epsilon = 1.0;  // rad/s, bandwidth scale (kappa = epsilon * kappa_bar)
};

// Throws DomainError for kappa <= 0. Unstable parameters are accepted.
QuantumStateSpace squeezer_system(const SqueezerParams& p);

// DC transfer matrix for alpha = 2 chi / kappa:
//   [ -(1+a^2)/(1-a^2)   2a/(1-a^2)      ]
//   [  2a/(1-a^2)       -(1+a^2)/(1-a^2) ]
// Throws DomainError unless |alpha| < 1.
Eigen::Matrix2cd dc_gain_from_alpha(double alpha);

// The stable root alpha = -tanh(r/2) of the design equation; the other root
// 1/tanh(r/2) lies outside (-1, 1).
double alpha_from_r(double r);

// kappa_bar = 1, so kappa = epsilon and chi = alpha_from_r(r) * epsilon / 2.
// Throws DomainError for epsilon <= 0.
SqueezerParams design_squeezer(double r, double epsilon);

}  // namespace piamp
