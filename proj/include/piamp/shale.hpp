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

// Shale (Bloch-Messiah) factorization of a two-channel Bogoliubov matrix
//
//     Gbar = blkdiag(S1, S1^#) [ -cosh R  -sinh R ] blkdiag(S2, S2^#)
//                              [ -sinh R  -cosh R ]
//
// and the beamsplitter parametrization of the 2x2 unitaries
//
//     [ e^{i phi1} sin(theta)   e^{i(phi1+phi3)} cos(theta) ]
//     [ e^{i phi2} cos(theta)  -e^{i(phi2+phi3)} sin(theta) ]

#include "piamp/dup_linalg.hpp"

namespace piamp {

struct ShaleFactors {
  Eigen::Matrix2cd s1;
  Eigen::Matrix2cd s2;
  double r1 = 0.0;  // |r1| >= |r2|
  double r2 = 0.0;
};

struct BeamsplitterParams {
  double theta = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  double phi3 = 0.0;
};

struct BeamsplitterFit {
  BeamsplitterParams params;
  // S = e^{i global_phase} bs_matrix(params).
  double global_phase = 0.0;
};

// Gauge: singular values come out descending, so |r1| >= |r2|. For r != 0
// the phase of each S1 column is fixed (mod pi/2) by requiring a real sinh;
// the remaining quarter-turn is chosen so that the first nonzero entry of the
// column has argument in (-pi/4, pi/4]. For r = 0 that entry is made real
// positive. Throws NotSymplecticError if the input fails the Delta-form or
// J-metric precondition and DecompositionError if the recovered sinh block
// is not diagonal.
ShaleFactors shale_decompose(const ComplexMatrix& gbar);

// Throws ContractError when S1 or S2 is not unitary to 1e-10.
ComplexMatrix shale_reconstruct(const ShaleFactors& f);

// Throws ContractError when S is not unitary to 1e-10. Every 2x2 unitary is
// exactly of beamsplitter form, so global_phase is zero up to rounding; it is
// still measured and reported.
BeamsplitterFit beamsplitter_params(const Eigen::Matrix2cd& s);

Eigen::Matrix2cd bs_matrix(const BeamsplitterParams& p);

}  // namespace piamp
