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

// End-to-end synthesis of a minimum-noise phase-insensitive amplifier from
// two beamsplitters and two dynamic squeezers:
//
//   Gbar(s) = blkdiag(S1, S1^#) P^T blkdiag(G1(s), G2(s)) P blkdiag(S2, S2^#)
//
// where P = channel_permutation(2), S2 is the input beamsplitter and S1 the
// output beamsplitter.

#include <array>
#include <optional>
#include <vector>

#include "piamp/caves_bound.hpp"
#include "piamp/shale.hpp"
#include "piamp/squeezer.hpp"

namespace piamp {

struct AmplifierNetwork {
  AmplifierDCSpec spec{Complex{1.0, 0.0}};
  double epsilon = 1.0;  // rad/s
  BeamsplitterParams bs_in;   // implements S2
  SqueezerParams sq1;
  SqueezerParams sq2;
  BeamsplitterParams bs_out;  // implements S1
  // Global phases {input, output} multiplying the beamsplitter matrices.
  std::array<double, 2> gauge_phases{0.0, 0.0};

  Eigen::Matrix2cd input_unitary() const;   // S2
  Eigen::Matrix2cd output_unitary() const;  // S1
};

// Throws DomainError for |g11| < 1 or epsilon <= 0 and SynthesisError
// (naming the failing stage) if decomposition or verification breaks.
AmplifierNetwork synthesize(const AmplifierDCSpec& spec, double epsilon);

// Throws SingularityError when s is a pole of either squeezer.
ComplexMatrix network_transfer_at(const AmplifierNetwork& net, Complex s);

// State-space form of the network, split as Gbar(s) = scattering * G_core(s)
// where the core system has D = I and scattering = blkdiag(S1 S2, (S1 S2)^#)
// is the static unitary left over at s -> infinity.
struct CascadeRealization {
  QuantumStateSpace core;
  ComplexMatrix scattering;

  ComplexMatrix transfer_at(Complex s) const;
};

CascadeRealization cascade_realization(const AmplifierNetwork& net);

struct SynthesisReport {
  double dc_gain_db = 0.0;          // 20 log10 |g11(0)|
  double dc_gain_error = 0.0;       // |g11(0) - spec.g11|
  double dc_noise_figure = 0.0;     // |g12(0)|^2 + |h12(0)|^2
  double noise_gap = 0.0;           // dc_noise_figure - (|g11|^2 - 1)
  double dc_h11 = 0.0;              // |h11(0)|
  double max_sympl_residual = 0.0;  // over the probe frequencies
  std::size_t probe_count = 0;
  bool squeezers_stable = false;
  std::optional<double> minus3db_rad_s;  // first crossing of |g11(0)|/sqrt(2)

  bool passed(double tol = 1e-8) const;
};

// Thresholds: DC gain error and noise gap <= tol, |h11(0)| <= tol / 10,
// symplectic residual <= tol / 10, both squeezers strictly stable.
SynthesisReport verify_synthesis(const AmplifierNetwork& net, const std::vector<double>& freqs);

enum class GridSpacing { Linear, Log };

std::vector<double> frequency_grid(double omega_min, double omega_max, std::size_t points,
                                   GridSpacing spacing);

struct FrequencySweep {
  std::vector<double> omegas;  // rad/s, strictly increasing
  std::vector<ComplexMatrix> values;

  Complex g11(std::size_t i) const { return values[i](0, 0); }
  Complex h12(std::size_t i) const { return values[i](0, 3); }
  double g11_db(std::size_t i) const;
  double h12_db(std::size_t i) const;
  double sympl_residual(std::size_t i) const;
};

// Throws DomainError on grid contract violations: points < 2, omega_min >=
// omega_max, omega_min <= 0 for log spacing or < 0 for linear spacing.
FrequencySweep frequency_sweep(const AmplifierNetwork& net, double omega_min, double omega_max,
                               std::size_t points, GridSpacing spacing);

// First frequency in the grid bracket where |g11(jw)| falls below
// |g11(0)|/sqrt(2), refined by bisection on the transfer function.
std::optional<double> minus3db_frequency(const AmplifierNetwork& net,
                                         const std::vector<double>& freqs);

}  // namespace piamp
