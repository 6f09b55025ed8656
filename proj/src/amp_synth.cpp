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

#include "piamp/amp_synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "piamp/errors.hpp"

namespace piamp {

Eigen::Matrix2cd AmplifierNetwork::input_unitary() const {
  return std::polar(1.0, gauge_phases[0]) * bs_matrix(bs_in);
}

Eigen::Matrix2cd AmplifierNetwork::output_unitary() const {
  return std::polar(1.0, gauge_phases[1]) * bs_matrix(bs_out);
}

ComplexMatrix network_transfer_at(const AmplifierNetwork& net, Complex s) {
  ComplexMatrix squeezers = ComplexMatrix::Zero(4, 4);
  squeezers.topLeftCorner(2, 2) = transfer_at(squeezer_system(net.sq1), s);
  squeezers.bottomRightCorner(2, 2) = transfer_at(squeezer_system(net.sq2), s);
  const ComplexMatrix p = channel_permutation(2);
  return passive_block(net.output_unitary()) * p.transpose() * squeezers * p *
         passive_block(net.input_unitary());
}

AmplifierNetwork synthesize(const AmplifierDCSpec& spec, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw DomainError("bandwidth scale epsilon must be positive, got " + std::to_string(epsilon));
  }
  const AmplifierGainMatrix target = optimal_dc_matrix(spec);
  const ComplexMatrix target_full = target.full();

  ShaleFactors factors;
  try {
    factors = shale_decompose(target_full);
  } catch (const DomainError&) {
    throw;
  } catch (const Error& e) {
    throw SynthesisError("shale_decompose", e.what());
  }

  AmplifierNetwork net;
  net.spec = spec;
  net.epsilon = epsilon;
  net.sq1 = design_squeezer(factors.r1, epsilon);
  net.sq2 = design_squeezer(factors.r2, epsilon);
  BeamsplitterFit in, out;
  try {
    in = beamsplitter_params(factors.s2);
    out = beamsplitter_params(factors.s1);
  } catch (const Error& e) {
    throw SynthesisError("beamsplitter_params", e.what());
  }
  net.bs_in = in.params;
  net.bs_out = out.params;
  net.gauge_phases = {in.global_phase, out.global_phase};

  if (!is_stable(squeezer_system(net.sq1)) || !is_stable(squeezer_system(net.sq2))) {
    throw SynthesisError("design_squeezer", "designed squeezer is not strictly stable");
  }
  const double dc_error = (network_transfer_at(net, 0.0) - target_full).norm();
  if (dc_error > 1e-8 * std::max(1.0, target_full.norm())) {
    throw SynthesisError("dc_check", "network DC matrix misses the optimal matrix by " +
                                         std::to_string(dc_error));
  }
  return net;
}

ComplexMatrix CascadeRealization::transfer_at(Complex s) const {
  return scattering * piamp::transfer_at(core, s);
}

CascadeRealization cascade_realization(const AmplifierNetwork& net) {
  // Squeezer states in interleaved order (a1, a1^*, a2, a2^*); conjugating by
  // P moves everything to the grouped order (a1, a2, a1^*, a2^*).
  ComplexMatrix a_int = ComplexMatrix::Zero(4, 4);
  ComplexMatrix b_int = ComplexMatrix::Zero(4, 4);
  ComplexMatrix c_int = ComplexMatrix::Zero(4, 4);
  const QuantumStateSpace q1 = squeezer_system(net.sq1);
  const QuantumStateSpace q2 = squeezer_system(net.sq2);
  a_int.topLeftCorner(2, 2) = q1.a().expand();
  a_int.bottomRightCorner(2, 2) = q2.a().expand();
  b_int.topLeftCorner(2, 2) = q1.b().expand();
  b_int.bottomRightCorner(2, 2) = q2.b().expand();
  c_int.topLeftCorner(2, 2) = q1.c().expand();
  c_int.bottomRightCorner(2, 2) = q2.c().expand();

  const ComplexMatrix p = channel_permutation(2);
  const ComplexMatrix s_in = passive_block(net.input_unitary());
  const ComplexMatrix s_out = passive_block(net.output_unitary());

  const ComplexMatrix a = p.transpose() * a_int * p;
  const ComplexMatrix b = p.transpose() * b_int * p * s_in;
  // Full output map is s_out P^T C_int P; factoring out the static
  // scattering s_out s_in leaves a core with D = I.
  const ComplexMatrix c = s_in.adjoint() * p.transpose() * c_int * p;

  CascadeRealization cr;
  cr.core = QuantumStateSpace(DoubledUpMatrix::extract(a), DoubledUpMatrix::extract(b),
                              DoubledUpMatrix::extract(c),
                              DoubledUpMatrix(ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2)));
  cr.scattering = s_out * s_in;
  return cr;
}

bool SynthesisReport::passed(double tol) const {
  return probe_count > 0 && squeezers_stable && dc_gain_error <= tol &&
         std::abs(noise_gap) <= tol && dc_h11 <= tol / 10.0 && max_sympl_residual <= tol / 10.0;
}

SynthesisReport verify_synthesis(const AmplifierNetwork& net, const std::vector<double>& freqs) {
  SynthesisReport report;
  const AmplifierGainMatrix dc = AmplifierGainMatrix::from_full(network_transfer_at(net, 0.0));
  report.dc_gain_db = 20.0 * std::log10(std::abs(dc.g(0, 0)));
  report.dc_gain_error = std::abs(dc.g(0, 0) - net.spec.g11());
  report.dc_noise_figure = noise_figure(dc);
  report.noise_gap = report.dc_noise_figure - min_added_noise(net.spec);
  report.dc_h11 = std::abs(dc.h(0, 0));
  for (double w : freqs) {
    report.max_sympl_residual = std::max(
        report.max_sympl_residual, bogoliubov_residual(network_transfer_at(net, Complex(0.0, w))));
  }
  report.probe_count = freqs.size();
  report.squeezers_stable =
      is_stable(squeezer_system(net.sq1)) && is_stable(squeezer_system(net.sq2));
  report.minus3db_rad_s = minus3db_frequency(net, freqs);
  return report;
}

std::vector<double> frequency_grid(double omega_min, double omega_max, std::size_t points,
                                   GridSpacing spacing) {
  if (points < 2) {
    throw DomainError("frequency grid needs at least 2 points");
  }
  if (!(omega_min < omega_max)) {
    throw DomainError("frequency grid needs omega_min < omega_max");
  }
  if (spacing == GridSpacing::Log && !(omega_min > 0.0)) {
    throw DomainError("log-spaced frequency grid needs omega_min > 0");
  }
  if (spacing == GridSpacing::Linear && !(omega_min >= 0.0)) {
    throw DomainError("linear frequency grid needs omega_min >= 0");
  }
  std::vector<double> grid(points);
  const double last = static_cast<double>(points - 1);
  if (spacing == GridSpacing::Log) {
    const double lo = std::log10(omega_min);
    const double hi = std::log10(omega_max);
    for (std::size_t i = 0; i < points; ++i) {
      grid[i] = std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) / last);
    }
  } else {
    for (std::size_t i = 0; i < points; ++i) {
      grid[i] = omega_min + (omega_max - omega_min) * static_cast<double>(i) / last;
    }
  }
  grid.front() = omega_min;
  grid.back() = omega_max;
  return grid;
}

double FrequencySweep::g11_db(std::size_t i) const { return 20.0 * std::log10(std::abs(g11(i))); }

double FrequencySweep::h12_db(std::size_t i) const { return 20.0 * std::log10(std::abs(h12(i))); }

double FrequencySweep::sympl_residual(std::size_t i) const {
  return bogoliubov_residual(values[i]);
}

FrequencySweep frequency_sweep(const AmplifierNetwork& net, double omega_min, double omega_max,
                               std::size_t points, GridSpacing spacing) {
  FrequencySweep sweep;
  sweep.omegas = frequency_grid(omega_min, omega_max, points, spacing);
  sweep.values.reserve(points);
  for (double w : sweep.omegas) {
    sweep.values.push_back(network_transfer_at(net, Complex(0.0, w)));
  }
  return sweep;
}

std::optional<double> minus3db_frequency(const AmplifierNetwork& net,
                                         const std::vector<double>& freqs) {
  auto gain = [&net](double w) { return std::abs(network_transfer_at(net, Complex(0.0, w))(0, 0)); };
  const double target = gain(0.0) / std::sqrt(2.0);

  std::vector<double> grid = freqs;
  std::sort(grid.begin(), grid.end());
  double lo = 0.0;
  for (double hi : grid) {
    if (hi <= lo) continue;
    if (gain(hi) < target) {
      for (int iter = 0; iter < 200 && hi - lo > 1e-14 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (gain(mid) < target ? hi : lo) = mid;
      }
      return 0.5 * (lo + hi);
    }
    lo = hi;
  }
  return std::nullopt;
}

}  // namespace piamp
