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

// JSON and CSV formats for every artifact the command-line tool reads or
// writes. Readers throw ParseError with the offending field path.

#include <iosfwd>

#include "json.hpp"

#include "piamp/amp_synth.hpp"
#include "piamp/qsys.hpp"

namespace piamp {

using Json = nlohmann::ordered_json;

// {rows, cols, re: [[..]], im: [[..]]}
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& where = "matrix");

// {n, m, A, B, C, D}; matrices in full doubled-up form.
Json state_space_to_json(const QuantumStateSpace& sys);
QuantumStateSpace state_space_from_json(const Json& j);

Json certificate_to_json(const RealizabilityCertificate& cert);
Json probe_report_to_json(const TfProbeReport& report);

Json gain_matrix_to_json(const AmplifierGainMatrix& m);

// {kappa_rad_s, chi_re_rad_s, chi_im_rad_s, epsilon_rad_s}
Json squeezer_to_json(const SqueezerParams& p);
SqueezerParams squeezer_from_json(const Json& j, const std::string& where = "squeezer");

Json beamsplitter_to_json(const BeamsplitterParams& p);
BeamsplitterParams beamsplitter_from_json(const Json& j, const std::string& where = "beamsplitter");

Json shale_to_json(const ShaleFactors& f);

// {spec: {g11_re, g11_im}, epsilon_rad_s, bs_in, sq1, sq2, bs_out, gauge_phases}
Json network_to_json(const AmplifierNetwork& net);
AmplifierNetwork network_from_json(const Json& j);

Json report_to_json(const SynthesisReport& report);

// Header: omega_rad_s,g11_db,h12_db,g11_re,g11_im,h12_re,h12_im,sympl_residual
// Values carry 17 significant digits.
void write_sweep_csv(std::ostream& out, const FrequencySweep& sweep);

}  // namespace piamp
