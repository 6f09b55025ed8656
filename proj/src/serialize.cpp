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

#include "piamp/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "piamp/errors.hpp"

namespace piamp {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) {
    throw ParseError(where + ": expected a JSON object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(where + "." + key + ": missing field");
  }
  return *it;
}

double number(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number()) {
    throw ParseError(where + "." + key + ": expected a number");
  }
  return v.get<double>();
}

Eigen::Index positive_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(where + "." + key + ": expected a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

Json real_rows(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd read_rows(const Json& j, const char* key, Eigen::Index rows, Eigen::Index cols,
                          const std::string& where) {
  const Json& v = field(j, key, where);
  const std::string path = where + "." + key;
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != rows) {
    throw ParseError(path + ": expected " + std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError(path + "[" + std::to_string(i) + "]: expected " + std::to_string(cols) +
                       " entries");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& x = row[static_cast<std::size_t>(k)];
      if (!x.is_number()) {
        throw ParseError(path + "[" + std::to_string(i) + "][" + std::to_string(k) +
                         "]: expected a number");
      }
      m(i, k) = x.get<double>();
    }
  }
  return m;
}

DoubledUpMatrix doubled_up_field(const Json& j, const char* key, Eigen::Index rows,
                                 Eigen::Index cols, const std::string& where) {
  const std::string path = where + "." + key;
  const ComplexMatrix full = matrix_from_json(field(j, key, where), path);
  if (full.rows() != rows || full.cols() != cols) {
    throw ParseError(path + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                     " matrix");
  }
  try {
    return DoubledUpMatrix::extract(full);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["re"] = real_rows(m.real());
  j["im"] = real_rows(m.imag());
  return j;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
  const Eigen::Index rows = positive_int(j, "rows", where);
  const Eigen::Index cols = positive_int(j, "cols", where);
  const Eigen::MatrixXd re = read_rows(j, "re", rows, cols, where);
  const Eigen::MatrixXd im = read_rows(j, "im", rows, cols, where);
  ComplexMatrix m(rows, cols);
  m.real() = re;
  m.imag() = im;
  return m;
}

Json state_space_to_json(const QuantumStateSpace& sys) {
  Json j;
  j["n"] = sys.modes();
  j["m"] = sys.channels();
  j["A"] = matrix_to_json(sys.a().expand());
  j["B"] = matrix_to_json(sys.b().expand());
  j["C"] = matrix_to_json(sys.c().expand());
  j["D"] = matrix_to_json(sys.d().expand());
  return j;
}

QuantumStateSpace state_space_from_json(const Json& j) {
  const std::string where = "system";
  const Eigen::Index n = positive_int(j, "n", where);
  const Eigen::Index m = positive_int(j, "m", where);
  return QuantumStateSpace(doubled_up_field(j, "A", 2 * n, 2 * n, where),
                           doubled_up_field(j, "B", 2 * n, 2 * m, where),
                           doubled_up_field(j, "C", 2 * m, 2 * n, where),
                           doubled_up_field(j, "D", 2 * m, 2 * m, where));
}

Json certificate_to_json(const RealizabilityCertificate& cert) {
  Json j;
  j["passed"] = cert.passed();
  j["residual_lyap"] = cert.residual_lyap;
  j["residual_B"] = cert.residual_b;
  j["residual_D"] = cert.residual_d;
  j["inertia_ok"] = cert.inertia_ok;
  j["tolerance"] = cert.tolerance;
  j["theta"] = matrix_to_json(cert.theta);
  return j;
}

Json probe_report_to_json(const TfProbeReport& report) {
  Json j;
  j["passed"] = report.passed();
  j["sample_count"] = report.sample_count();
  j["max_residual"] = report.max_residual;
  j["infinity_residual"] = report.infinity_residual;
  j["symplectic_ok"] = report.symplectic_ok;
  j["infinity_ok"] = report.infinity_ok;
  j["tolerance"] = report.tolerance;
  return j;
}

Json gain_matrix_to_json(const AmplifierGainMatrix& m) {
  Json j;
  j["G"] = matrix_to_json(m.g);
  j["H"] = matrix_to_json(m.h);
  j["full"] = matrix_to_json(m.full());
  return j;
}

Json squeezer_to_json(const SqueezerParams& p) {
  Json j;
  j["kappa_rad_s"] = p.kappa;
  j["chi_re_rad_s"] = p.chi.real();
  j["chi_im_rad_s"] = p.chi.imag();
  j["epsilon_rad_s"] = p.epsilon;
  return j;
}

SqueezerParams squeezer_from_json(const Json& j, const std::string& where) {
  SqueezerParams p;
  p.kappa = number(j, "kappa_rad_s", where);
  p.chi = Complex(number(j, "chi_re_rad_s", where), number(j, "chi_im_rad_s", where));
  p.epsilon = number(j, "epsilon_rad_s", where);
  return p;
}

Json beamsplitter_to_json(const BeamsplitterParams& p) {
  Json j;
  j["theta"] = p.theta;
  j["phi1"] = p.phi1;
  j["phi2"] = p.phi2;
  j["phi3"] = p.phi3;
  return j;
}

BeamsplitterParams beamsplitter_from_json(const Json& j, const std::string& where) {
  return {number(j, "theta", where), number(j, "phi1", where), number(j, "phi2", where),
          number(j, "phi3", where)};
}

Json shale_to_json(const ShaleFactors& f) {
  Json j;
  j["r1"] = f.r1;
  j["r2"] = f.r2;
  j["S1"] = matrix_to_json(f.s1);
  j["S2"] = matrix_to_json(f.s2);
  return j;
}

Json network_to_json(const AmplifierNetwork& net) {
  Json j;
  j["spec"] = {{"g11_re", net.spec.g11().real()}, {"g11_im", net.spec.g11().imag()}};
  j["epsilon_rad_s"] = net.epsilon;
  j["bs_in"] = beamsplitter_to_json(net.bs_in);
  j["sq1"] = squeezer_to_json(net.sq1);
  j["sq2"] = squeezer_to_json(net.sq2);
  j["bs_out"] = beamsplitter_to_json(net.bs_out);
  j["gauge_phases"] = {net.gauge_phases[0], net.gauge_phases[1]};
  return j;
}

AmplifierNetwork network_from_json(const Json& j) {
  const std::string where = "network";
  AmplifierNetwork net;
  const Json& spec = field(j, "spec", where);
  net.spec = AmplifierDCSpec(
      Complex(number(spec, "g11_re", where + ".spec"), number(spec, "g11_im", where + ".spec")));
  net.epsilon = number(j, "epsilon_rad_s", where);
  net.bs_in = beamsplitter_from_json(field(j, "bs_in", where), where + ".bs_in");
  net.sq1 = squeezer_from_json(field(j, "sq1", where), where + ".sq1");
  net.sq2 = squeezer_from_json(field(j, "sq2", where), where + ".sq2");
  net.bs_out = beamsplitter_from_json(field(j, "bs_out", where), where + ".bs_out");
  const Json& phases = field(j, "gauge_phases", where);
  if (!phases.is_array() || phases.size() != 2 || !phases[0].is_number() ||
      !phases[1].is_number()) {
    throw ParseError(where + ".gauge_phases: expected two numbers");
  }
  net.gauge_phases = {phases[0].get<double>(), phases[1].get<double>()};
  return net;
}

Json report_to_json(const SynthesisReport& report) {
  Json j;
  j["passed"] = report.passed();
  j["dc_gain_db"] = report.dc_gain_db;
  j["dc_gain_error"] = report.dc_gain_error;
  j["dc_noise_figure"] = report.dc_noise_figure;
  j["noise_gap"] = report.noise_gap;
  j["dc_h11"] = report.dc_h11;
  j["max_sympl_residual"] = report.max_sympl_residual;
  j["probe_count"] = report.probe_count;
  j["squeezers_stable"] = report.squeezers_stable;
  j["minus3db_rad_s"] = optional_number(report.minus3db_rad_s);
  return j;
}

void write_sweep_csv(std::ostream& out, const FrequencySweep& sweep) {
  out << "omega_rad_s,g11_db,h12_db,g11_re,g11_im,h12_re,h12_im,sympl_residual\n";
  const auto old_precision = out.precision(17);
  for (std::size_t i = 0; i < sweep.omegas.size(); ++i) {
    const Complex g = sweep.g11(i);
    const Complex h = sweep.h12(i);
    out << sweep.omegas[i] << ',' << sweep.g11_db(i) << ',' << sweep.h12_db(i) << ','
        << g.real() << ',' << g.imag() << ',' << h.real() << ',' << h.imag() << ','
        << sweep.sympl_residual(i) << '\n';
  }
  out.precision(old_precision);
}

}  // namespace piamp
