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

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "piamp/amp_synth.hpp"
#include "piamp/errors.hpp"
#include "piamp/serialize.hpp"

namespace piamp::cli {

namespace {

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridOptions {
  std::optional<double> omega_min;
  std::optional<double> omega_max;
  std::size_t points = 200;
  std::string spacing = "log";
};

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoFailure("cannot open '" + path + "' for reading");
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os || !(os << text) || !os.flush()) {
    throw IoFailure("cannot write '" + path + "'");
  }
}

double resolve_tolerance(const std::optional<double>& flag, double fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kToleranceEnv); env != nullptr && *env != '\0') {
    const double tol = parse_double(env, kToleranceEnv);
    if (!(tol > 0.0)) {
      throw DomainError(std::string(kToleranceEnv) + " must be positive");
    }
    return tol;
  }
  return fallback;
}

GridSpacing parse_spacing(const std::string& s) {
  if (s == "log") return GridSpacing::Log;
  if (s == "linear") return GridSpacing::Linear;
  throw ParseError("spacing must be 'log' or 'linear', got '" + s + "'");
}

std::vector<double> grid_for(const GridOptions& g, double scale) {
  return frequency_grid(g.omega_min.value_or(1e-3 * scale), g.omega_max.value_or(1e3 * scale),
                        g.points, parse_spacing(g.spacing));
}

void add_grid_flags(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--min", g.omega_min, "Lowest frequency in rad/s (default 1e-3 x scale)");
  cmd->add_option("--max", g.omega_max, "Highest frequency in rad/s (default 1e3 x scale)");
  cmd->add_option("--points", g.points, "Number of grid points")->capture_default_str();
  cmd->add_option("--spacing", g.spacing, "log or linear")->capture_default_str();
}

int cmd_synthesize(const std::string& gain_text, double bandwidth, const std::string& out_path,
                   GridOptions grid, const std::optional<double>& tol_flag, std::ostream& out) {
  const double tol = resolve_tolerance(tol_flag, 1e-8);
  const AmplifierDCSpec spec(parse_complex(gain_text));
  const AmplifierNetwork net = synthesize(spec, bandwidth);
  const SynthesisReport report = verify_synthesis(net, grid_for(grid, bandwidth));

  Json report_json = report_to_json(report);
  report_json["passed"] = report.passed(tol);
  report_json["min_added_noise"] = min_added_noise(spec);
  if (out_path.empty()) {
    Json both;
    both["network"] = network_to_json(net);
    both["report"] = report_json;
    out << both.dump(2) << '\n';
  } else {
    write_text_file(out_path, network_to_json(net).dump(2) + "\n");
    out << report_json.dump(2) << '\n';
  }
  return report.passed(tol) ? kPass : kVerificationFailed;
}

int cmd_bound(const std::string& gain_text, std::ostream& out) {
  const AmplifierDCSpec spec(parse_complex(gain_text));
  Json j;
  j["min_added_noise"] = min_added_noise(spec);
  j["optimal"] = gain_matrix_to_json(optimal_dc_matrix(spec));
  out << j.dump(2) << '\n';
  return kPass;
}

Json fit_to_json(const BeamsplitterFit& fit) {
  Json j = beamsplitter_to_json(fit.params);
  j["global_phase"] = fit.global_phase;
  return j;
}

int cmd_decompose(const std::string& path, std::ostream& out) {
  const ComplexMatrix gbar = matrix_from_json(read_json_file(path));
  const ShaleFactors f = shale_decompose(gbar);
  Json j;
  j["factors"] = shale_to_json(f);
  j["beamsplitter_S1"] = fit_to_json(beamsplitter_params(f.s1));
  j["beamsplitter_S2"] = fit_to_json(beamsplitter_params(f.s2));
  j["reconstruction_residual"] = (shale_reconstruct(f) - gbar).norm();
  out << j.dump(2) << '\n';
  return kPass;
}

int cmd_check(const std::string& path, const GridOptions& grid,
              const std::optional<double>& tol_flag, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tolerance(tol_flag, kRealizabilityTolerance);
  const Json doc = read_json_file(path);
  if (!doc.is_object() || (!doc.contains("bs_in") && !doc.contains("A"))) {
    throw ParseError(path + ": neither a state-space system nor an amplifier network");
  }

  Json j;
  QuantumStateSpace sys;
  std::optional<TfProbeReport> probe;
  if (doc.contains("bs_in")) {
    const AmplifierNetwork net = network_from_json(doc);
    const CascadeRealization cascade = cascade_realization(net);
    sys = cascade.core;
    probe = tf_realizability_probe(
        [&net](Complex s) { return network_transfer_at(net, s); },
        cascade.scattering, grid_for(grid, net.epsilon), tol);
    j["kind"] = "network";
  } else {
    sys = state_space_from_json(doc);
    const double scale = std::max(1.0, sys.a().expand().norm());
    probe = tf_realizability_probe(sys, grid_for(grid, scale), tol);
    j["kind"] = "state_space";
  }
  j["stable"] = is_stable(sys);

  ComplexMatrix theta;
  try {
    theta = solve_theta(sys);
  } catch (const NoUniqueSolutionError& e) {
    j["error"] = e.what();
    j["tf_probe"] = probe_report_to_json(*probe);
    out << j.dump(2) << '\n';
    err << "check: " << e.what() << '\n';
    return kVerificationFailed;
  }
  const RealizabilityCertificate cert = check_realizability(sys, theta, tol);
  j["certificate"] = certificate_to_json(cert);
  j["tf_probe"] = probe_report_to_json(*probe);
  const bool ok = cert.passed() && probe->passed();
  j["passed"] = ok;
  out << j.dump(2) << '\n';
  return ok ? kPass : kVerificationFailed;
}

int cmd_bode(const std::string& network_path, const std::string& csv_path, const GridOptions& grid,
             std::ostream& out) {
  const AmplifierNetwork net = network_from_json(read_json_file(network_path));
  const std::vector<double> omegas = grid_for(grid, net.epsilon);
  const FrequencySweep sweep =
      frequency_sweep(net, omegas.front(), omegas.back(), omegas.size(), parse_spacing(grid.spacing));

  std::ostringstream csv;
  write_sweep_csv(csv, sweep);
  write_text_file(csv_path, csv.str());

  const ComplexMatrix dc = network_transfer_at(net, 0.0);
  Json j;
  j["points"] = sweep.omegas.size();
  j["dc_g11_db"] = 20.0 * std::log10(std::abs(dc(0, 0)));
  j["dc_h12_db"] = 20.0 * std::log10(std::abs(dc(0, 3)));
  const auto w3 = minus3db_frequency(net, sweep.omegas);
  j["minus3db_rad_s"] = w3 ? Json(*w3) : Json(nullptr);
  out << j.dump(2) << '\n';
  return kPass;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) {
    throw ParseError("empty complex number");
  }
  const char unit = text.back();
  if (unit != 'j' && unit != 'i') {
    return {parse_double(text, "real number"), 0.0};
  }
  text.remove_suffix(1);

  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double(s, "imaginary part");
  };
  if (split == std::string_view::npos) {
    return {0.0, imag_part(text)};
  }
  return {parse_double(text.substr(0, split), "real part"), imag_part(text.substr(split))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthesis and verification of minimum-noise phase-insensitive amplifiers",
               "piamp"};
  app.require_subcommand(1);

  std::string gain_text;
  double bandwidth = 0.0;
  std::string out_path;
  std::string in_path;
  std::string csv_path;
  std::optional<double> tol_flag;
  GridOptions grid;
  GridOptions synth_grid;
  synth_grid.points = 50;

  auto* synth = app.add_subcommand("synthesize", "Build the two-squeezer amplifier for a DC gain");
  synth->add_option("--gain", gain_text, "Signal gain g11, e.g. 2 or 1.5+0.5j")->required();
  synth->add_option("--bandwidth", bandwidth, "Bandwidth scale epsilon in rad/s")->required();
  synth->add_option("--out", out_path, "Write the network JSON here");
  synth->add_option("--tol", tol_flag, "Verification tolerance");
  add_grid_flags(synth, synth_grid);

  auto* bound = app.add_subcommand("bound", "Minimum added noise and the optimal DC matrix");
  bound->add_option("--gain", gain_text, "Signal gain g11")->required();

  auto* decompose = app.add_subcommand("decompose", "Shale decomposition of a 4x4 matrix JSON");
  decompose->add_option("--matrix", in_path, "Matrix JSON file")->required();

  auto* check = app.add_subcommand("check", "Physical realizability of a system or network JSON");
  check->add_option("--input", in_path, "State-space or network JSON file")->required();
  check->add_option("--tol", tol_flag, "Realizability tolerance");
  add_grid_flags(check, grid);

  auto* bode = app.add_subcommand("bode", "Frequency sweep of a network JSON to CSV");
  bode->add_option("--network", in_path, "Network JSON file")->required();
  bode->add_option("--csv", csv_path, "Output CSV file")->required();
  add_grid_flags(bode, grid);

  std::vector<std::string> argv_storage{"piamp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kParseError;
  }

  try {
    if (synth->parsed()) return cmd_synthesize(gain_text, bandwidth, out_path, synth_grid, tol_flag, out);
    if (bound->parsed()) return cmd_bound(gain_text, out);
    if (decompose->parsed()) return cmd_decompose(in_path, out);
    if (check->parsed()) return cmd_check(in_path, grid, tol_flag, out, err);
    if (bode->parsed()) return cmd_bode(in_path, csv_path, grid, out);
  } catch (const IoFailure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kParseError;
}

}  // namespace piamp::cli
