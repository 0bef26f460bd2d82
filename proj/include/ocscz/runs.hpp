// Copyright 2026 The ocscz Authors
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

#ifndef OCSCZ_RUNS_HPP_
#define OCSCZ_RUNS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "ocscz/config.hpp"
#include "ocscz/fidelity.hpp"

// Subcommand drivers: each writes CSV output(s) plus a JSON run manifest.
namespace ocscz {

struct RunOutput {
  std::vector<std::string> files;
  std::vector<std::pair<std::string, double>> derived;  // for the manifest
  std::vector<std::string> warnings;
};

struct QubitMap {
  std::vector<double> eps_over_U, t_over_U;  // axes
  std::vector<double> sensitivity, J;        // row-major, eps fastest
  std::vector<char> allowed;                 // J <= j_max and Delta_FH > 0
  double max = 0.0;
  double eps_at = 0.0, t_at = 0.0;
};

QubitMap qubit_sensitivity_map(const Config& cfg);

struct CouplerMap {
  std::vector<double> E_J, E_C;  // axes
  std::vector<double> slope, n_g0;  // |d omega_c / d n_g| (rad/ns), row-major, E_J fastest
  std::vector<char> allowed;     // E_J >= r E_C and bias feasible
  double max = 0.0;
  double ej_at = 0.0, ec_at = 0.0;
};

CouplerMap coupler_sensitivity_map(const Config& cfg);

struct SweepPoint {
  std::vector<double> coords;
  Scheme scheme = Scheme::kOffResonant;
  bool ok = true;
  std::string status = "ok";
  GateReport report;
};

// Grid points in row-major order (first axis slowest), each scheme in turn.
std::vector<SweepPoint> sweep_fidelity(const Config& cfg);

enum class MapKind { kQubit, kCoupler, kBoth };

RunOutput run_rx_spectrum(const Config& cfg, const std::string& out);
RunOutput run_transmon_dispersion(const Config& cfg, const std::string& out);
RunOutput run_sensitivity_map(const Config& cfg, const std::string& out, MapKind kind);
RunOutput run_synth_pulse(const Config& cfg, const std::string& out);
RunOutput run_simulate_gate(const Config& cfg, const std::string& out);
RunOutput run_sweep_fidelity(const Config& cfg, const std::string& out);

// "<out>.manifest.json": every config key, derived quantities, seed, files.
std::string manifest_path(const std::string& out);
void write_manifest(const std::string& out, const std::string& subcommand, const Config& cfg,
                    const RunOutput& result);

}  // namespace ocscz

#endif  // OCSCZ_RUNS_HPP_
