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

#ifndef OCSCZ_CONFIG_HPP_
#define OCSCZ_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocscz/fidelity.hpp"
#include "ocscz/hybrid.hpp"
#include "ocscz/noise.hpp"

// Run configuration. Grammar (see docs/config.md):
//   # comment
//   [section]
//   key = value
// Every key has a default; unknown sections or keys are errors.
namespace ocscz {

struct QubitSection {
  double U_meV = 4.0;
  double U_C_over_U = 0.2;
  double t_over_U = 0.013;
  std::optional<double> eps_m_over_U;  // unset: sensitivity ridge
  double eps_over_U = 0.0;
};

struct TransmonSection {
  double E_J = 3.0;  // h GHz
  double E_C = 3.0;
  int cutoff = 12;
  std::optional<double> n_g0;  // unset: parity-aware bias
  double parity_split_ghz = 1.0;
};

struct NoiseSection {
  double A = 0.0;      // base amplitude, defined for beta = 1
  double scale = 1.0;  // ratio to the base amplitude
  double beta = 1.0;
  double f_low_hz = 1e4;
  double f_high_hz = 1e11;
  double pivot_hz = 1e7;  // beta != 1 keeps the PSD fixed here
};

enum class SchemeChoice { kOffResonant, kDD, kBoth };

struct SimulationSection {
  SchemeChoice scheme = SchemeChoice::kOffResonant;
  double samples_per_period = 1000.0;
  uint64_t seed = 1;
  int workers = 1;
  int mc_trajectories = 4000;
  int mc_modes = 400;
};

struct SynthesisSection {
  int restarts = 20;
  uint64_t seed = 0x5eed;
  double residual_tol = 1e-6;
  double theta_tol = 1e-4;
};

struct RxSpectrumSection {
  double eps_min_over_U = 0.0;
  double eps_max_over_U = 0.9;
  int points = 181;
};

struct DispersionSection {
  double n_g_min = -1.0;
  double n_g_max = 1.0;
  int points = 401;
  int levels = 4;
};

struct QubitMapSection {
  double eps_min_over_U = 0.3;
  double eps_max_over_U = 0.6;
  int eps_points = 200;
  double t_min_over_U = 0.002;
  double t_max_over_U = 0.03;
  int t_points = 200;
  double j_max_ghz = 0.7;
};

struct CouplerMapSection {
  double ej_min = 0.03;
  double ej_max = 3.0;
  int ej_points = 100;
  double ec_min = 0.03;
  double ec_max = 3.0;
  int ec_points = 100;
  double min_ej_over_ec = 1.0;
};

struct SynthPulseSection {
  int bloch_stride = 10;
};

struct SweepAxis {
  std::string name;  // any numeric "section.key"
  bool log = false;
  double min = 0.0, max = 0.0;
  int points = 0;

  std::vector<double> values() const;
};

struct SweepSection {
  std::vector<SweepAxis> axes;  // keys axis1, axis2, axis3
};

struct Config {
  QubitSection qubit;
  TransmonSection transmon;
  double alpha = 0.2;
  NoiseSection noise_qubit{kQubitNoiseA0};
  NoiseSection noise_coupler{kCouplerNoiseA0};
  SimulationSection simulation;
  SynthesisSection synthesis;
  RxSpectrumSection rx_spectrum;
  DispersionSection transmon_dispersion;
  QubitMapSection qubit_map;
  CouplerMapSection coupler_map;
  SynthPulseSection synth_pulse;
  SweepSection sweep;
};

// Parse text; `origin` names the source in error messages.
Config parse_config(const std::string& text, const std::string& origin = "<config>");
Config load_config(const std::string& path);
// Range checks naming the offending key.
void validate(const Config& cfg);

// Set a key by its dotted name ("coupling.alpha", "noise.qubit.scale").
void set_config_value(Config& cfg, const std::string& name, const std::string& value);
bool is_numeric_key(const std::string& name);
// All keys and their current values in registry order.
std::vector<std::pair<std::string, std::string>> config_entries(const Config& cfg);
// Re-parsable text form.
std::string to_text(const Config& cfg);

SweepAxis parse_axis(const std::string& text);
std::string format_axis(const SweepAxis& a);

// Derived objects.
QubitParams qubit_params(const Config& cfg);
TransmonParams transmon_params(const Config& cfg);
HybridConfig hybrid_config(const Config& cfg);
NoiseSpec qubit_noise(const Config& cfg);
NoiseSpec coupler_noise(const Config& cfg);
FidelityOptions fidelity_options(const Config& cfg);
SynthesisOptions synthesis_options(const Config& cfg);

const char* scheme_choice_name(SchemeChoice s);
SchemeChoice parse_scheme(const std::string& s);

}  // namespace ocscz

#endif  // OCSCZ_CONFIG_HPP_
