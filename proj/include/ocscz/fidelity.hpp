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

#ifndef OCSCZ_FIDELITY_HPP_
#define OCSCZ_FIDELITY_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ocscz/hybrid.hpp"
#include "ocscz/noise.hpp"
#include "ocscz/propagator.hpp"
#include "ocscz/pulses.hpp"
#include "ocscz/units.hpp"

namespace ocscz {

// The 16 product inputs {|0>, |1>, |+>, |+i>}^2, two-qubit part only.
std::vector<Eigen::Vector4cd> product_states();
// Same inputs as 8x8 density matrices with the coupler in |g>.
std::vector<Mat8> product_inputs();

// Ideal CPhase(target) dressed with the single-qubit phases of the noiseless
// propagator: diag(e^{i t00}, e^{i t01}, e^{i t10}, e^{i(t01 + t10 - t00 + target)}).
Mat4 corrected_ideal(const ConditionalPhases& phases, double target);

// (1/16) sum Tr(rho_out rho_ideal) over product_inputs(), ideal acting on
// the qubits with the coupler in |g>.
double entanglement_fidelity(const std::vector<Mat8>& outputs, const Mat4& ideal);
double entanglement_fidelity(const std::function<Mat8(const Mat8&)>& channel,
                             const Mat4& ideal);
double averaged_gate_fidelity(double f_e);

struct DecayFidelity {
  double value = 1.0;
  bool perturbative = true;  // Gamma t < 0.5
};

DecayFidelity gaussian_decay_fidelity(double gamma, double t_g);

struct InfidelityBreakdown {
  double qubitA = 0.0;
  double qubitB = 0.0;
  double coupler = 0.0;
};

struct GateReport {
  Scheme scheme = Scheme::kOffResonant;
  double F_e = 1.0;       // coupler channel, virtual-Z corrected
  double F_g = 1.0;
  double F_e_coherent = 1.0;  // noiseless
  double theta = 0.0;
  std::array<double, 4> leakage{};
  InfidelityBreakdown IF;
  double F_total = 1.0;
  double t_g = 0.0;            // total sequence length, ns
  double delta_omega_c = 0.0;  // rad/ns
  double g_coupling = 0.0;     // h GHz
  double coupler_slope = 0.0;  // rad/ns per n_g
  double qubit_slope = 0.0;    // d omega_q / d eps_m
  double min_eigenvalue = 0.0;
  bool positivity_warning = false;
  bool qubit_perturbative = true;
  uint64_t seed = 0;
};

void write_key_value(std::ostream& os, const GateReport& r);
std::string csv_header();
std::string csv_row(const GateReport& r);

struct FidelityOptions {
  double samples_per_period = kDefaultSamplesPerPeriod;
  int workers = 1;
  uint64_t seed = 1;
  int mc_trajectories = 4000;  // qubit dephasing when beta != 1
  int mc_modes = 400;
  SynthesisOptions synthesis;
};

// F = 1 - IF_A - IF_B - IF_C. Qubit terms use the Gaussian-decay form with
// the actual exposure time (closed-form rate for beta = 1, Monte Carlo
// coherence otherwise); the coupler term is 1 - F_g of the cumulant channel,
// which also carries the coherent error.
GateReport total_cz_fidelity(const HybridConfig& cfg, const NoiseSpec& noise_q,
                             const NoiseSpec& noise_c, Scheme scheme,
                             const FidelityOptions& opt = {});

}  // namespace ocscz

#endif  // OCSCZ_FIDELITY_HPP_
