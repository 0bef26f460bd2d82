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

#ifndef OCSCZ_HYBRID_HPP_
#define OCSCZ_HYBRID_HPP_

#include <array>

#include "ocscz/ocs_transmon.hpp"
#include "ocscz/pulse_spec.hpp"
#include "ocscz/rx_qubit.hpp"
#include "ocscz/units.hpp"

// Two qubits longitudinally coupled to one OCS transmon. Two-qubit states are
// ordered |00>, |01>, |10>, |11>; each carries a coupler {|g>, |e>} pair, so
// index 2*ab + {0, 1} in 8x8 matrices.
namespace ocscz {

struct HybridConfig {
  QubitParams qubitA;
  QubitParams qubitB;
  TransmonParams transmon;  // n_g is ignored; n_g0 is the bias
  double alpha = 0.2;
  double n_g0 = 0.25;
  bool symmetric = true;
};

void validate(const HybridConfig& cfg);

// g^D = 2 E_C n_zpf alpha (<0|n2|0> - <1|n2|1>), h GHz. qubit 0 = A, 1 = B.
double coupling_strength(const HybridConfig& cfg, int qubit = 0);
// Spacing of the effective gate charge between |00>, |01>, |11>.
double gate_charge_shift(const HybridConfig& cfg);
// n_g0 - sum_D g^D sigma_z^D / (8 E_C n_zpf), sigma_z = +1 for |0>.
std::array<double, 4> effective_gate_charges(const HybridConfig& cfg);

struct ConditionalLadder {
  std::array<double, 4> omega_ab{};  // h GHz
  double delta_omega_c = 0.0;        // |omega_11 - omega_10|, rad/ns
  double delta_omega_linear = 0.0;   // |d omega_c/d n_g| * Delta n_g, rad/ns
  int sign = 1;                      // +1 when omega_11 < omega_10
  double linearity_residual = 0.0;
  bool linear_ok = true;             // residual < 0.05

  double omega11() const { return kTwoPi * omega_ab[3]; }  // rad/ns
  // Rotating-frame excited-state energy of block ab for drive detuning
  // delta = omega_11 - omega_d.
  double block_detuning(int ab, double delta) const;
};

ConditionalLadder conditional_ladder(const HybridConfig& cfg);
// Evenly spaced ladder with omega_11 at omega11_ghz; for tests and sweeps.
ConditionalLadder linear_ladder(double omega11_ghz, double delta_omega_c, int sign);

inline constexpr std::array<int, 4> kLadderIndex = {2, 1, 1, 0};

Mat2 block_hamiltonian(const ConditionalLadder& ladder, const PulseSpec& pulse,
                       int ab, double t);
Mat8 rotating_frame_hamiltonian(const ConditionalLadder& ladder,
                                const PulseSpec& pulse, double t);

}  // namespace ocscz

#endif  // OCSCZ_HYBRID_HPP_
