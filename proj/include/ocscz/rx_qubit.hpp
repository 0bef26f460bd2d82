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

#ifndef OCSCZ_RX_QUBIT_HPP_
#define OCSCZ_RX_QUBIT_HPP_

#include <array>

#include <Eigen/Dense>

// Three-electron exchange-only qubit in a triple dot, Fermi-Hubbard model.
namespace ocscz {

struct QubitParams {
  double U = 0.0;      // on-site Hubbard energy (h GHz)
  double U_C = 0.0;    // nearest-neighbour Hubbard energy (h GHz)
  double eps_m = 0.0;  // middle-dot detuning (h GHz)
  double eps = 0.0;    // symmetric detuning; must be zero
  double t_hop = 0.0;  // tunnelling (h GHz)
};

// Detuning of the doubly occupied pair relative to (1,1,1).
double delta_fh(const QubitParams& p);
// |Delta_FH| < U: the four-state truncation is meaningful.
bool rx_regime_valid(const QubitParams& p);
void validate(const QubitParams& p);

// Basis {|T>, |S>, |L>, |R>}; L = (2,0,1), R = (1,0,2).
Eigen::Matrix4d fh_subspace_hamiltonian(const QubitParams& p);

struct RxSpectrum {
  std::array<double, 4> energies;  // ascending
  Eigen::Matrix4d states;          // column k is eigenvector k
};

RxSpectrum rx_eigensystem(const QubitParams& p);
double qubit_frequency(const QubitParams& p);

enum class SensitivityMethod { kAnalytic, kOccupation, kFull8 };

// d(omega_q)/d(eps_m), dimensionless and signed.
double charge_sensitivity(const QubitParams& p, SensitivityMethod method);

// <n_2> of qubit state 0 or 1.
double middle_dot_occupation(const QubitParams& p, int state);
// Occupations of dots 1..3 in eigenstate `state` (0..3).
std::array<double, 3> dot_occupations(const QubitParams& p, int state);

// J = 2 t^2 U / (U^2 - eps_m^2).
double exchange_energy(const QubitParams& p);

// All S = Sz = 1/2 three-electron states. Ordering:
//   0 |T>, 1 |S>, 2 (2,0,1), 3 (1,0,2), 4 (2,1,0), 5 (0,1,2), 6 (1,2,0),
//   7 (0,2,1)
// with the (1,1,1) reference energy removed so entries 0..3 reproduce the
// four-state model. Built from the second-quantized Hamiltonian with site
// potentials (0, eps_m, 0).
Eigen::Matrix<double, 8, 8> fh_full_hamiltonian(const QubitParams& p);

// Delta_FH / t maximizing |d omega_q / d eps_m|; the sensitivity depends on
// the ratio only.
double optimal_detuning_ratio();
double max_charge_sensitivity();
// Operating point on the sensitivity ridge with Delta_FH > 0.
QubitParams qubit_operating_point(double U, double U_C, double t_hop);

}  // namespace ocscz

#endif  // OCSCZ_RX_QUBIT_HPP_
