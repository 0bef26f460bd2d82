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

#ifndef OCSCZ_OCS_TRANSMON_HPP_
#define OCSCZ_OCS_TRANSMON_HPP_

#include <vector>

#include <Eigen/Dense>

// Offset-charge-sensitive transmon in the charge basis.
namespace ocscz {

struct TransmonParams {
  double E_J = 3.0;  // h GHz
  double E_C = 3.0;  // h GHz
  double n_g = 0.0;  // units of 2e
  int cutoff = 12;   // charge states -N..N
};

void validate(const TransmonParams& p);

Eigen::MatrixXd charge_basis_hamiltonian(const TransmonParams& p);

struct CouplerSpectrum {
  std::vector<double> levels;  // lowest K, ascending (h GHz)
  double omega_c = 0.0;        // E1 - E0 (h GHz)
  double n_zpf = 0.0;          // (E_J / 32 E_C)^(1/4)
};

CouplerSpectrum coupler_spectrum(const TransmonParams& p, int levels = 6);
double transition_frequency(const TransmonParams& p);
double zero_point_charge(const TransmonParams& p);

struct ChargeSensitivity {
  double value = 0.0;              // d omega_c / d n_g (rad/ns == Grad/s)
  double finite_difference = 0.0;  // central difference
  double hellmann_feynman = 0.0;   // <8 E_C (n_g - n)>_1 - <...>_0
  bool near_degenerate = false;    // HF skipped, value is the FD result
};

ChargeSensitivity charge_dispersion_sensitivity(const TransmonParams& p);

struct BiasPoint {
  double n_g0 = 0.0;          // operating bias in [0, 1)
  double partner = 0.0;       // n_g0 + 0.5 (other quasiparticle parity)
  double slope = 0.0;         // d omega_c / d n_g at n_g0 (rad/ns)
  double partner_slope = 0.0;
};

// Bias with |omega_c(n) - omega_c(n + 1/2)| = target_split_ghz, picking the
// root whose larger parity slope is largest.
BiasPoint parity_aware_bias(const TransmonParams& p, double target_split_ghz = 1.0);

// Largest relative change of omega_c and its slope when N -> N + 5.
double cutoff_convergence(const TransmonParams& p);

}  // namespace ocscz

#endif  // OCSCZ_OCS_TRANSMON_HPP_
