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

#ifndef OCSCZ_CAPNET_HPP_
#define OCSCZ_CAPNET_HPP_

#include <array>

#include <Eigen/Dense>

// One triple dot plus the coupler island; nodes ordered dot1, dot2, dot3,
// coupler.
namespace ocscz {

struct CapNetwork {
  double C1 = 0, C2 = 0, C3 = 0;           // dot to ground (F)
  double Cchi1 = 0, Cchi2 = 0, Cchi3 = 0;  // dot to coupler (F)
  double Cm12 = 0, Cm23 = 0;               // interdot (F)
  double Cc = 0;                           // coupler to ground (F)
  double Cg1 = 0, Cg2 = 0, Cg3 = 0, CgC = 0;  // control gates (F)
};

// Maxwell capacitance matrix: node totals on the diagonal, minus the mutual
// capacitance off the diagonal.
Eigen::Matrix4d build_capacitance_matrix(const CapNetwork& net);

// Exact [C^-1]_{i4}, i = dot 1..3 (1/F).
std::array<double, 3> interaction_coefficients(const CapNetwork& net);
// Leading order C_chi_i / (C_i C_c).
std::array<double, 3> first_order_coefficients(const CapNetwork& net);

struct LeverArms {
  double alpha1 = 0, alpha2 = 0, alpha3 = 0;
  double alpha = 0;              // alpha2 - alpha1
  bool longitudinal = false;     // alpha1 == alpha3
  double transverse_weight = 0;  // |alpha1 - alpha3| / 2
};

LeverArms lever_arms(const CapNetwork& net, double tol = 1e-12);

// e^2 / (2 C_sigma) of the coupler node, in h GHz.
double coupler_charging_energy(const CapNetwork& net);

}  // namespace ocscz

#endif  // OCSCZ_CAPNET_HPP_
