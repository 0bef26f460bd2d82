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

#ifndef OCSCZ_UNITS_HPP_
#define OCSCZ_UNITS_HPP_

#include <complex>
#include <numbers>

#include <Eigen/Dense>

// Energies are carried as frequencies in h*GHz, times in ns, angular
// frequencies in rad/ns (numerically equal to Grad/s).
namespace ocscz {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double kGHzPerMeV = 241.798935;
inline constexpr double kHzPerMicroEV = 241.798935e6;
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kPlanck = 6.62607015e-34;             // J s

inline constexpr double mev_to_ghz(double mev) { return mev * kGHzPerMeV; }

using cdouble = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat8 = Eigen::Matrix<cdouble, 8, 8>;
using Vec8 = Eigen::Matrix<cdouble, 8, 1>;

}  // namespace ocscz

#endif  // OCSCZ_UNITS_HPP_
