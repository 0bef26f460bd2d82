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

#ifndef OCSCZ_PULSES_HPP_
#define OCSCZ_PULSES_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>

#include "ocscz/hybrid.hpp"
#include "ocscz/pulse_spec.hpp"
#include "ocscz/units.hpp"

namespace ocscz {

inline constexpr double kDefaultSamplesPerPeriod = 1000.0;

// Uniform step count giving `samples_per_period` points per period of the
// fastest frequency in the rotating frame (never fewer than 200).
int required_steps(const ConditionalLadder& ladder, const PulseSpec& pulse,
                   double samples_per_period = kDefaultSamplesPerPeriod);

// Constant-amplitude drive halfway between omega_11 and its neighbour:
// Omega = sqrt(5/12) dw, t_g = pi sqrt(6) / dw.
PulseSpec off_resonant_cz(const ConditionalLadder& ladder,
                          double samples_per_period = kDefaultSamplesPerPeriod);

struct MagnusResiduals {
  double r0 = 0.0;
  cdouble r1, r2;
  double max_abs() const;
};

// r0 = int Omega_0 - pi, r_k = int Omega_0 exp(-i k dw t), over [0, t_g/2].
MagnusResiduals magnus_residuals(const GamamParams& p, double t_g, double delta_omega_c);

struct SynthesisOptions {
  int restarts = 20;
  uint64_t seed = 0x5eed;
  double residual_tol = 1e-6;
  double theta_tol = 1e-4;
  double samples_per_period = kDefaultSamplesPerPeriod;
  // Calibrate Theta on the sequence sqrt(CZ), XX, sqrt(CZ), XX so that its
  // phase is 2 theta_target; residual coupler excitation otherwise shifts it.
  bool dd_composite = false;
};

struct SynthesisReport {
  GamamParams params;
  MagnusResiduals residuals;
  double edge_ratio = 0.0;  // envelope at t = 0 over its peak
  int restarts_converged = 0;
};

// Stage-one envelope meeting the first-order Magnus conditions.
SynthesisReport optimize_gamam(double delta_omega_c, double t_g,
                               const SynthesisOptions& opt = {});

// Resonant two-stage GaMAM pulse; Theta solved so the propagated conditional
// phase equals theta_target. t_g <= 0 selects 16 / dw.
PulseSpec synthesize_cphase(const ConditionalLadder& ladder, double theta_target,
                            double t_g = 0.0, const SynthesisOptions& opt = {},
                            SynthesisReport* report = nullptr);

// sigma_xx U sigma_xx U.
Mat4 dd_cz_compose(const Mat4& sqrt_cz);

// Plain-text table: '#' header (kind, omega_d, t_g, Theta), then
// time_ns,omega_x,omega_y rows.
void write_pulse_table(std::ostream& os, const PulseSpec& pulse);

}  // namespace ocscz

#endif  // OCSCZ_PULSES_HPP_
