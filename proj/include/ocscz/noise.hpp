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

#ifndef OCSCZ_NOISE_HPP_
#define OCSCZ_NOISE_HPP_

#include <cstdint>
#include <vector>

#include "ocscz/hybrid.hpp"
#include "ocscz/propagator.hpp"
#include "ocscz/pulse_spec.hpp"
#include "ocscz/units.hpp"

// 1/f^beta charge noise. Spectra are double sided, S[w] = A (2 pi / |w|)^beta
// between the angular cutoffs; autocorrelations integrate S over both signs
// of w with measure dw / 2 pi.
namespace ocscz {

enum class NoiseKind { kQubit, kCoupler };
enum class Scheme { kOffResonant, kDD };

const char* scheme_name(Scheme s);

struct NoiseSpec {
  double A = 0.0;  // qubit: ueV^2/Hz on eps_m; coupler: (1e-3 e)^2/Hz on q_g
  double beta = 1.0;
  double omega_l = kTwoPi * 1e4;   // rad/s
  double omega_h = kTwoPi * 1e11;  // rad/s
};

void validate(const NoiseSpec& spec);

inline constexpr double kQubitNoiseA0 = 0.21;   // ueV^2/Hz
inline constexpr double kCouplerNoiseA0 = 0.5;  // (1e-3 e)^2/Hz

NoiseSpec qubit_noise_preset();
NoiseSpec coupler_noise_preset();
// Same PSD at pivot_hz: A_beta = A_1 * pivot^(beta - 1).
NoiseSpec rescale_beta(const NoiseSpec& spec, double beta, double pivot_hz = 1e7);

enum class SensitivityUnit { kPerEpsM, kRadPerNsPerNg };

struct Sensitivity {
  double value;
  SensitivityUnit unit;
};

// Frequency-noise amplitude A_w (rad^2/s^2 per Hz at 1 Hz). Qubit amplitudes
// convert ueV through h (1 ueV <-> 241.798935 MHz).
double frequency_noise_power(const NoiseSpec& spec, Sensitivity s, NoiseKind kind);

// Frequency noise zeta(t) seen by a transition, in ns units.
struct FrequencyNoise {
  double a_omega = 0.0;  // rad^2/s^2 per Hz at 1 Hz
  double beta = 1.0;
  double omega_l = kTwoPi * 1e4;  // rad/s
  double omega_h = kTwoPi * 1e11;

  // S[w], w in rad/ns, result in rad^2/ns.
  double psd(double omega) const;
  // <zeta(t) zeta(0)>, t in ns, result rad^2/ns^2.
  double autocorrelation(double t) const;
  // int_{w1}^{w2} S dw over positive w, w in rad/ns.
  double band_power(double w1, double w2) const;
};

FrequencyNoise frequency_noise(const NoiseSpec& spec, Sensitivity s, NoiseKind kind);

// Log-constant of the first-order Gaussian exponent for a sharp lower
// cutoff: <phi^2>/2 = A t^2 (ln(1/(w_l t)) + 3/2 - gamma_E).
inline constexpr double kRamseyLogConstant = 1.5 - 0.57721566490153286;

// Gamma_2 in 1/ns; a_omega in rad^2/s^2 per Hz, t in ns, omega_l in rad/s.
double qubit_dephasing_rate(double a_omega, bool dd, double t_ns,
                            double omega_l = kTwoPi * 1e4);
// (1/T) int_0^T sqrt(ln(1/(w_l t)) + c) dt.
double mean_sqrt_log(double omega_l, double t_ns);

// Two-qubit IF_D from the closed forms; the lever arm and coupler slope set
// the gate time, qubit noise in ueV^2/Hz. coupler_sensitivity in rad/ns.
double qubit_infidelity(const NoiseSpec& spec, double alpha,
                        double coupler_sensitivity, Scheme scheme);
// Per-qubit infidelity for a qubit with slope q_sens and RX exposure time
// (t_g for offres, one sqrt(CZ) segment for DD).
double qubit_infidelity_single(const NoiseSpec& spec, double q_sens, Scheme scheme,
                               double segment_time_ns);

// Band-limited 1/f^beta autocorrelation evaluator.
class Autocorrelation {
 public:
  explicit Autocorrelation(const FrequencyNoise& n) : noise_(n) {}
  double operator()(double t_ns) const { return noise_.autocorrelation(t_ns); }

 private:
  FrequencyNoise noise_;
};

Autocorrelation autocorrelation(const FrequencyNoise& n);

struct CumulantResult {
  std::vector<Mat8> outputs;
  double min_eigenvalue = 0.0;
  bool positivity_warning = false;  // some eigenvalue below -1e-3
  double max_trace_error = 0.0;
};

// Second-order cumulant master equation in the interaction picture of the
// noiseless sequence; inputs are rotating-frame density matrices at t = 0.
CumulantResult cumulant_evolve(const SequenceEvolution& ev, const FrequencyNoise& noise,
                               const std::vector<Mat8>& inputs, int workers = 1);
Mat8 cumulant_evolve(const ConditionalLadder& ladder, const PulseSpec& pulse,
                     const FrequencyNoise& noise, const Mat8& rho0);

// Trajectory noise: zeta(t) = sum_k a_k cos(w_k t + phi_k), log-spaced w_k,
// a_k^2 = 4 (band power) / 2 pi so that <zeta(t) zeta(0)> matches S.
struct NoiseModes {
  std::vector<double> omega;  // rad/ns
  std::vector<double> amp;    // rad/ns
};

NoiseModes noise_modes(const FrequencyNoise& n, int count = 400);

// Counter-based stream: trajectory i of `seed` is independent of scheduling.
std::vector<double> trajectory_phases(uint64_t seed, uint64_t trajectory, size_t count);
double noise_value(const NoiseModes& m, const std::vector<double>& phases, double t_ns);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // batch means over 10 batches
};

// Average of U rho0 U^dagger over noise trajectories.
Mat8 mc_dephasing_oracle(const ConditionalLadder& ladder, const GateSequence& seq,
                         const FrequencyNoise& noise, const Mat8& rho0, int n_traj,
                         uint64_t seed, int n_modes = 400, int workers = 1);
Mat8 mc_dephasing_oracle(const ConditionalLadder& ladder, const PulseSpec& pulse,
                         const FrequencyNoise& noise, const Mat8& rho0, int n_traj,
                         uint64_t seed);

// Entanglement fidelity per trajectory against `ideal` (qubit 4x4 with |g>).
McEstimate mc_entanglement_fidelity(const ConditionalLadder& ladder,
                                    const GateSequence& seq, const FrequencyNoise& noise,
                                    const Mat4& ideal, int n_traj, uint64_t seed,
                                    int n_modes = 400, int workers = 1);

// Qubit coherence <cos phi>, phi = int s(t) zeta(t) dt with s = +1 for a
// Ramsey window [0, T] or +1/-1 halves for a Hahn echo of total length T.
McEstimate mc_qubit_coherence(const FrequencyNoise& n, bool echo, double total_ns,
                              int n_traj, uint64_t seed, int n_modes = 400,
                              int workers = 1);

}  // namespace ocscz

#endif  // OCSCZ_NOISE_HPP_
