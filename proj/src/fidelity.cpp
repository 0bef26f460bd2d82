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

#include "ocscz/fidelity.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ocscz/error.hpp"
#include "ocscz/ocs_transmon.hpp"
#include "ocscz/rx_qubit.hpp"

namespace ocscz {

std::vector<Eigen::Vector4cd> product_states() {
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<Eigen::Vector2cd, 4> s1 = {
      Eigen::Vector2cd(1, 0), Eigen::Vector2cd(0, 1), Eigen::Vector2cd(r, r),
      Eigen::Vector2cd(r, cdouble(0, r))};
  std::vector<Eigen::Vector4cd> out;
  for (const auto& a : s1)
    for (const auto& b : s1) {
      Eigen::Vector4cd q;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q(2 * i + j) = a(i) * b(j);
      out.push_back(q);
    }
  return out;
}

namespace {

Vec8 with_ground_coupler(const Eigen::Vector4cd& q) {
  Vec8 v = Vec8::Zero();
  for (int ab = 0; ab < 4; ++ab) v(2 * ab) = q(ab);
  return v;
}

}  // namespace

std::vector<Mat8> product_inputs() {
  std::vector<Mat8> out;
  for (const auto& q : product_states()) {
    const Vec8 v = with_ground_coupler(q);
    out.push_back(v * v.adjoint());
  }
  return out;
}

Mat4 corrected_ideal(const ConditionalPhases& ph, double target) {
  const auto& t = ph.theta_ab;
  Mat4 m = Mat4::Zero();
  m(0, 0) = std::polar(1.0, t[0]);
  m(1, 1) = std::polar(1.0, t[1]);
  m(2, 2) = std::polar(1.0, t[2]);
  m(3, 3) = std::polar(1.0, t[1] + t[2] - t[0] + target);
  return m;
}

double entanglement_fidelity(const std::vector<Mat8>& outputs, const Mat4& ideal) {
  const auto states = product_states();
  if (outputs.size() != states.size())
    fail(ErrorCode::kParameterDomain, "entanglement fidelity needs all 16 product inputs");
  double f = 0.0;
  for (size_t i = 0; i < states.size(); ++i) {
    const Vec8 target = with_ground_coupler(ideal * states[i]);
    f += (target.adjoint() * outputs[i] * target)(0, 0).real();
  }
  return f / static_cast<double>(states.size());
}

double entanglement_fidelity(const std::function<Mat8(const Mat8&)>& channel,
                             const Mat4& ideal) {
  std::vector<Mat8> out;
  for (const auto& rho : product_inputs()) out.push_back(channel(rho));
  return entanglement_fidelity(out, ideal);
}

double averaged_gate_fidelity(double f_e) {
  if (!(f_e >= -1e-12 && f_e <= 1.0 + 1e-12))
    fail(ErrorCode::kParameterDomain, "entanglement fidelity outside [0, 1]");
  return (4.0 * f_e + 1.0) / 5.0;
}

DecayFidelity gaussian_decay_fidelity(double gamma, double t_g) {
  require(gamma >= 0.0 && t_g >= 0.0, ErrorCode::kParameterDomain,
          "decay rate and time must be >= 0");
  const double x = gamma * t_g;
  return DecayFidelity{1.0 - 0.8 * x * x, x < 0.5};
}

namespace {

void put(std::ostream& os, const char* key, double v) {
  os << key << " = " << std::setprecision(12) << v << '\n';
}

}  // namespace

void write_key_value(std::ostream& os, const GateReport& r) {
  os << "scheme = " << scheme_name(r.scheme) << '\n';
  put(os, "F_total", r.F_total);
  put(os, "F_e", r.F_e);
  put(os, "F_g", r.F_g);
  put(os, "F_e_coherent", r.F_e_coherent);
  put(os, "theta", r.theta);
  for (int i = 0; i < 4; ++i) {
    const std::string k = "leakage_" + std::string(i < 2 ? "0" : "1") + (i % 2 ? "1" : "0");
    put(os, k.c_str(), r.leakage[i]);
  }
  put(os, "IF_qubitA", r.IF.qubitA);
  put(os, "IF_qubitB", r.IF.qubitB);
  put(os, "IF_coupler", r.IF.coupler);
  put(os, "t_g_ns", r.t_g);
  put(os, "delta_omega_c_mhz", r.delta_omega_c / kTwoPi * 1e3);
  put(os, "g_mhz", r.g_coupling * 1e3);
  put(os, "coupler_slope_rad_per_ns", r.coupler_slope);
  put(os, "qubit_slope", r.qubit_slope);
  put(os, "min_eigenvalue", r.min_eigenvalue);
  os << "positivity_warning = " << (r.positivity_warning ? "true" : "false") << '\n';
  os << "qubit_perturbative = " << (r.qubit_perturbative ? "true" : "false") << '\n';
  os << "seed = " << r.seed << '\n';
}

std::string csv_header() {
  return "scheme,F_total,F_e,F_g,F_e_coherent,theta,leakage_00,leakage_01,leakage_10,"
         "leakage_11,IF_qubitA,IF_qubitB,IF_coupler,t_g_ns,delta_omega_c_mhz";
}

std::string csv_row(const GateReport& r) {
  std::ostringstream os;
  os << std::setprecision(12) << scheme_name(r.scheme) << ',' << r.F_total << ',' << r.F_e
     << ',' << r.F_g << ',' << r.F_e_coherent << ',' << r.theta;
  for (double l : r.leakage) os << ',' << l;
  os << ',' << r.IF.qubitA << ',' << r.IF.qubitB << ',' << r.IF.coupler << ',' << r.t_g << ','
     << r.delta_omega_c / kTwoPi * 1e3;
  return os.str();
}

GateReport total_cz_fidelity(const HybridConfig& cfg, const NoiseSpec& noise_q,
                             const NoiseSpec& noise_c, Scheme scheme,
                             const FidelityOptions& opt) {
  validate(cfg);
  validate(noise_q);
  validate(noise_c);
  GateReport r;
  r.scheme = scheme;
  r.seed = opt.seed;

  const ConditionalLadder ladder = conditional_ladder(cfg);
  TransmonParams tp = cfg.transmon;
  tp.n_g = cfg.n_g0;
  r.coupler_slope = charge_dispersion_sensitivity(tp).value;
  r.delta_omega_c = ladder.delta_omega_c;
  r.g_coupling = coupling_strength(cfg, 0);

  GateSequence seq;
  double segment = 0.0;
  if (scheme == Scheme::kOffResonant) {
    const PulseSpec p = off_resonant_cz(ladder, opt.samples_per_period);
    segment = p.t_g;
    seq = single_pulse_sequence(p);
  } else {
    SynthesisOptions so = opt.synthesis;
    so.samples_per_period = opt.samples_per_period;
    so.dd_composite = true;
    // The low-leakage square root is CPhase(sign * pi / 2); both square to CZ.
    const PulseSpec p = synthesize_cphase(ladder, ladder.sign * kPi / 2.0, 0.0, so);
    segment = p.t_g;
    seq = dd_sequence(p);
  }
  r.t_g = segment * static_cast<double>(seq.pulses.size());

  const SequenceEvolution ev = evolve_sequence(ladder, seq);
  const ConditionalPhases ph = conditional_phases(blocks_of(ev.final));
  r.theta = ph.theta;
  r.leakage = ph.leakage;
  const Mat4 ideal = corrected_ideal(ph, kPi);

  const auto inputs = product_inputs();
  {
    std::vector<Mat8> coherent;
    for (const auto& rho : inputs) coherent.push_back(ev.final * rho * ev.final.adjoint());
    r.F_e_coherent = entanglement_fidelity(coherent, ideal);
  }

  // Coupler dephasing through the cumulant channel.
  const FrequencyNoise fc = frequency_noise(
      noise_c, {r.coupler_slope, SensitivityUnit::kRadPerNsPerNg}, NoiseKind::kCoupler);
  const CumulantResult cr = cumulant_evolve(ev, fc, inputs, opt.workers);
  r.min_eigenvalue = cr.min_eigenvalue;
  r.positivity_warning = cr.positivity_warning;
  r.F_e = entanglement_fidelity(cr.outputs, ideal);
  r.F_g = averaged_gate_fidelity(std::clamp(r.F_e, 0.0, 1.0));
  r.IF.coupler = 1.0 - r.F_g;

  // Qubit dephasing: Gaussian decay over the RX exposure.
  const bool dd = scheme == Scheme::kDD;
  auto qubit_if = [&](const QubitParams& q) {
    const double s = charge_sensitivity(q, SensitivityMethod::kAnalytic);
    if (noise_q.A == 0.0) return std::pair{s, 0.0};
    if (std::abs(noise_q.beta - 1.0) < 1e-12) {
      const double v = qubit_infidelity_single(noise_q, s, scheme, segment);
      if (std::sqrt(v / 0.4) >= 0.5) r.qubit_perturbative = false;
      return std::pair{s, v};
    }
    const FrequencyNoise fq =
        frequency_noise(noise_q, {s, SensitivityUnit::kPerEpsM}, NoiseKind::kQubit);
    const McEstimate c = mc_qubit_coherence(fq, dd, dd ? 2.0 * segment : segment,
                                            opt.mc_trajectories, opt.seed, opt.mc_modes,
                                            opt.workers);
    if (c.mean < std::exp(-0.25)) r.qubit_perturbative = false;
    return std::pair{s, 0.4 * (1.0 - c.mean)};
  };
  const auto [sa, ifa] = qubit_if(cfg.qubitA);
  r.qubit_slope = sa;
  r.IF.qubitA = ifa;
  r.IF.qubitB = cfg.symmetric ? ifa : qubit_if(cfg.qubitB).second;
  r.F_total = 1.0 - r.IF.qubitA - r.IF.qubitB - r.IF.coupler;
  return r;
}

}  // namespace ocscz
