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

#include "ocscz/hybrid.hpp"

#include <cmath>
#include <sstream>

#include "ocscz/error.hpp"

namespace ocscz {

namespace {

bool same(const QubitParams& a, const QubitParams& b) {
  return a.U == b.U && a.U_C == b.U_C && a.eps_m == b.eps_m && a.eps == b.eps &&
         a.t_hop == b.t_hop;
}

}  // namespace

void validate(const HybridConfig& cfg) {
  validate(cfg.qubitA);
  validate(cfg.qubitB);
  validate(cfg.transmon);
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    std::ostringstream msg;
    msg << "lever arm alpha must lie in (0, 1) (got " << cfg.alpha << ")";
    fail(ErrorCode::kParameterDomain, msg.str());
  }
  require(std::isfinite(cfg.n_g0), ErrorCode::kParameterDomain, "n_g0 must be finite");
  require(!cfg.symmetric || same(cfg.qubitA, cfg.qubitB), ErrorCode::kParameterDomain,
          "symmetric gate mode requires identical qubits");
}

double coupling_strength(const HybridConfig& cfg, int qubit) {
  require(qubit == 0 || qubit == 1, ErrorCode::kParameterDomain, "qubit must be 0 or 1");
  validate(cfg);
  const QubitParams& q = qubit == 0 ? cfg.qubitA : cfg.qubitB;
  const double dn = middle_dot_occupation(q, 0) - middle_dot_occupation(q, 1);
  return 2.0 * cfg.transmon.E_C * zero_point_charge(cfg.transmon) * cfg.alpha * dn;
}

double gate_charge_shift(const HybridConfig& cfg) {
  const double g = coupling_strength(cfg, 0);
  return std::abs(g / (4.0 * cfg.transmon.E_C * zero_point_charge(cfg.transmon)));
}

std::array<double, 4> effective_gate_charges(const HybridConfig& cfg) {
  const double ga = coupling_strength(cfg, 0), gb = coupling_strength(cfg, 1);
  const double denom = 8.0 * cfg.transmon.E_C * zero_point_charge(cfg.transmon);
  std::array<double, 4> n{};
  for (int ab = 0; ab < 4; ++ab) {
    const double sa = (ab >> 1) ? -1.0 : 1.0, sb = (ab & 1) ? -1.0 : 1.0;
    n[ab] = cfg.n_g0 - (ga * sa + gb * sb) / denom;
  }
  return n;
}

ConditionalLadder conditional_ladder(const HybridConfig& cfg) {
  validate(cfg);
  ConditionalLadder l;
  const auto n = effective_gate_charges(cfg);
  TransmonParams tp = cfg.transmon;
  for (int ab = 0; ab < 4; ++ab) {
    tp.n_g = n[ab];
    l.omega_ab[ab] = transition_frequency(tp);
  }
  l.delta_omega_c = kTwoPi * std::abs(l.omega_ab[3] - l.omega_ab[2]);
  l.sign = l.omega_ab[3] <= l.omega_ab[2] ? 1 : -1;
  tp.n_g = cfg.n_g0;
  l.delta_omega_linear =
      std::abs(charge_dispersion_sensitivity(tp).value) * gate_charge_shift(cfg);
  if (l.delta_omega_c > 0.0) {
    const double d1 = l.omega_ab[0] - l.omega_ab[1], d2 = l.omega_ab[1] - l.omega_ab[3];
    l.linearity_residual = kTwoPi * std::abs(d1 - d2) / l.delta_omega_c;
  }
  l.linear_ok = l.linearity_residual < 0.05;
  return l;
}

ConditionalLadder linear_ladder(double omega11_ghz, double delta_omega_c, int sign) {
  require(sign == 1 || sign == -1, ErrorCode::kParameterDomain, "sign must be +-1");
  ConditionalLadder l;
  const double step = sign * delta_omega_c / kTwoPi;
  for (int ab = 0; ab < 4; ++ab) l.omega_ab[ab] = omega11_ghz + kLadderIndex[ab] * step;
  l.delta_omega_c = delta_omega_c;
  l.delta_omega_linear = delta_omega_c;
  l.sign = sign;
  return l;
}

double ConditionalLadder::block_detuning(int ab, double delta) const {
  return delta + sign * kLadderIndex[ab] * delta_omega_c;
}

Mat2 block_hamiltonian(const ConditionalLadder& ladder, const PulseSpec& pulse,
                       int ab, double t) {
  const double slack = 1e-12 * std::max(1.0, pulse.t_g);
  if (!(t >= -slack && t <= pulse.t_g + slack)) {
    std::ostringstream msg;
    msg << "time " << t << " ns outside pulse support [0, " << pulse.t_g << "]";
    fail(ErrorCode::kParameterDomain, msg.str());
  }
  const cdouble om = pulse.envelope(t);
  const double delta = ladder.omega11() - pulse.omega_d;
  Mat2 h;
  h << 0.0, 0.5 * om, 0.5 * std::conj(om), ladder.block_detuning(ab, delta);
  return h;
}

Mat8 rotating_frame_hamiltonian(const ConditionalLadder& ladder,
                                const PulseSpec& pulse, double t) {
  Mat8 h = Mat8::Zero();
  for (int ab = 0; ab < 4; ++ab)
    h.block<2, 2>(2 * ab, 2 * ab) = block_hamiltonian(ladder, pulse, ab, t);
  return h;
}

}  // namespace ocscz
