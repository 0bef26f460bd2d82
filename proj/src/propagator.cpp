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

#include "ocscz/propagator.hpp"

#include <cmath>
#include <sstream>

#include "ocscz/error.hpp"

namespace ocscz {

namespace {

// H for one block without re-validating the time on every RK4 stage.
inline Mat2 block_h(double det, cdouble om) {
  Mat2 h;
  h << 0.0, 0.5 * om, 0.5 * std::conj(om), det;
  return h;
}

}  // namespace

double unitarity_defect(const Mat2& u) {
  return (u.adjoint() * u - Mat2::Identity()).norm();
}

BlockUnitary evolve_unitary(const ConditionalLadder& ladder, const PulseSpec& pulse,
                            bool keep_snapshots, int refine) {
  require(pulse.steps() >= 1 && pulse.t_g > 0.0, ErrorCode::kParameterDomain,
          "pulse has no samples");
  require(refine >= 1, ErrorCode::kParameterDomain, "refine must be >= 1");
  const int n = pulse.steps() * refine;
  const double h = pulse.t_g / n;
  const double delta = ladder.omega11() - pulse.omega_d;
  std::array<double, 4> det;
  for (int ab = 0; ab < 4; ++ab) det[ab] = ladder.block_detuning(ab, delta);
  const cdouble mi(0.0, -1.0);

  BlockUnitary out;
  for (auto& b : out.blocks) b = Mat2::Identity();
  if (keep_snapshots) {
    out.snapshots.reserve(pulse.steps() + 1);
    out.t_grid.reserve(pulse.steps() + 1);
    out.snapshots.push_back(out.blocks);
    out.t_grid.push_back(0.0);
  }
  for (int k = 0; k < n; ++k) {
    const double t = k * h;
    const cdouble o0 = pulse.envelope(t), o1 = pulse.envelope(t + 0.5 * h),
                  o2 = pulse.envelope(std::min(t + h, pulse.t_g));
    for (int ab = 0; ab < 4; ++ab) {
      const Mat2 h0 = block_h(det[ab], o0), h1 = block_h(det[ab], o1),
                 h2 = block_h(det[ab], o2);
      const Mat2& u = out.blocks[ab];
      const Mat2 k1 = mi * h0 * u;
      const Mat2 k2 = mi * h1 * (u + 0.5 * h * k1);
      const Mat2 k3 = mi * h1 * (u + 0.5 * h * k2);
      const Mat2 k4 = mi * h2 * (u + h * k3);
      out.blocks[ab] = u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    if (keep_snapshots && (k + 1) % refine == 0) {
      out.snapshots.push_back(out.blocks);
      out.t_grid.push_back((k + 1) * h);
    }
  }
  for (int ab = 0; ab < 4; ++ab) {
    const double defect = unitarity_defect(out.blocks[ab]);
    if (!(defect < 1e-8)) {
      std::ostringstream msg;
      msg << "unitarity defect " << defect << " in block " << ab
          << "; increase the sampling rate";
      fail(ErrorCode::kIntegration, msg.str());
    }
  }
  return out;
}

double wrap_phase(double x) {
  double y = std::remainder(x, kTwoPi);
  if (y <= -kPi) y += kTwoPi;
  return y;
}

ConditionalPhases conditional_phases(const std::array<Mat2, 4>& blocks,
                                     double max_leakage) {
  ConditionalPhases p;
  bool leaky = false;
  for (int ab = 0; ab < 4; ++ab) {
    p.leakage[ab] = std::norm(blocks[ab](1, 0));
    p.theta_ab[ab] = std::arg(blocks[ab](0, 0));
    leaky = leaky || p.leakage[ab] > max_leakage;
  }
  if (leaky) {
    std::ostringstream msg;
    msg << "residual coupler excitation";
    for (double x : p.leakage) msg << ' ' << x;
    throw LeakageError(msg.str(), p.leakage);
  }
  p.theta = wrap_phase((p.theta_ab[3] - p.theta_ab[2]) - (p.theta_ab[1] - p.theta_ab[0]));
  return p;
}

ConditionalPhases conditional_phases(const BlockUnitary& u, double max_leakage) {
  return conditional_phases(u.blocks, max_leakage);
}

std::vector<BlochPoint> bloch_trajectory(const BlockUnitary& u, int ab) {
  require(ab >= 0 && ab < 4, ErrorCode::kParameterDomain, "block index must be 0..3");
  std::vector<BlochPoint> out;
  out.reserve(u.snapshots.size());
  for (size_t k = 0; k < u.snapshots.size(); ++k) {
    const cdouble a = u.snapshots[k][ab](0, 0), b = u.snapshots[k][ab](1, 0);
    const cdouble c = std::conj(a) * b;
    out.push_back({u.t_grid[k], 2.0 * c.real(), 2.0 * c.imag(), std::norm(a) - std::norm(b)});
  }
  return out;
}

Mat4 pauli_xx() {
  Mat4 x = Mat4::Zero();
  for (int ab = 0; ab < 4; ++ab) x(3 - ab, ab) = 1.0;
  return x;
}

GateSequence single_pulse_sequence(const PulseSpec& pulse) {
  return GateSequence{{pulse}, {Mat4::Identity()}};
}

GateSequence dd_sequence(const PulseSpec& sqrt_cz) {
  return GateSequence{{sqrt_cz, sqrt_cz}, {pauli_xx(), pauli_xx()}};
}

Mat8 embed_qubit_gate(const Mat4& g) {
  Mat8 out = Mat8::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int c = 0; c < 2; ++c) out(2 * i + c, 2 * j + c) = g(i, j);
  return out;
}

std::array<Mat2, 4> blocks_of(const Mat8& u) {
  std::array<Mat2, 4> b;
  for (int ab = 0; ab < 4; ++ab) b[ab] = u.block<2, 2>(2 * ab, 2 * ab);
  return b;
}

SequenceEvolution evolve_sequence(const ConditionalLadder& ladder,
                                  const GateSequence& seq, int refine) {
  require(!seq.pulses.empty() && seq.pulses.size() == seq.gates.size(),
          ErrorCode::kParameterDomain, "sequence needs one gate slot per pulse");
  SequenceEvolution ev;
  ev.dt = seq.pulses.front().dt() / refine;
  Mat8 before = Mat8::Identity();
  double t0 = 0.0;
  for (size_t s = 0; s < seq.pulses.size(); ++s) {
    const PulseSpec& p = seq.pulses[s];
    if (std::abs(p.dt() / refine - ev.dt) > 1e-12 * ev.dt)
      fail(ErrorCode::kParameterDomain, "sequence segments must share one step size");
    PulseSpec fine = p;
    if (refine > 1) resample(fine, p.steps() * refine);
    const BlockUnitary bu = evolve_unitary(ladder, fine, true, 1);
    const size_t first = s == 0 ? 0 : 1;  // boundary point already stored
    for (size_t k = first; k < bu.snapshots.size(); ++k) {
      Mat8 seg = Mat8::Zero();
      for (int ab = 0; ab < 4; ++ab) seg.block<2, 2>(2 * ab, 2 * ab) = bu.snapshots[k][ab];
      Mat8 u = seg * before;
      if (k + 1 == bu.snapshots.size()) {
        u = embed_qubit_gate(seq.gates[s]) * u;
        before = u;
      }
      ev.t.push_back(t0 + bu.t_grid[k]);
      ev.U.push_back(u);
    }
    t0 += p.t_g;
  }
  ev.final = before;
  return ev;
}

}  // namespace ocscz
