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

#ifndef OCSCZ_PROPAGATOR_HPP_
#define OCSCZ_PROPAGATOR_HPP_

#include <array>
#include <vector>

#include "ocscz/hybrid.hpp"
#include "ocscz/pulse_spec.hpp"
#include "ocscz/units.hpp"

namespace ocscz {

struct BlockUnitary {
  std::array<Mat2, 4> blocks;
  std::vector<double> t_grid;
  std::vector<std::array<Mat2, 4>> snapshots;  // empty unless requested
};

// RK4 on the pulse grid refined `refine` times, envelope evaluated at the
// RK4 nodes.
BlockUnitary evolve_unitary(const ConditionalLadder& ladder, const PulseSpec& pulse,
                            bool keep_snapshots = true, int refine = 1);

double unitarity_defect(const Mat2& u);

struct ConditionalPhases {
  std::array<double, 4> theta_ab{};  // arg <g|U_ab|g>
  double theta = 0.0;                // wrapped to (-pi, pi]
  std::array<double, 4> leakage{};   // |<e|U_ab|g>|^2
};

// Throws LeakageError when any block leaves more than `max_leakage` in |e>.
ConditionalPhases conditional_phases(const BlockUnitary& u, double max_leakage = 1e-2);
ConditionalPhases conditional_phases(const std::array<Mat2, 4>& blocks,
                                     double max_leakage = 1e-2);

double wrap_phase(double x);

struct BlochPoint {
  double t, sx, sy, sz;
};

std::vector<BlochPoint> bloch_trajectory(const BlockUnitary& u, int ab);

// Pulse segments separated by instantaneous two-qubit gates (identity on the
// coupler). gates[i] acts after pulses[i].
struct GateSequence {
  std::vector<PulseSpec> pulses;
  std::vector<Mat4> gates;
};

GateSequence single_pulse_sequence(const PulseSpec& pulse);
// sqrt(CZ), X (x) X, sqrt(CZ), X (x) X.
GateSequence dd_sequence(const PulseSpec& sqrt_cz);
Mat4 pauli_xx();

struct SequenceEvolution {
  double dt = 0.0;
  std::vector<double> t;
  std::vector<Mat8> U;  // full propagator at each grid time
  Mat8 final;
};

// All segments must share one step size so the grid stays uniform.
SequenceEvolution evolve_sequence(const ConditionalLadder& ladder,
                                  const GateSequence& seq, int refine = 1);

// Diagonal two-qubit blocks of a block-diagonal 8x8 propagator.
std::array<Mat2, 4> blocks_of(const Mat8& u);
Mat8 embed_qubit_gate(const Mat4& g);

}  // namespace ocscz

#endif  // OCSCZ_PROPAGATOR_HPP_
