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


#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "ocscz/error.hpp"
#include "ocscz/fidelity.hpp"
#include "ocscz/noise.hpp"

namespace ocscz {
namespace {

Mat4 cz() {
  Mat4 m = Mat4::Identity();
  m(3, 3) = -1;
  return m;
}

Mat8 conjugate(const Mat4& g, const Mat8& rho) {
  const Mat8 u = embed_qubit_gate(g);
  return u * rho * u.adjoint();
}

HybridConfig operating_point() {
  const double U = mev_to_ghz(4.0);
  HybridConfig cfg;
  cfg.qubitA = cfg.qubitB = qubit_operating_point(U, 0.2 * U, 0.013 * U);
  cfg.transmon = TransmonParams{3.0, 3.0, 0.0, 12};
  cfg.n_g0 = parity_aware_bias(cfg.transmon).n_g0;
  return cfg;
}

NoiseSpec scaled(NoiseSpec s, double f) {
  s.A *= f;
  return s;
}

TEST(Fidelity, IdealChannelIsPerfect) {
  const double f = entanglement_fidelity([](const Mat8& r) { return conjugate(cz(), r); }, cz());
  EXPECT_NEAR(f, 1.0, 1e-15);
}

TEST(Fidelity, IdentityAgainstCzByEnumeration) {
  // <psi|CZ|psi> = 1 - 2 p_a p_b with p the |1> population of each input.
  const double p[4] = {0, 1, 0.5, 0.5};
  double want = 0;
  for (double pa : p)
    for (double pb : p) want += std::pow(1 - 2 * pa * pb, 2) / 16;
  const double f = entanglement_fidelity([](const Mat8& r) { return r; }, cz());
  EXPECT_NEAR(f, want, 1e-15);
}

TEST(Fidelity, DepolarizedOutputsGiveQuarter) {
  Mat8 mixed = Mat8::Zero();
  for (int ab = 0; ab < 4; ++ab) mixed(2 * ab, 2 * ab) = 0.25;
  EXPECT_NEAR(entanglement_fidelity(std::vector<Mat8>(16, mixed), cz()), 0.25, 1e-15);
  EXPECT_THROW(entanglement_fidelity(std::vector<Mat8>(15, mixed), cz()), Error);
}

TEST(Fidelity, AveragedGateFidelity) {
  EXPECT_DOUBLE_EQ(averaged_gate_fidelity(1.0), 1.0);
  EXPECT_DOUBLE_EQ(averaged_gate_fidelity(0.25), 0.4);
  EXPECT_NEAR(averaged_gate_fidelity(0.9), 0.92, 1e-15);
  EXPECT_THROW(averaged_gate_fidelity(1.2), Error);
  EXPECT_THROW(averaged_gate_fidelity(-0.1), Error);
}

TEST(Fidelity, GaussianDecay) {
  EXPECT_EQ(gaussian_decay_fidelity(0, 5).value, 1.0);
  EXPECT_NEAR(gaussian_decay_fidelity(0.01, 10).value, 0.992, 1e-15);
  EXPECT_TRUE(gaussian_decay_fidelity(0.01, 10).perturbative);
  EXPECT_FALSE(gaussian_decay_fidelity(0.06, 10).perturbative);
}

TEST(Fidelity, GaussianDecayMatchesMonteCarloDephasing) {
  const double t = 10;
  const double unit = qubit_dephasing_rate(1.0, false, t) * t;
  FrequencyNoise n;
  n.a_omega = 0.01 / (unit * unit);  // Gamma t = 0.1
  const double gamma = qubit_dephasing_rate(n.a_omega, false, t);
  const double lambda = mc_qubit_coherence(n, false, t, 4000, 5).mean;
  // Independent dephasing of both qubits with coherence lambda.
  auto channel = [lambda](const Mat8& r) {
    Mat8 out = r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const int flips = ((i ^ j) & 1) + (((i ^ j) >> 1) & 1);
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) out(2 * i + c, 2 * j + d) *= std::pow(lambda, flips);
      }
    return out;
  };
  // Product-input average: each qubit contributes (3 + lambda)/4.
  const double fe = entanglement_fidelity(channel, Mat4::Identity());
  EXPECT_NEAR(fe, std::pow((3 + lambda) / 4, 2), 1e-14);
  // The closed form is the process-fidelity convention, F_e = ((1+lambda)/2)^2.
  const double fg = averaged_gate_fidelity(std::pow((1 + lambda) / 2, 2));
  const double want = gaussian_decay_fidelity(gamma, t).value;
  EXPECT_NEAR(1 - fg, 1 - want, 0.1 * (1 - want));
}

TEST(Fidelity, CorrectedIdealAbsorbsLocalPhases) {
  ConditionalPhases ph;
  ph.theta_ab = {0.1, 0.7, -0.4, 0.0};
  const Mat4 m = corrected_ideal(ph, kPi);
  std::array<Mat2, 4> blocks;
  for (int ab = 0; ab < 4; ++ab) blocks[ab] = Mat2::Identity() * m(ab, ab);
  EXPECT_NEAR(std::abs(conditional_phases(blocks).theta), kPi, 1e-14);
  EXPECT_NEAR(std::arg(m(1, 1)), 0.7, 1e-15);
}

TEST(Fidelity, NoiselessGatesAreCoherent) {
  const auto cfg = operating_point();
  NoiseSpec zq = qubit_noise_preset(), zc = coupler_noise_preset();
  zq.A = zc.A = 0;
  const auto off = total_cz_fidelity(cfg, zq, zc, Scheme::kOffResonant);
  EXPECT_GT(off.F_e_coherent, 0.999);
  EXPECT_GT(off.F_total, 0.999);
  EXPECT_NEAR(off.F_g, (4 * off.F_e + 1) / 5, 1e-12);
  EXPECT_NEAR(std::abs(wrap_phase(off.theta - kPi)), 0, 1e-3);
  // The first-order Magnus floor leaves ~2.3e-3 coupler excitation in the
  // detuned blocks of the DD sequence (see the notes in the README).
  const auto dd = total_cz_fidelity(cfg, zq, zc, Scheme::kDD);
  EXPECT_GT(dd.F_g, 0.999);
  EXPECT_GT(dd.F_e_coherent, 0.998);
  EXPECT_NEAR(std::abs(wrap_phase(dd.theta - kPi)), 0, 2e-3);
}

TEST(Fidelity, HeadlineAndDecomposition) {
  const auto cfg = operating_point();
  const auto q = qubit_noise_preset(), c = coupler_noise_preset();
  const auto r = total_cz_fidelity(cfg, q, c, Scheme::kOffResonant);
  EXPECT_NEAR(r.F_total, 0.91, 0.02);
  EXPECT_EQ(r.IF.qubitA, r.IF.qubitB);
  EXPECT_FALSE(r.positivity_warning);

  // Small noise: toggled sources add up.
  const double f = 0.05;
  NoiseSpec zq = q, zc = c;
  zq.A = zc.A = 0;
  const auto both = total_cz_fidelity(cfg, scaled(q, f), scaled(c, f), Scheme::kOffResonant);
  const auto only_q = total_cz_fidelity(cfg, scaled(q, f), zc, Scheme::kOffResonant);
  const auto only_c = total_cz_fidelity(cfg, zq, scaled(c, f), Scheme::kOffResonant);
  const double sum = (1 - only_q.F_total) + (1 - only_c.F_total);
  EXPECT_NEAR(1 - both.F_total, sum, 0.1 * sum);
}

TEST(Fidelity, ReportSerialization) {
  GateReport r;
  r.F_total = 0.5;
  r.leakage = {1e-5, 2e-5, 2e-5, 0};
  std::ostringstream os;
  write_key_value(os, r);
  EXPECT_NE(os.str().find("F_total = 0.5\n"), std::string::npos);
  EXPECT_NE(os.str().find("leakage_01 = 2e-05\n"), std::string::npos);
  auto count = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
  EXPECT_EQ(count(csv_header()), count(csv_row(r)));
}

}  // namespace
}  // namespace ocscz
