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
#include <random>

#include <gtest/gtest.h>

#include "ocscz/error.hpp"
#include "ocscz/ocs_transmon.hpp"
#include "ocscz/units.hpp"

namespace ocscz {
namespace {

TransmonParams at(double ej, double ec, double ng, int n = 12) {
  return TransmonParams{ej, ec, ng, n};
}

TEST(OcsTransmon, ChargeBasisMatrix) {
  const auto h = charge_basis_hamiltonian(at(3, 2, 0.3, 5));
  ASSERT_EQ(h.rows(), 11);
  for (int i = 0; i < 11; ++i) {
    const double n = i - 5;
    EXPECT_NEAR(h(i, i), 8 * (n - 0.3) * (n - 0.3), 1e-13);
    if (i + 1 < 11) EXPECT_EQ(h(i, i + 1), -1.5);
  }
  EXPECT_EQ(h, h.transpose());
  EXPECT_THROW(charge_basis_hamiltonian(at(3, 2, 0.3, 4)), Error);
  EXPECT_THROW(charge_basis_hamiltonian(at(-1, 2, 0.3)), Error);
}

TEST(OcsTransmon, CooperPairBoxLimit) {
  EXPECT_NEAR(transition_frequency(at(0, 3, 0.25)), 2 * 3.0, 1e-12);
}

TEST(OcsTransmon, SymmetriesOfTheSpectrum) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1), e(0.5, 3);
  for (int k = 0; k < 50; ++k) {
    const double ej = e(rng), ec = e(rng), ng = u(rng);
    const double w = transition_frequency(at(ej, ec, ng));
    EXPECT_GT(w, 0);
    EXPECT_NEAR(transition_frequency(at(ej, ec, ng + 1)), w, 1e-12 * w);
    EXPECT_NEAR(transition_frequency(at(ej, ec, -ng)), w, 1e-12 * w);
  }
}

TEST(OcsTransmon, TransmonLimitSuppressesDispersion) {
  const double w0 = transition_frequency(at(50, 1, 0.0, 20));
  const double w5 = transition_frequency(at(50, 1, 0.5, 20));
  EXPECT_LT(std::abs(w5 - w0) / w0, 1e-3);
}

TEST(OcsTransmon, OcsRegimeDispersionIsGHzScale) {
  double lo = 1e9, hi = -1e9;
  for (int i = 0; i <= 50; ++i) {
    const double w = transition_frequency(at(3, 3, 0.01 * i));
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  EXPECT_GT(hi - lo, 1.0);
  EXPECT_LT(hi - lo, 20.0);
}

TEST(OcsTransmon, ZeroPointFluctuation) {
  const auto s = coupler_spectrum(at(3, 2, 0.1));
  EXPECT_DOUBLE_EQ(s.n_zpf, std::pow(3.0 / 64.0, 0.25));
  EXPECT_TRUE(std::is_sorted(s.levels.begin(), s.levels.end()));
  EXPECT_NEAR(s.omega_c, s.levels[1] - s.levels[0], 1e-14);
}

TEST(OcsTransmon, SensitivityVanishesAtSymmetryPoints) {
  for (double ng : {0.0, 0.5})
    EXPECT_NEAR(charge_dispersion_sensitivity(at(3, 3, ng)).value, 0.0, 1e-6);
}

TEST(OcsTransmon, HellmannFeynmanMatchesFiniteDifferenceRandomized) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> e(0.3, 3), ng(0.05, 0.45);
  for (int k = 0; k < 100; ++k) {
    const auto s = charge_dispersion_sensitivity(at(e(rng), e(rng), ng(rng)));
    ASSERT_FALSE(s.near_degenerate);
    EXPECT_NEAR(s.hellmann_feynman, s.finite_difference,
                1e-6 * std::abs(s.hellmann_feynman));
  }
}

TEST(OcsTransmon, CutoffConvergence) {
  EXPECT_LT(cutoff_convergence(at(3, 3, 0.2)), 1e-9);
  EXPECT_LT(cutoff_convergence(at(10, 1, 0.37)), 1e-9);
}

TEST(OcsTransmon, ParityAwareBias) {
  const auto p = at(3, 3, 0);
  const auto b = parity_aware_bias(p);
  const double split = std::abs(transition_frequency(at(3, 3, b.n_g0)) -
                                transition_frequency(at(3, 3, b.n_g0 + 0.5)));
  EXPECT_NEAR(split, 1.0, 1e-6);
  EXPECT_GE(std::abs(b.slope), std::abs(b.partner_slope));
  EXPECT_NEAR(std::abs(b.slope), 138.6, 0.5);
  EXPECT_THROW(parity_aware_bias(at(100, 1, 0, 25)), Error);
}

}  // namespace
}  // namespace ocscz
