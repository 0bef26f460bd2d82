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

#include "ocscz/capnet.hpp"
#include "ocscz/error.hpp"

namespace ocscz {
namespace {

constexpr double kF = 1e-15;  // femtofarad

// Coupling caps of order 1 fF, ground caps scaled by `ratio`.
CapNetwork network(double ratio, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.5, 1.5);
  CapNetwork n;
  n.Cchi1 = u(rng) * kF;
  n.Cchi2 = u(rng) * kF;
  n.Cchi3 = u(rng) * kF;
  n.Cm12 = u(rng) * kF;
  n.Cm23 = u(rng) * kF;
  n.C1 = ratio * u(rng) * kF;
  n.C2 = ratio * u(rng) * kF;
  n.C3 = ratio * u(rng) * kF;
  n.Cc = ratio * u(rng) * kF;
  return n;
}

double worst_relative_error(const CapNetwork& n) {
  const auto ex = interaction_coefficients(n);
  const auto fo = first_order_coefficients(n);
  double w = 0;
  for (int i = 0; i < 3; ++i) w = std::max(w, std::abs(ex[i] - fo[i]) / std::abs(fo[i]));
  return w;
}

TEST(CapNet, MatrixStructure) {
  std::mt19937_64 rng(1);
  const auto n = network(10, rng);
  const auto c = build_capacitance_matrix(n);
  EXPECT_EQ(c, c.transpose());
  EXPECT_DOUBLE_EQ(c(0, 1), -n.Cm12);
  EXPECT_DOUBLE_EQ(c(1, 3), -n.Cchi2);
  EXPECT_DOUBLE_EQ(c(3, 3), n.Cc + n.Cchi1 + n.Cchi2 + n.Cchi3);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(c);
  EXPECT_GT(es.eigenvalues()(0), 0);

  CapNetwork d{1 * kF, 2 * kF, 3 * kF};
  d.Cc = 4 * kF;
  const auto cd = build_capacitance_matrix(d);
  EXPECT_TRUE(cd.isDiagonal());
}

TEST(CapNet, RejectsBadNetworks) {
  CapNetwork n;
  EXPECT_THROW(build_capacitance_matrix(n), Error);
  n.C1 = -1;
  EXPECT_THROW(build_capacitance_matrix(n), Error);
}

TEST(CapNet, NoCouplingNoInteraction) {
  std::mt19937_64 rng(2);
  auto n = network(10, rng);
  n.Cchi1 = n.Cchi2 = n.Cchi3 = 0;
  for (double c : interaction_coefficients(n)) EXPECT_EQ(c, 0.0);
}

TEST(CapNet, GroundDominatedMatchesFirstOrder) {
  // Every ground capacitance at least 100x the largest coupling capacitance.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < 20; ++k) {
    auto n = network(1, rng);
    for (double* c : {&n.C1, &n.C2, &n.C3, &n.Cc}) *c = 150 * (1 + u(rng)) * kF;
    EXPECT_LT(worst_relative_error(n), 0.05);
  }
}

TEST(CapNet, ExactDiffersWhenMutualCapsAreLarge) {
  std::mt19937_64 rng(4);
  auto n = network(1, rng);
  n.Cm12 = n.C1;
  EXPECT_GT(worst_relative_error(n), 0.2);
}

TEST(CapNet, ConvergesMonotonicallyWithDominanceRandomized) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto base = network(1, rng);
    double prev = std::numeric_limits<double>::infinity();
    for (double r : {10.0, 100.0, 1000.0, 10000.0}) {
      auto n = base;
      n.C1 *= r;
      n.C2 *= r;
      n.C3 *= r;
      n.Cc *= r;
      const double e = worst_relative_error(n);
      EXPECT_LT(e, prev);
      if (std::isfinite(prev)) EXPECT_GT(e, 0.05 * prev);  // first-order: error ~ 1/ratio
      prev = e;
    }
    EXPECT_LT(prev, 1e-2);
  }
}

TEST(CapNet, LeverArms) {
  CapNetwork n{1 * kF, 1 * kF, 1 * kF};
  n.Cc = 10 * kF;
  n.Cchi2 = 0.2 * kF;
  auto a = lever_arms(n);
  EXPECT_DOUBLE_EQ(a.alpha, 0.2);
  EXPECT_TRUE(a.longitudinal);
  n.Cchi1 = n.Cchi3 = 0.05 * kF;
  a = lever_arms(n);
  EXPECT_TRUE(a.longitudinal);
  EXPECT_NEAR(a.alpha, 0.15, 1e-15);
  n.Cchi3 = 0.1 * kF;
  a = lever_arms(n);
  EXPECT_FALSE(a.longitudinal);
  EXPECT_NEAR(a.transverse_weight, 0.025, 1e-15);
}

TEST(CapNet, MirrorSymmetricEnergyInvariant) {
  CapNetwork n{2 * kF, 3 * kF, 2 * kF, 0.1 * kF, 0.3 * kF, 0.1 * kF, 0.4 * kF, 0.4 * kF, 5 * kF};
  const Eigen::Matrix4d inv = build_capacitance_matrix(n).inverse();
  Eigen::Matrix4d perm = Eigen::Matrix4d::Zero();
  perm(0, 2) = perm(2, 0) = perm(1, 1) = perm(3, 3) = 1;
  const Eigen::Vector4d q(1.0, -0.4, 0.3, 0.7);
  const Eigen::Vector4d qp = perm * q;
  EXPECT_NEAR(q.dot(inv * q), qp.dot(inv * qp), 1e-12 * q.dot(inv * q));
}

TEST(CapNet, ChargingEnergy) {
  CapNetwork n{1 * kF, 1 * kF, 1 * kF};
  n.Cc = 6.457e-15;  // e^2/2C = 3 GHz h
  EXPECT_NEAR(coupler_charging_energy(n), 3.0, 0.01);
}

}  // namespace
}  // namespace ocscz
