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

#include "ocscz/capnet.hpp"

#include <algorithm>
#include <cmath>

#include "ocscz/error.hpp"
#include "ocscz/units.hpp"

namespace ocscz {

namespace {

void check(const CapNetwork& n) {
  for (double c : {n.C1, n.C2, n.C3, n.Cchi1, n.Cchi2, n.Cchi3, n.Cm12, n.Cm23,
                   n.Cc, n.Cg1, n.Cg2, n.Cg3, n.CgC}) {
    if (!(c >= 0.0) || !std::isfinite(c))
      fail(ErrorCode::kNetwork, "capacitances must be finite and non-negative");
  }
}

}  // namespace

Eigen::Matrix4d build_capacitance_matrix(const CapNetwork& n) {
  check(n);
  Eigen::Matrix4d c = Eigen::Matrix4d::Zero();
  c(0, 0) = n.C1 + n.Cg1 + n.Cchi1 + n.Cm12;
  c(1, 1) = n.C2 + n.Cg2 + n.Cchi2 + n.Cm12 + n.Cm23;
  c(2, 2) = n.C3 + n.Cg3 + n.Cchi3 + n.Cm23;
  c(3, 3) = n.Cc + n.CgC + n.Cchi1 + n.Cchi2 + n.Cchi3;
  c(0, 1) = c(1, 0) = -n.Cm12;
  c(1, 2) = c(2, 1) = -n.Cm23;
  c(0, 3) = c(3, 0) = -n.Cchi1;
  c(1, 3) = c(3, 1) = -n.Cchi2;
  c(2, 3) = c(3, 2) = -n.Cchi3;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(c, Eigen::EigenvaluesOnly);
  if (!(es.eigenvalues()(0) > 0.0))
    fail(ErrorCode::kNetwork, "capacitance matrix is not positive definite");
  return c;
}

std::array<double, 3> interaction_coefficients(const CapNetwork& n) {
  const Eigen::Matrix4d c = build_capacitance_matrix(n);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(c, Eigen::EigenvaluesOnly);
  const double cond = es.eigenvalues()(3) / es.eigenvalues()(0);
  if (!(cond < 1e12))
    fail(ErrorCode::kNetwork, "capacitance matrix is numerically singular");
  const Eigen::Vector4d col = c.partialPivLu().solve(Eigen::Vector4d::Unit(3));
  return {col(0), col(1), col(2)};
}

std::array<double, 3> first_order_coefficients(const CapNetwork& n) {
  check(n);
  require(n.C1 > 0 && n.C2 > 0 && n.C3 > 0 && n.Cc > 0, ErrorCode::kNetwork,
          "first-order coefficients need non-zero ground capacitances");
  return {n.Cchi1 / (n.C1 * n.Cc), n.Cchi2 / (n.C2 * n.Cc), n.Cchi3 / (n.C3 * n.Cc)};
}

LeverArms lever_arms(const CapNetwork& n, double tol) {
  check(n);
  require(n.C1 > 0 && n.C2 > 0 && n.C3 > 0, ErrorCode::kNetwork,
          "lever arms need non-zero dot capacitances");
  LeverArms a;
  a.alpha1 = n.Cchi1 / n.C1;
  a.alpha2 = n.Cchi2 / n.C2;
  a.alpha3 = n.Cchi3 / n.C3;
  a.alpha = a.alpha2 - a.alpha1;
  const double scale = std::max({std::abs(a.alpha1), std::abs(a.alpha3), 1e-300});
  a.transverse_weight = 0.5 * std::abs(a.alpha1 - a.alpha3);
  a.longitudinal = std::abs(a.alpha1 - a.alpha3) <= tol * scale;
  return a;
}

double coupler_charging_energy(const CapNetwork& n) {
  const double c = build_capacitance_matrix(n)(3, 3);
  return kElementaryCharge * kElementaryCharge / (2.0 * c) / kPlanck * 1e-9;
}

}  // namespace ocscz
