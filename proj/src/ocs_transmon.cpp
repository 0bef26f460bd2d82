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

#include "ocscz/ocs_transmon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ocscz/error.hpp"
#include "ocscz/units.hpp"

namespace ocscz {

void validate(const TransmonParams& p) {
  std::ostringstream msg;
  if (!(p.E_J >= 0.0)) msg << "E_J must be non-negative (got " << p.E_J << ")";
  else if (!(p.E_C > 0.0)) msg << "E_C must be positive (got " << p.E_C << ")";
  else if (!std::isfinite(p.n_g)) msg << "n_g must be finite";
  else if (p.cutoff < 5) {
    fail(ErrorCode::kConvergence,
         "charge cutoff " + std::to_string(p.cutoff) + " < 5 cannot converge");
  } else {
    return;
  }
  fail(ErrorCode::kParameterDomain, msg.str());
}

Eigen::MatrixXd charge_basis_hamiltonian(const TransmonParams& p) {
  validate(p);
  const int n = 2 * p.cutoff + 1;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double q = (i - p.cutoff) - p.n_g;
    h(i, i) = 4.0 * p.E_C * q * q;
    if (i + 1 < n) h(i, i + 1) = h(i + 1, i) = -0.5 * p.E_J;
  }
  return h;
}

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve(const TransmonParams& p,
                                                     bool vectors) {
  validate(p);
  const int n = 2 * p.cutoff + 1;
  Eigen::VectorXd diag(n), sub = Eigen::VectorXd::Constant(n - 1, -0.5 * p.E_J);
  for (int i = 0; i < n; ++i) {
    const double q = (i - p.cutoff) - p.n_g;
    diag(i) = 4.0 * p.E_C * q * q;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub,
                            vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  return es;
}

}  // namespace

double zero_point_charge(const TransmonParams& p) {
  validate(p);
  return std::pow(p.E_J / (32.0 * p.E_C), 0.25);
}

CouplerSpectrum coupler_spectrum(const TransmonParams& p, int levels) {
  const auto es = solve(p, false);
  CouplerSpectrum out;
  const int k = std::min<int>(levels, es.eigenvalues().size());
  for (int i = 0; i < k; ++i) out.levels.push_back(es.eigenvalues()(i));
  out.omega_c = es.eigenvalues()(1) - es.eigenvalues()(0);
  out.n_zpf = zero_point_charge(p);
  return out;
}

double transition_frequency(const TransmonParams& p) {
  const auto es = solve(p, false);
  return es.eigenvalues()(1) - es.eigenvalues()(0);
}

ChargeSensitivity charge_dispersion_sensitivity(const TransmonParams& p) {
  ChargeSensitivity out;
  const double h = 1e-5;
  TransmonParams lo = p, hi = p;
  lo.n_g -= h;
  hi.n_g += h;
  out.finite_difference =
      kTwoPi * (transition_frequency(hi) - transition_frequency(lo)) / (2.0 * h);

  const auto es = solve(p, true);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(p.E_J, p.E_C);
  out.near_degenerate = (ev(1) - ev(0)) < 1e-9 * scale || (ev(2) - ev(1)) < 1e-9 * scale;
  if (!out.near_degenerate) {
    auto dE = [&](int k) {
      double acc = 0.0;
      for (int i = 0; i < ev.size(); ++i) {
        const double c = es.eigenvectors()(i, k);
        acc += c * c * 8.0 * p.E_C * (p.n_g - (i - p.cutoff));
      }
      return acc;
    };
    out.hellmann_feynman = kTwoPi * (dE(1) - dE(0));
    out.value = out.hellmann_feynman;
  } else {
    out.value = out.finite_difference;
  }
  return out;
}

namespace {

double slope_at(TransmonParams p, double ng) {
  p.n_g = ng;
  return charge_dispersion_sensitivity(p).value;
}

double split_at(TransmonParams p, double ng) {
  p.n_g = ng;
  const double a = transition_frequency(p);
  p.n_g = ng + 0.5;
  return std::abs(a - transition_frequency(p));
}

double bisect(const TransmonParams& p, double target, double lo, double hi) {
  double flo = split_at(p, lo) - target;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = split_at(p, mid) - target;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

BiasPoint parity_aware_bias(const TransmonParams& p, double target_split_ghz) {
  validate(p);
  require(target_split_ghz > 0.0, ErrorCode::kParameterDomain,
          "parity splitting target must be positive");
  // The splitting is largest at n_g = 0 and vanishes at 1/4; the two roots
  // r and 1/2 - r are mirror images with identical slopes.
  const double amplitude = split_at(p, 0.0);
  if (amplitude <= target_split_ghz) {
    std::ostringstream msg;
    msg << "parity splitting " << amplitude << " GHz never reaches "
        << target_split_ghz << " GHz for E_J=" << p.E_J << ", E_C=" << p.E_C;
    fail(ErrorCode::kInfeasibleBias, msg.str());
  }
  const double root = bisect(p, target_split_ghz, 0.0, 0.25);
  BiasPoint b;
  const double s0 = slope_at(p, root), s1 = slope_at(p, root + 0.5);
  if (std::abs(s1) > std::abs(s0)) {
    b.n_g0 = root + 0.5;
    b.partner = root + 1.0;
    b.slope = s1;
    b.partner_slope = s0;
  } else {
    b.n_g0 = root;
    b.partner = root + 0.5;
    b.slope = s0;
    b.partner_slope = s1;
  }
  return b;
}

double cutoff_convergence(const TransmonParams& p) {
  TransmonParams q = p;
  q.cutoff += 5;
  const double w0 = transition_frequency(p), w1 = transition_frequency(q);
  const double s0 = charge_dispersion_sensitivity(p).value;
  const double s1 = charge_dispersion_sensitivity(q).value;
  double rel = std::abs(w1 - w0) / std::abs(w0);
  const double sref = std::max(std::abs(s0), 1e-12);
  rel = std::max(rel, std::abs(s1 - s0) / sref * (std::abs(s0) > 1e-9 ? 1.0 : 0.0));
  return rel;
}

}  // namespace ocscz
