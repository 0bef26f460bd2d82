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

#include "ocscz/rx_qubit.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "ocscz/error.hpp"

namespace ocscz {

double delta_fh(const QubitParams& p) { return p.U - 2.0 * p.U_C - p.eps_m; }

bool rx_regime_valid(const QubitParams& p) {
  return std::abs(delta_fh(p)) < p.U;
}

void validate(const QubitParams& p) {
  std::ostringstream msg;
  if (!(p.U > 0.0)) msg << "U must be positive (got " << p.U << ")";
  else if (!(p.t_hop >= 0.0)) msg << "t_hop must be >= 0 (got " << p.t_hop << ")";
  else if (p.eps != 0.0) msg << "symmetric detuning eps must be 0 (got " << p.eps << ")";
  else if (!std::isfinite(p.U_C) || !std::isfinite(p.eps_m))
    msg << "U_C and eps_m must be finite";
  else return;
  fail(ErrorCode::kParameterDomain, msg.str());
}

Eigen::Matrix4d fh_subspace_hamiltonian(const QubitParams& p) {
  validate(p);
  const double d = delta_fh(p);
  const double a = std::sqrt(6.0) / 2.0 * p.t_hop;
  const double b = std::sqrt(2.0) / 2.0 * p.t_hop;
  Eigen::Matrix4d h;
  h << 0, 0, -a, a,
       0, 0, -b, -b,
       -a, -b, d, 0,
       a, -b, 0, d;
  return h;
}

RxSpectrum rx_eigensystem(const QubitParams& p) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(fh_subspace_hamiltonian(p));
  RxSpectrum out;
  for (int k = 0; k < 4; ++k) out.energies[k] = es.eigenvalues()(k);
  out.states = es.eigenvectors();
  return out;
}

double qubit_frequency(const QubitParams& p) {
  // Closed form avoids cancellation when t << Delta; the eigensolver agrees.
  validate(p);
  const double d = delta_fh(p), t2 = p.t_hop * p.t_hop;
  return 0.5 * (std::sqrt(d * d + 12.0 * t2) - std::sqrt(d * d + 4.0 * t2));
}

std::array<double, 3> dot_occupations(const QubitParams& p, int state) {
  require(state >= 0 && state < 4, ErrorCode::kParameterDomain,
          "state index must be 0..3");
  const auto spec = rx_eigensystem(p);
  const auto v = spec.states.col(state);
  const double w111 = v(0) * v(0) + v(1) * v(1);
  const double wl = v(2) * v(2), wr = v(3) * v(3);
  return {w111 + 2.0 * wl + wr, w111, w111 + wl + 2.0 * wr};
}

double middle_dot_occupation(const QubitParams& p, int state) {
  require(state == 0 || state == 1, ErrorCode::kParameterDomain,
          "qubit state must be 0 or 1");
  return dot_occupations(p, state)[1];
}

namespace {

double full8_gap(QubitParams p) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 8, 8>> es(
      fh_full_hamiltonian(p), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(1) - es.eigenvalues()(0);
}

}  // namespace

double charge_sensitivity(const QubitParams& p, SensitivityMethod method) {
  validate(p);
  switch (method) {
    case SensitivityMethod::kAnalytic: {
      const double d = delta_fh(p), t2 = p.t_hop * p.t_hop;
      if (t2 == 0.0) return 0.0;
      return 0.5 * (d / std::sqrt(d * d + 4.0 * t2) - d / std::sqrt(d * d + 12.0 * t2));
    }
    case SensitivityMethod::kOccupation:
      return middle_dot_occupation(p, 1) - middle_dot_occupation(p, 0);
    case SensitivityMethod::kFull8: {
      const double h = 1e-6 * p.U;
      QubitParams lo = p, hi = p;
      lo.eps_m -= h;
      hi.eps_m += h;
      if (!(hi.eps_m > p.eps_m && lo.eps_m < p.eps_m))
        fail(ErrorCode::kNumerical, "full8 finite-difference step underflows");
      return (full8_gap(hi) - full8_gap(lo)) / (hi.eps_m - lo.eps_m);
    }
  }
  return 0.0;
}

double exchange_energy(const QubitParams& p) {
  validate(p);
  if (std::abs(p.eps_m) >= p.U)
    fail(ErrorCode::kParameterDomain,
         "exchange energy diverges for |eps_m| >= U");
  return 2.0 * p.t_hop * p.t_hop * p.U / (p.U * p.U - p.eps_m * p.eps_m);
}

namespace {

// Spin-orbital index 2*site + spin (0 up, 1 down). A Fock state is the
// bitmask of occupied orbitals, operators applied in ascending order.
constexpr int orb(int site, int spin) { return 2 * site + spin; }

// c_p^dag c_q |m>; returns sign (0 if annihilated) and updates m.
int hop(uint32_t& m, int p, int q) {
  if (!((m >> q) & 1u)) return 0;
  int sign = (std::popcount(m & ((1u << q) - 1u)) & 1) ? -1 : 1;
  uint32_t m2 = m & ~(1u << q);
  if ((m2 >> p) & 1u) return 0;
  sign *= (std::popcount(m2 & ((1u << p) - 1u)) & 1) ? -1 : 1;
  m = m2 | (1u << p);
  return sign;
}

constexpr uint32_t ket(std::initializer_list<std::pair<int, int>> occ) {
  uint32_t m = 0;
  for (auto [s, sp] : occ) m |= 1u << orb(s, sp);
  return m;
}

}  // namespace

Eigen::Matrix<double, 8, 8> fh_full_hamiltonian(const QubitParams& p) {
  validate(p);
  // Sz = 1/2 sector: two up, one down -> 9 Fock states.
  std::vector<uint32_t> fock;
  for (uint32_t m = 0; m < 64; ++m) {
    int up = 0, dn = 0;
    for (int s = 0; s < 3; ++s) {
      up += (m >> orb(s, 0)) & 1u;
      dn += (m >> orb(s, 1)) & 1u;
    }
    if (up == 2 && dn == 1) fock.push_back(m);
  }
  auto index_of = [&](uint32_t m) {
    for (size_t i = 0; i < fock.size(); ++i)
      if (fock[i] == m) return static_cast<int>(i);
    return -1;
  };
  const std::array<double, 3> v = {0.0, p.eps_m, 0.0};
  Eigen::Matrix<double, 9, 9> h9 = Eigen::Matrix<double, 9, 9>::Zero();
  for (size_t i = 0; i < fock.size(); ++i) {
    const uint32_t m = fock[i];
    std::array<int, 3> n{};
    double e = 0.0;
    for (int s = 0; s < 3; ++s) {
      const int nu = (m >> orb(s, 0)) & 1u, nd = (m >> orb(s, 1)) & 1u;
      n[s] = nu + nd;
      e += v[s] * n[s] + p.U * nu * nd;
    }
    e += p.U_C * (n[0] * n[1] + n[1] * n[2]);
    h9(i, i) = e;
    for (auto [a, b] : {std::pair{0, 1}, {1, 0}, {1, 2}, {2, 1}}) {
      for (int sp = 0; sp < 2; ++sp) {
        uint32_t m2 = m;
        const int sign = hop(m2, orb(a, sp), orb(b, sp));
        if (sign != 0) h9(index_of(m2), i) += -p.t_hop * sign;
      }
    }
  }
  auto unit = [&](uint32_t m) {
    Eigen::Matrix<double, 9, 1> x = Eigen::Matrix<double, 9, 1>::Zero();
    x(index_of(m)) = 1.0;
    return x;
  };
  const auto uud = unit(ket({{0, 0}, {1, 0}, {2, 1}}));
  const auto udu = unit(ket({{0, 0}, {1, 1}, {2, 0}}));
  const auto duu = unit(ket({{0, 1}, {1, 0}, {2, 0}}));
  Eigen::Matrix<double, 9, 8> basis;
  basis.col(0) = (2.0 * udu - uud - duu) / std::sqrt(6.0);
  basis.col(1) = (uud - duu) / std::sqrt(2.0);
  basis.col(2) = unit(ket({{0, 0}, {0, 1}, {2, 0}}));
  basis.col(3) = unit(ket({{0, 0}, {2, 0}, {2, 1}}));
  basis.col(4) = unit(ket({{0, 0}, {0, 1}, {1, 0}}));
  basis.col(5) = unit(ket({{1, 0}, {2, 0}, {2, 1}}));
  basis.col(6) = unit(ket({{0, 0}, {1, 0}, {1, 1}}));
  basis.col(7) = unit(ket({{1, 0}, {1, 1}, {2, 0}}));
  Eigen::Matrix<double, 8, 8> h8 = basis.transpose() * h9 * basis;
  const double e111 = h8(0, 0);
  h8.diagonal().array() -= e111;
  return h8;
}

double optimal_detuning_ratio() {
  static const double ratio = [] {
    auto neg = [](double u) {
      return -0.5 * (u / std::sqrt(u * u + 4.0) - u / std::sqrt(u * u + 12.0));
    };
    return boost::math::tools::brent_find_minima(
               neg, 0.05, 50.0, std::numeric_limits<double>::digits / 2 + 4)
        .first;
  }();
  return ratio;
}

double max_charge_sensitivity() {
  const double u = optimal_detuning_ratio();
  return 0.5 * (u / std::sqrt(u * u + 4.0) - u / std::sqrt(u * u + 12.0));
}

QubitParams qubit_operating_point(double U, double U_C, double t_hop) {
  QubitParams p{U, U_C, 0.0, 0.0, t_hop};
  p.eps_m = U - 2.0 * U_C - optimal_detuning_ratio() * t_hop;
  validate(p);
  return p;
}

}  // namespace ocscz
