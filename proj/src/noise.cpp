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

#include "ocscz/noise.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gsl/gsl_sf_expint.h>

#include "ocscz/error.hpp"
#include "ocscz/rx_qubit.hpp"
#include "parallel.hpp"

namespace ocscz {

const char* scheme_name(Scheme s) { return s == Scheme::kDD ? "dd" : "offres"; }

void validate(const NoiseSpec& s) {
  std::ostringstream msg;
  if (!(s.A >= 0.0) || !std::isfinite(s.A)) msg << "noise amplitude must be >= 0";
  else if (!(s.beta >= 0.6 && s.beta <= 1.4)) msg << "beta " << s.beta << " outside [0.6, 1.4]";
  else if (!(s.omega_l > 0.0 && s.omega_l < s.omega_h)) msg << "need 0 < omega_l < omega_h";
  else return;
  fail(ErrorCode::kParameterDomain, msg.str());
}

NoiseSpec qubit_noise_preset() { return NoiseSpec{kQubitNoiseA0}; }
NoiseSpec coupler_noise_preset() { return NoiseSpec{kCouplerNoiseA0}; }

NoiseSpec rescale_beta(const NoiseSpec& spec, double beta, double pivot_hz) {
  NoiseSpec out = spec;
  out.beta = beta;
  out.A = spec.A * std::pow(pivot_hz, beta - spec.beta);
  return out;
}

double frequency_noise_power(const NoiseSpec& spec, Sensitivity s, NoiseKind kind) {
  validate(spec);
  if (kind == NoiseKind::kQubit && s.unit != SensitivityUnit::kPerEpsM)
    fail(ErrorCode::kUnit, "qubit noise needs d(omega_q)/d(eps_m)");
  if (kind == NoiseKind::kCoupler && s.unit != SensitivityUnit::kRadPerNsPerNg)
    fail(ErrorCode::kUnit, "coupler noise needs d(omega_c)/d(n_g) in rad/ns");
  if (kind == NoiseKind::kQubit) {
    const double k = s.value * kHzPerMicroEV;
    return k * k * spec.A;
  }
  // (1e-3 e)^2 on the gate charge, n_g = q_g / 2e.
  const double k = s.value * 1e9;
  return k * k * spec.A * 1e-6 / 4.0;
}

FrequencyNoise frequency_noise(const NoiseSpec& spec, Sensitivity s, NoiseKind kind) {
  return FrequencyNoise{frequency_noise_power(spec, s, kind), spec.beta, spec.omega_l,
                        spec.omega_h};
}

namespace {

bool is_one_over_f(double beta) { return std::abs(beta - 1.0) < 1e-12; }

// int_a^b x^-beta cos x dx, 0 <= a <= b, beta != 1.
double power_cos_integral(double a, double b, double beta) {
  double total = 0.0;
  // Series on [a, min(b, 1)].
  const double x1 = a, x2 = std::min(b, 1.0);
  if (x2 > x1) {
    double fact = 1.0;
    for (int k = 0; k < 30; ++k) {
      if (k > 0) fact *= (2.0 * k - 1.0) * (2.0 * k);
      const double p = 2.0 * k + 1.0 - beta;
      const double term = (std::pow(x2, p) - (x1 > 0 ? std::pow(x1, p) : 0.0)) / (p * fact);
      total += (k % 2 ? -term : term);
      if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(total))) break;
    }
  }
  if (b <= 1.0) return total;
  // Tail of int_y^inf x^-beta e^{ix} dx from its asymptotic series.
  auto tail = [beta](double y) {
    cdouble sum = 0.0, term = 1.0;
    for (int k = 0; k < 60; ++k) {
      sum += term;
      term *= cdouble(0.0, -1.0) * (beta + k) / y;
      if (std::abs(term) < 1e-18) break;
    }
    return (cdouble(0.0, 1.0) * std::polar(1.0, y) * std::pow(y, -beta) * sum).real();
  };
  const double lo = std::max(a, 1.0), mid = std::min(b, 50.0);
  if (mid > lo) {
    auto f = [beta](double x) { return std::pow(x, -beta) * std::cos(x); };
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, mid, 12, 1e-13);
  }
  if (b > 50.0) total += tail(std::max(50.0, a)) - tail(b);
  return total;
}

}  // namespace

double FrequencyNoise::psd(double omega) const {
  const double w = std::abs(omega) * 1e9;
  if (w < omega_l || w > omega_h) return 0.0;
  return a_omega * std::pow(kTwoPi / w, beta) * 1e-9;
}

double FrequencyNoise::band_power(double w1, double w2) const {
  const double lo = std::max(w1 * 1e9, omega_l), hi = std::min(w2 * 1e9, omega_h);
  if (!(hi > lo)) return 0.0;
  double v;
  if (is_one_over_f(beta)) v = a_omega * kTwoPi * std::log(hi / lo);
  else
    v = a_omega * std::pow(kTwoPi, beta) * (std::pow(hi, 1.0 - beta) - std::pow(lo, 1.0 - beta)) /
        (1.0 - beta);
  return v * 1e-18;
}

double FrequencyNoise::autocorrelation(double t) const {
  const double tau = std::abs(t) * 1e-9;
  double v;
  if (is_one_over_f(beta)) {
    if (tau == 0.0) v = 2.0 * a_omega * std::log(omega_h / omega_l);
    else v = 2.0 * a_omega * (gsl_sf_Ci(omega_h * tau) - gsl_sf_Ci(omega_l * tau));
  } else {
    const double pre = a_omega * std::pow(kTwoPi, beta) / kPi;
    if (tau == 0.0)
      v = pre * (std::pow(omega_h, 1.0 - beta) - std::pow(omega_l, 1.0 - beta)) / (1.0 - beta);
    else
      v = pre * std::pow(tau, beta - 1.0) * power_cos_integral(omega_l * tau, omega_h * tau, beta);
  }
  return v * 1e-18;
}

Autocorrelation autocorrelation(const FrequencyNoise& n) {
  require(n.a_omega >= 0.0 && n.omega_l > 0.0 && n.omega_l < n.omega_h,
          ErrorCode::kParameterDomain, "invalid frequency-noise parameters");
  return Autocorrelation(n);
}

double mean_sqrt_log(double omega_l, double t_ns) {
  const double x = omega_l * t_ns * 1e-9;
  if (!(x > 0.0 && x < 1.0))
    fail(ErrorCode::kParameterDomain, "log-average needs 0 < omega_l t < 1");
  // t = T e^-s: int_0^inf e^-s sqrt(L + s) ds.
  const double L = std::log(1.0 / x) + kRamseyLogConstant;
  return std::sqrt(L) + 0.5 * std::sqrt(kPi) * std::exp(L) * std::erfc(std::sqrt(L));
}

double qubit_dephasing_rate(double a_omega, bool dd, double t_ns, double omega_l) {
  require(a_omega >= 0.0, ErrorCode::kParameterDomain, "A_w must be >= 0");
  const double a = a_omega * 1e-18;
  if (dd) return std::sqrt(a * std::log(2.0));
  const double x = omega_l * t_ns * 1e-9;
  if (!(x > 0.0 && x < 1.0))
    fail(ErrorCode::kParameterDomain, "Ramsey rate formula needs 0 < omega_l t < 1");
  return std::sqrt(a * (std::log(1.0 / x) + kRamseyLogConstant));
}

double qubit_infidelity_single(const NoiseSpec& spec, double q_sens, Scheme scheme,
                               double segment_time_ns) {
  validate(spec);
  if (std::abs(spec.beta - 1.0) > 1e-12)
    fail(ErrorCode::kUnsupportedAnalytic, "closed-form qubit infidelity requires beta = 1");
  const double a = frequency_noise_power(spec, {q_sens, SensitivityUnit::kPerEpsM},
                                         NoiseKind::kQubit);
  double gt;
  if (scheme == Scheme::kOffResonant) {
    gt = std::sqrt(a * 1e-18) * mean_sqrt_log(spec.omega_l, segment_time_ns) * segment_time_ns;
  } else {
    gt = qubit_dephasing_rate(a, true, 0.0) * 2.0 * segment_time_ns;
  }
  return 0.4 * gt * gt;
}

double qubit_infidelity(const NoiseSpec& spec, double alpha, double coupler_sensitivity,
                        Scheme scheme) {
  validate(spec);
  require(alpha > 0.0 && coupler_sensitivity != 0.0, ErrorCode::kParameterDomain,
          "alpha and coupler slope must be non-zero");
  if (std::abs(spec.beta - 1.0) > 1e-12)
    fail(ErrorCode::kUnsupportedAnalytic, "closed-form qubit infidelity requires beta = 1");
  const double a = spec.A * kHzPerMicroEV * kHzPerMicroEV;  // rad^2/s^2 per unit slope^2
  const double as = alpha * coupler_sensitivity * 1e9;      // rad/s
  if (scheme == Scheme::kDD) return 16384.0 / 5.0 * a / (as * as) * std::log(2.0);
  // The slope of the qubit cancels except inside the log average; Delta n_g
  // at the sensitivity ridge sets t_g.
  const double t_g = kPi * std::sqrt(6.0) /
                     (std::abs(alpha * coupler_sensitivity) * 0.5 * std::abs(max_charge_sensitivity()));
  const double e = mean_sqrt_log(spec.omega_l, t_g);
  return 96.0 * kPi * kPi / 5.0 * a * e * e / (as * as);
}

// ---------------------------------------------------------------- cumulant

namespace {

constexpr int kBlocks = 4;

struct BlockDiag {
  Mat2 b[kBlocks];
};

BlockDiag block_diagonal(const Mat8& m) {
  BlockDiag d;
  for (int x = 0; x < kBlocks; ++x) d.b[x] = m.block<2, 2>(2 * x, 2 * x);
  return d;
}

// Product-integration weights: P_i = int_0^h C(ih + u)(1 - u/h) du and
// Q_i = int_0^h C(ih + u) (u/h) du.
void hat_weights(const FrequencyNoise& n, double h, int count, std::vector<double>& P,
                 std::vector<double>& Q) {
  P.assign(count, 0.0);
  Q.assign(count, 0.0);
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  for (int i = 0; i < count; ++i) {
    const double t0 = i * h;
    P[i] = GK::integrate([&](double u) { return n.autocorrelation(t0 + u) * (1.0 - u / h); },
                         0.0, h, 3, 1e-12);
    Q[i] = GK::integrate([&](double u) { return n.autocorrelation(t0 + u) * (u / h); }, 0.0,
                         h, 3, 1e-12);
  }
}

}  // namespace

CumulantResult cumulant_evolve(const SequenceEvolution& ev, const FrequencyNoise& noise,
                               const std::vector<Mat8>& inputs, int workers) {
  const int npts = static_cast<int>(ev.U.size());
  const int n = npts - 1;
  require(n >= 2 && n % 2 == 0, ErrorCode::kIntegration,
          "cumulant stepping needs an even number of grid intervals");
  const double h = ev.dt;

  // V(t) = U0^dag P_e U0 is block diagonal for every sequence built here.
  Mat8 pe = Mat8::Zero();
  for (int x = 0; x < kBlocks; ++x) pe(2 * x + 1, 2 * x + 1) = 1.0;
  std::vector<double> vflat(static_cast<size_t>(npts) * 32);
  std::vector<BlockDiag> V(npts);
  for (int k = 0; k < npts; ++k) {
    const Mat8 v = ev.U[k].adjoint() * pe * ev.U[k];
    V[k] = block_diagonal(v);
    double* dst = &vflat[static_cast<size_t>(k) * 32];
    for (int x = 0; x < kBlocks; ++x)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          *dst++ = V[k].b[x](r, c).real();
          *dst++ = V[k].b[x](r, c).imag();
        }
  }

  std::vector<double> P, Q;
  hat_weights(noise, h, n, P, Q);
  std::vector<double> W(n + 1, 0.0);  // interior lag weights
  for (int m = 1; m < n; ++m) W[m] = Q[m - 1] + P[m];

  std::vector<BlockDiag> Va(npts), VVa(npts), VaV(npts);
  std::vector<double> acc(32);
  for (int k = 0; k < npts; ++k) {
    std::fill(acc.begin(), acc.end(), 0.0);
    if (k > 0) {
      auto add = [&](int j, double w) {
        const double* src = &vflat[static_cast<size_t>(j) * 32];
        for (int m = 0; m < 32; ++m) acc[m] += w * src[m];
      };
      add(k, P[0]);
      add(0, Q[k - 1]);
      for (int j = 1; j < k; ++j) add(j, W[k - j]);
    }
    const double* s = acc.data();
    for (int x = 0; x < kBlocks; ++x)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c, s += 2) Va[k].b[x](r, c) = cdouble(s[0], s[1]);
    for (int x = 0; x < kBlocks; ++x) {
      VVa[k].b[x] = V[k].b[x] * Va[k].b[x];
      VaV[k].b[x] = Va[k].b[x] * V[k].b[x];
    }
  }

  auto rhs = [&](int k, const Mat8& rho) {
    Mat8 out;
    for (int x = 0; x < kBlocks; ++x)
      for (int y = 0; y < kBlocks; ++y) {
        const Mat2 r = rho.block<2, 2>(2 * x, 2 * y);
        out.block<2, 2>(2 * x, 2 * y) =
            -(VVa[k].b[x] * r - V[k].b[x] * r * Va[k].b[y] - Va[k].b[x] * r * V[k].b[y] +
              r * VaV[k].b[y]);
      }
    return out;
  };

  CumulantResult res;
  res.outputs.resize(inputs.size());
  std::vector<double> min_eig(inputs.size(), 0.0), trace_err(inputs.size(), 0.0);
  detail::parallel_for(static_cast<int>(inputs.size()), workers, [&](int i) {
    Mat8 rho = inputs[i];
    const cdouble tr0 = rho.trace();
    const double H = 2.0 * h;
    for (int k = 0; k + 2 <= n; k += 2) {
      const Mat8 k1 = rhs(k, rho);
      const Mat8 k2 = rhs(k + 1, rho + 0.5 * H * k1);
      const Mat8 k3 = rhs(k + 1, rho + 0.5 * H * k2);
      const Mat8 k4 = rhs(k + 2, rho + H * k3);
      rho += (H / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    Mat8 out = ev.final * rho * ev.final.adjoint();
    out = 0.5 * (out + out.adjoint()).eval();
    trace_err[i] = std::abs(out.trace() - tr0);
    Eigen::SelfAdjointEigenSolver<Mat8> es(out, Eigen::EigenvaluesOnly);
    min_eig[i] = es.eigenvalues()(0);
    res.outputs[i] = out;
  });
  res.min_eigenvalue = inputs.empty() ? 0.0 : *std::min_element(min_eig.begin(), min_eig.end());
  res.max_trace_error = inputs.empty() ? 0.0 : *std::max_element(trace_err.begin(), trace_err.end());
  res.positivity_warning = res.min_eigenvalue < -1e-3;
  if (!(res.max_trace_error < 1e-9))
    fail(ErrorCode::kIntegration, "cumulant evolution lost trace");
  return res;
}

Mat8 cumulant_evolve(const ConditionalLadder& ladder, const PulseSpec& pulse,
                     const FrequencyNoise& noise, const Mat8& rho0) {
  const auto ev = evolve_sequence(ladder, single_pulse_sequence(pulse));
  return cumulant_evolve(ev, noise, {rho0}).outputs[0];
}

// ------------------------------------------------------------ Monte Carlo

NoiseModes noise_modes(const FrequencyNoise& n, int count) {
  require(count >= 1, ErrorCode::kParameterDomain, "need at least one noise mode");
  NoiseModes m;
  const double wl = n.omega_l * 1e-9, wh = n.omega_h * 1e-9;  // rad/ns
  const double ratio = std::log(wh / wl) / count;
  for (int k = 0; k < count; ++k) {
    const double lo = wl * std::exp(k * ratio), hi = wl * std::exp((k + 1) * ratio);
    m.omega.push_back(std::sqrt(lo * hi));
    m.amp.push_back(std::sqrt(4.0 * n.band_power(lo, hi) / kTwoPi));
  }
  return m;
}

namespace {

uint64_t splitmix(uint64_t& s) {
  uint64_t z = (s += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<double> trajectory_phases(uint64_t seed, uint64_t trajectory, size_t count) {
  uint64_t s = seed;
  s = splitmix(s) ^ (trajectory * 0xD1B54A32D192ED03ull);
  std::vector<double> ph(count);
  for (auto& p : ph) p = kTwoPi * static_cast<double>(splitmix(s) >> 11) * 0x1.0p-53;
  return ph;
}

double noise_value(const NoiseModes& m, const std::vector<double>& phases, double t) {
  double z = 0.0;
  for (size_t k = 0; k < m.omega.size(); ++k) z += m.amp[k] * std::cos(m.omega[k] * t + phases[k]);
  return z;
}

namespace {

// exp(-i H h) for a 2x2 Hermitian H.
Mat2 expm_herm2(const Mat2& H, double h) {
  const double a0 = 0.5 * (H(0, 0).real() + H(1, 1).real());
  const double az = 0.5 * (H(0, 0).real() - H(1, 1).real());
  const double ax = H(0, 1).real(), ay = -H(0, 1).imag();
  const double r = std::sqrt(ax * ax + ay * ay + az * az);
  const double c = std::cos(r * h), s = r > 0 ? std::sin(r * h) / r : h;
  Mat2 m;
  const cdouble mi(0.0, -1.0);
  m(0, 0) = c + mi * s * az;
  m(1, 1) = c - mi * s * az;
  m(0, 1) = mi * s * cdouble(ax, -ay);
  m(1, 0) = mi * s * cdouble(ax, ay);
  return std::polar(1.0, -a0 * h) * m;
}

Mat8 trajectory_unitary(const ConditionalLadder& ladder, const GateSequence& seq,
                        const NoiseModes& modes, const std::vector<double>& phases) {
  const size_t nm = modes.omega.size();
  const double h = seq.pulses.front().dt();
  std::vector<cdouble> z(nm), rot(nm);
  std::vector<double> coef(nm);
  for (size_t m = 0; m < nm; ++m) {
    z[m] = std::polar(1.0, phases[m]);
    rot[m] = std::polar(1.0, modes.omega[m] * h);
    coef[m] = modes.amp[m] / (modes.omega[m] * h);
  }
  Mat8 total = Mat8::Identity();
  for (size_t s = 0; s < seq.pulses.size(); ++s) {
    const PulseSpec& p = seq.pulses[s];
    const double delta = ladder.omega11() - p.omega_d;
    std::array<Mat2, 4> u;
    for (auto& b : u) b = Mat2::Identity();
    for (int k = 0; k < p.steps(); ++k) {
      double zeta = 0.0;
      for (size_t m = 0; m < nm; ++m) {
        const cdouble zn = z[m] * rot[m];
        zeta += coef[m] * (zn.imag() - z[m].imag());
        z[m] = zn;
      }
      const cdouble om = p.envelope((k + 0.5) * h);
      for (int ab = 0; ab < 4; ++ab) {
        Mat2 H;
        H << 0.0, 0.5 * om, 0.5 * std::conj(om), ladder.block_detuning(ab, delta) + zeta;
        u[ab] = expm_herm2(H, h) * u[ab];
      }
    }
    Mat8 seg = Mat8::Zero();
    for (int ab = 0; ab < 4; ++ab) seg.block<2, 2>(2 * ab, 2 * ab) = u[ab];
    total = embed_qubit_gate(seq.gates[s]) * seg * total;
  }
  return total;
}

McEstimate batch_means(const std::vector<double>& x) {
  McEstimate e;
  const int n = static_cast<int>(x.size());
  double sum = 0.0;
  for (double v : x) sum += v;
  e.mean = sum / n;
  const int batches = std::min(10, n);
  std::vector<double> bm(batches, 0.0);
  std::vector<int> cnt(batches, 0);
  for (int i = 0; i < n; ++i) {
    const int b = static_cast<int>(static_cast<int64_t>(i) * batches / n);
    bm[b] += x[i];
    ++cnt[b];
  }
  double var = 0.0;
  for (int b = 0; b < batches; ++b) {
    bm[b] /= cnt[b];
    var += (bm[b] - e.mean) * (bm[b] - e.mean);
  }
  e.std_error = batches > 1 ? std::sqrt(var / (batches - 1) / batches) : 0.0;
  return e;
}

void check_sequence(const GateSequence& seq) {
  require(!seq.pulses.empty() && seq.pulses.size() == seq.gates.size(),
          ErrorCode::kParameterDomain, "sequence needs one gate slot per pulse");
  for (const auto& p : seq.pulses)
    require(std::abs(p.dt() - seq.pulses.front().dt()) < 1e-12 * p.dt(),
            ErrorCode::kParameterDomain, "sequence segments must share one step size");
}

}  // namespace

Mat8 mc_dephasing_oracle(const ConditionalLadder& ladder, const GateSequence& seq,
                         const FrequencyNoise& noise, const Mat8& rho0, int n_traj,
                         uint64_t seed, int n_modes, int workers) {
  require(n_traj >= 100, ErrorCode::kParameterDomain, "Monte Carlo needs >= 100 trajectories");
  check_sequence(seq);
  const NoiseModes modes = noise_modes(noise, n_modes);
  std::vector<Mat8> acc(n_traj);
  detail::parallel_for(n_traj, workers, [&](int i) {
    const Mat8 u = trajectory_unitary(ladder, seq, modes,
                                      trajectory_phases(seed, i, modes.omega.size()));
    acc[i] = u * rho0 * u.adjoint();
  });
  Mat8 mean = Mat8::Zero();
  for (const auto& a : acc) mean += a;  // fixed order: deterministic sum
  return mean / n_traj;
}

Mat8 mc_dephasing_oracle(const ConditionalLadder& ladder, const PulseSpec& pulse,
                         const FrequencyNoise& noise, const Mat8& rho0, int n_traj,
                         uint64_t seed) {
  return mc_dephasing_oracle(ladder, single_pulse_sequence(pulse), noise, rho0, n_traj, seed);
}

McEstimate mc_entanglement_fidelity(const ConditionalLadder& ladder, const GateSequence& seq,
                                    const FrequencyNoise& noise, const Mat4& ideal,
                                    int n_traj, uint64_t seed, int n_modes, int workers) {
  require(n_traj >= 100, ErrorCode::kParameterDomain, "Monte Carlo needs >= 100 trajectories");
  check_sequence(seq);
  const NoiseModes modes = noise_modes(noise, n_modes);
  // Single-qubit inputs |0>, |1>, |+>, |+i>.
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<Eigen::Vector2cd, 4> s1 = {
      Eigen::Vector2cd(1, 0), Eigen::Vector2cd(0, 1), Eigen::Vector2cd(r, r),
      Eigen::Vector2cd(r, cdouble(0, r))};
  std::vector<Vec8> in, target;
  for (const auto& a : s1)
    for (const auto& b : s1) {
      Eigen::Vector4cd q;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q(2 * i + j) = a(i) * b(j);
      const Eigen::Vector4cd qi = ideal * q;
      Vec8 x = Vec8::Zero(), y = Vec8::Zero();
      for (int ab = 0; ab < 4; ++ab) {
        x(2 * ab) = q(ab);
        y(2 * ab) = qi(ab);
      }
      in.push_back(x);
      target.push_back(y);
    }
  std::vector<double> fe(n_traj);
  detail::parallel_for(n_traj, workers, [&](int i) {
    const Mat8 u = trajectory_unitary(ladder, seq, modes,
                                      trajectory_phases(seed, i, modes.omega.size()));
    double f = 0.0;
    for (size_t k = 0; k < in.size(); ++k) f += std::norm(target[k].dot(u * in[k]));
    fe[i] = f / in.size();
  });
  return batch_means(fe);
}

McEstimate mc_qubit_coherence(const FrequencyNoise& n, bool echo, double total, int n_traj,
                              uint64_t seed, int n_modes, int workers) {
  require(n_traj >= 100, ErrorCode::kParameterDomain, "Monte Carlo needs >= 100 trajectories");
  require(total > 0.0, ErrorCode::kParameterDomain, "window must be positive");
  const NoiseModes modes = noise_modes(n, n_modes);
  std::vector<double> c(n_traj);
  detail::parallel_for(n_traj, workers, [&](int i) {
    const auto ph = trajectory_phases(seed, i, modes.omega.size());
    double phi = 0.0;
    for (size_t k = 0; k < ph.size(); ++k) {
      const double w = modes.omega[k], p = ph[k];
      const double f = echo ? 2.0 * std::sin(0.5 * w * total + p) - std::sin(p) -
                                  std::sin(w * total + p)
                            : std::sin(w * total + p) - std::sin(p);
      phi += modes.amp[k] * f / w;
    }
    c[i] = std::cos(phi);
  });
  return batch_means(c);
}

}  // namespace ocscz
