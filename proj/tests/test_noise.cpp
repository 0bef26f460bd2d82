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

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <gtest/gtest.h>

#include "ocscz/error.hpp"
#include "ocscz/fidelity.hpp"
#include "ocscz/noise.hpp"
#include "ocscz/propagator.hpp"
#include "ocscz/pulses.hpp"

namespace ocscz {
namespace {

constexpr double kDw = kTwoPi * 0.2301;

// Ci(x) = -int_x^inf cos(t)/t dt by Ooura's double-exponential Fourier
// quadrature, shifted so the integrals start at zero.
double ci_reference(double x) {
  static boost::math::quadrature::ooura_fourier_cos<double> fc;
  static boost::math::quadrature::ooura_fourier_sin<double> fs;
  auto f = [x](double u) { return 1.0 / (x + u); };
  const double c = fc.integrate(f, 1.0).first, s = fs.integrate(f, 1.0).first;
  return -(std::cos(x) * c - std::sin(x) * s);
}

FrequencyNoise one_over_f(double a_omega) {
  FrequencyNoise n;
  n.a_omega = a_omega;
  return n;
}

PulseSpec idle(double t_g, int steps) {
  PulseSpec p;
  p.kind = PulseKind::kCustom;
  p.t_g = t_g;
  p.samples.assign(steps + 1, cdouble(0));
  return p;
}

TEST(Noise, SpecValidationAndPresets) {
  EXPECT_DOUBLE_EQ(qubit_noise_preset().A, 0.21);
  EXPECT_DOUBLE_EQ(coupler_noise_preset().A, 0.5);
  EXPECT_NO_THROW(validate(qubit_noise_preset()));
  NoiseSpec s = qubit_noise_preset();
  s.beta = 1.5;
  EXPECT_THROW(validate(s), Error);
  s = qubit_noise_preset();
  s.A = -1;
  EXPECT_THROW(validate(s), Error);
  s = qubit_noise_preset();
  s.omega_l = s.omega_h;
  EXPECT_THROW(validate(s), Error);
}

TEST(Noise, FrequencyNoisePower) {
  NoiseSpec z = qubit_noise_preset();
  z.A = 0;
  EXPECT_EQ(frequency_noise_power(z, {0.1, SensitivityUnit::kPerEpsM}, NoiseKind::kQubit), 0.0);
  const auto q = qubit_noise_preset();
  const double a1 = frequency_noise_power(q, {0.1, SensitivityUnit::kPerEpsM}, NoiseKind::kQubit);
  const double a2 = frequency_noise_power(q, {0.2, SensitivityUnit::kPerEpsM}, NoiseKind::kQubit);
  EXPECT_NEAR(a2, 4 * a1, 1e-12 * a2);
  EXPECT_NEAR(a1, std::pow(0.1 * 241.798935e6, 2) * 0.21, 1e-6 * a1);
  const auto c = coupler_noise_preset();
  const double ac =
      frequency_noise_power(c, {138.6, SensitivityUnit::kRadPerNsPerNg}, NoiseKind::kCoupler);
  EXPECT_NEAR(ac, std::pow(138.6e9, 2) * 0.5e-6 / 4, 1e-6 * ac);
  EXPECT_THROW(frequency_noise_power(q, {0.1, SensitivityUnit::kRadPerNsPerNg}, NoiseKind::kQubit),
               Error);
  EXPECT_THROW(frequency_noise_power(c, {1.0, SensitivityUnit::kPerEpsM}, NoiseKind::kCoupler),
               Error);
}

TEST(Noise, RescaleKeepsPsdAtPivot) {
  const auto base = qubit_noise_preset();
  const auto b11 = rescale_beta(base, 1.1);
  EXPECT_NEAR(b11.A, 0.21 * std::pow(1e7, 0.1), 1e-12);
  const Sensitivity s{0.1, SensitivityUnit::kPerEpsM};
  const double w = kTwoPi * 1e7 * 1e-9;  // rad/ns
  const double p1 = frequency_noise(base, s, NoiseKind::kQubit).psd(w);
  const double p2 = frequency_noise(b11, s, NoiseKind::kQubit).psd(w);
  EXPECT_NEAR(p2, p1, 1e-12 * p1);
}

TEST(Noise, CosineIntegralMatchesQuadrature) {
  const auto n = one_over_f(1e14);
  for (double t : {1e-4, 3e-3, 0.05, 1.0, 20.0, 700.0, 4e4}) {
    const double want =
        2 * n.a_omega * (ci_reference(n.omega_h * t * 1e-9) - ci_reference(n.omega_l * t * 1e-9)) *
        1e-18;
    EXPECT_NEAR(n.autocorrelation(t), want, 1e-10 * std::abs(n.autocorrelation(0)))
        << "t = " << t;
  }
}

TEST(Noise, AutocorrelationShape) {
  const auto n = one_over_f(1e14);
  const double s0 = n.autocorrelation(0);
  // Both signs of omega with measure d omega / 2 pi.
  EXPECT_NEAR(s0, 2 * n.band_power(0, 1e9) / kTwoPi, 1e-12 * s0);
  EXPECT_NEAR(n.autocorrelation(1e-5), s0, 0.02 * s0);
  // Non-negative up to the first zero of Ci (x = 0.6165), decreasing up to
  // omega_l t = pi/2, where -Ci has its minimum.
  const double t_end = kPi / n.omega_l * 1e9;
  const double t_zero = 0.6165 / n.omega_l * 1e9;
  const double t_min = 0.5 * kPi / n.omega_l * 1e9;
  double prev = s0;
  for (double t = 1e-4; t < t_min; t *= 1.3) {
    const double s = n.autocorrelation(t);
    if (t < t_zero) EXPECT_GE(s, 0.0);
    EXPECT_LE(s, prev * 1.02);  // Ci ripple near t ~ 1/omega_h only
    prev = std::min(prev, s);
  }
  EXPECT_LT(n.autocorrelation(1.01 * t_zero), 0.0);
  EXPECT_GT(n.autocorrelation(t_end), n.autocorrelation(t_min));
  EXPECT_LT(n.autocorrelation(t_end), 0.1 * s0);
  EXPECT_LT(std::abs(n.autocorrelation(1e4 * t_end)), 1e-3 * s0);
}

TEST(Noise, GeneralBetaAutocorrelationMatchesQuadrature) {
  for (double beta : {0.8, 1.2}) {
    FrequencyNoise n = one_over_f(1e14);
    n.beta = beta;
    EXPECT_NEAR(n.autocorrelation(0), 2 * n.band_power(0, 1e9) / kTwoPi,
                1e-10 * n.autocorrelation(0));
    for (double t : {0.01, 0.3, 5.0, 200.0}) {
      // int S cos(w t) dw / pi over the band, integrated decade by decade in
      // log-frequency.
      double sum = 0;
      const double lo = std::log(n.omega_l * 1e-9), hi = std::log(n.omega_h * 1e-9);
      const int pieces = 400;
      for (int k = 0; k < pieces; ++k) {
        const double a = lo + (hi - lo) * k / pieces, b = lo + (hi - lo) * (k + 1) / pieces;
        sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            [&](double x) {
              const double w = std::exp(x);
              return n.psd(w) * std::cos(w * t) * w;
            },
            a, b, 8, 1e-13);
      }
      sum /= kPi;
      EXPECT_NEAR(n.autocorrelation(t), sum, 1e-7 * n.autocorrelation(0))
          << "beta " << beta << " t " << t;
    }
  }
}

TEST(Noise, DephasingRates) {
  EXPECT_EQ(qubit_dephasing_rate(0, false, 10), 0.0);
  EXPECT_EQ(qubit_dephasing_rate(0, true, 10), 0.0);
  EXPECT_EQ(qubit_dephasing_rate(1e14, true, 1), qubit_dephasing_rate(1e14, true, 1e4));
  EXPECT_NEAR(qubit_dephasing_rate(1e14, true, 1), std::sqrt(1e-4 * std::log(2.0)), 1e-15);
  EXPECT_THROW(qubit_dephasing_rate(1e14, false, 2e4), Error);  // omega_l t > 1
}

TEST(Noise, QubitInfidelityClosedForms) {
  NoiseSpec z = qubit_noise_preset();
  z.A = 0;
  EXPECT_EQ(qubit_infidelity(z, 0.2, 138.6, Scheme::kOffResonant), 0.0);
  const auto q = qubit_noise_preset();
  const double d1 = qubit_infidelity(q, 0.2, 138.6, Scheme::kDD);
  const double d2 = qubit_infidelity(q, 0.4, 138.6, Scheme::kDD);
  EXPECT_NEAR(d1 / d2, 4.0, 1e-12);
  // The off-resonant form carries a slowly varying log of the gate time.
  const double o1 = qubit_infidelity(q, 0.2, 138.6, Scheme::kOffResonant);
  const double o2 = qubit_infidelity(q, 0.4, 138.6, Scheme::kOffResonant);
  EXPECT_GT(o1 / o2, 3.6);
  EXPECT_LT(o1 / o2, 4.0);
  EXPECT_NEAR(o1, 0.0298, 0.003);
  EXPECT_THROW(qubit_infidelity(rescale_beta(q, 1.1), 0.2, 138.6, Scheme::kDD), Error);
}

TEST(Noise, RamseyMonteCarloMatchesRate) {
  const double t = 10.0;
  for (double gt : {0.33, 0.6, 1.0}) {
    // a_omega giving Gamma t = gt at t = 10 ns.
    const double unit = qubit_dephasing_rate(1.0, false, t) * t;
    const auto n = one_over_f(gt * gt / (unit * unit));
    ASSERT_NEAR(qubit_dephasing_rate(n.a_omega, false, t) * t, gt, 1e-12);
    const auto mc = mc_qubit_coherence(n, false, t, 1000, 42);
    const double want = std::exp(-gt * gt);
    EXPECT_NEAR(mc.mean, want, 0.05 * want) << "Gamma t = " << gt;
    const double rate = std::sqrt(-std::log(mc.mean)) / t;
    EXPECT_NEAR(rate, gt / t, 0.05 * gt / t);
  }
}

TEST(Noise, EchoMonteCarloMatchesDdRate) {
  const double t = 10.0;
  const double unit = qubit_dephasing_rate(1.0, true, t) * t;
  const auto n = one_over_f(0.25 / (unit * unit));  // Gamma t = 0.5
  const auto mc = mc_qubit_coherence(n, true, t, 2000, 7);
  EXPECT_NEAR(mc.mean, std::exp(-0.25), 0.05 * std::exp(-0.25));
}

TEST(Noise, TrajectoryStreamsAreDeterministic) {
  const auto a = trajectory_phases(9, 3, 50), b = trajectory_phases(9, 3, 50);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, trajectory_phases(9, 4, 50));
  EXPECT_NE(a, trajectory_phases(10, 3, 50));
  for (double p : a) {
    EXPECT_GE(p, 0.0);
    EXPECT_LT(p, kTwoPi);
  }
  const auto n = one_over_f(1e14);
  const auto m1 = mc_qubit_coherence(n, false, 5, 200, 3, 400, 1);
  const auto m4 = mc_qubit_coherence(n, false, 5, 200, 3, 400, 4);
  EXPECT_EQ(m1.mean, m4.mean);
}

// Hann-window transform of exp(i mu t) over [0, T], in closed form.
cdouble hann_transform(double nu, double T) {
  auto e = [T](double mu) {
    if (std::abs(mu * T) < 1e-8) return cdouble(T, -0.5 * mu * T * T);
    return (1.0 - std::polar(1.0, -mu * T)) / cdouble(0, mu);
  };
  const double s = kTwoPi / T;
  return 0.5 * e(nu) - 0.25 * e(nu - s) - 0.25 * e(nu + s);
}

TEST(Noise, SampledProcessPeriodogramMatchesPsd) {
  const auto n = one_over_f(1e14);
  const auto modes = noise_modes(n, 400);
  const double wl = n.omega_l * 1e-9, wh = n.omega_h * 1e-9;
  const int n_traj = 2000;
  for (double w = 10 * wl; w <= wh / 10; w *= std::sqrt(10.0)) {
    const double T = 60.0 / w;
    std::vector<cdouble> wp(modes.omega.size()), wm(modes.omega.size());
    for (size_t k = 0; k < modes.omega.size(); ++k) {
      wp[k] = hann_transform(w - modes.omega[k], T);
      wm[k] = hann_transform(w + modes.omega[k], T);
    }
    double acc = 0;
    for (int i = 0; i < n_traj; ++i) {
      const auto ph = trajectory_phases(77, i, modes.omega.size());
      cdouble z = 0;
      for (size_t k = 0; k < ph.size(); ++k)
        z += 0.5 * modes.amp[k] * (std::polar(1.0, ph[k]) * wp[k] + std::polar(1.0, -ph[k]) * wm[k]);
      acc += std::norm(z);
    }
    const double est = acc / n_traj / (3.0 * T / 8.0);
    EXPECT_NEAR(est, n.psd(w), 0.1 * n.psd(w)) << "omega " << w << " rad/ns";
  }
}

TEST(Noise, ZeroNoiseCumulantIsUnitary) {
  const auto l = linear_ladder(7.0, kDw, -1);
  const auto p = off_resonant_cz(l);
  const auto ev = evolve_sequence(l, single_pulse_sequence(p));
  const auto in = product_inputs();
  const auto r = cumulant_evolve(ev, one_over_f(0.0), in);
  for (size_t k = 0; k < in.size(); ++k)
    EXPECT_LT((r.outputs[k] - ev.final * in[k] * ev.final.adjoint()).norm(), 1e-10);
  const Mat8 mc = mc_dephasing_oracle(l, p, one_over_f(0.0), in[5], 100, 1);
  EXPECT_LT((mc - ev.final * in[5] * ev.final.adjoint()).norm(), 1e-11);
}

TEST(Noise, CumulantPreservesTraceAndHermiticity) {
  const auto l = linear_ladder(7.0, kDw, -1);
  const auto ev = evolve_sequence(l, single_pulse_sequence(off_resonant_cz(l)));
  const auto r = cumulant_evolve(ev, one_over_f(std::pow(138.6e9, 2) * 0.5e-6 / 4), product_inputs());
  EXPECT_LT(r.max_trace_error, 1e-9);
  for (const auto& rho : r.outputs) EXPECT_LT((rho - rho.adjoint()).norm(), 1e-12);
  EXPECT_FALSE(r.positivity_warning);
}

TEST(Noise, UndrivenCoherenceDecaysAsGaussian) {
  const auto l = linear_ladder(7.0, kDw, 1);
  const double t = 10.0;
  const double unit = qubit_dephasing_rate(1.0, false, t) * t;
  for (double gt : {0.25, 0.5, 1.0}) {
    const auto n = one_over_f(gt * gt / (unit * unit));
    PulseSpec p = idle(t, 2000);
    p.omega_d = l.omega11();
    Mat8 rho = Mat8::Zero();
    // |11> block, coupler in (|g> + |e>)/sqrt(2).
    rho.block<2, 2>(6, 6).setConstant(0.5);
    const Mat8 out = cumulant_evolve(l, p, n, rho);
    const double want = std::exp(-gt * gt);
    EXPECT_NEAR(2 * std::abs(out(6, 7)), want, 0.05 * want) << "Gamma t = " << gt;
    EXPECT_NEAR(out(6, 6).real(), 0.5, 1e-12);
  }
}

}  // namespace
}  // namespace ocscz
