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


// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ocscz/capnet.hpp"
#include "ocscz/config.hpp"
#include "ocscz/error.hpp"
#include "ocscz/fidelity.hpp"
#include "ocscz/noise.hpp"
#include "ocscz/propagator.hpp"
#include "ocscz/pulses.hpp"
#include "ocscz/runs.hpp"

using namespace ocscz;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[FAILED: " << what << "] ";
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what();
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && dt > budget_s) {
    o.pass = false;
    o.detail << "[runtime over " << budget_s << " s] ";
  }
  if (!o.pass) ++failures;
  std::printf("%s %d %s: %s(%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name,
              o.detail.str().c_str(), dt);
  std::fflush(stdout);
}

HybridConfig base_config(double alpha = 0.2) {
  Config c;
  c.alpha = alpha;
  return hybrid_config(c);
}

double coupler_slope(const HybridConfig& h) {
  TransmonParams tp = h.transmon;
  tp.n_g = h.n_g0;
  return charge_dispersion_sensitivity(tp).value;
}

// Simpson transform of the stage-one samples at angular frequency w.
double stage_one_spectrum(const PulseSpec& p, double w) {
  const int half = p.steps() / 2;
  const double h = p.dt();
  cdouble s = 0;
  for (int k = 0; k <= half; ++k) {
    const double wt = (k == 0 || k == half) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    s += wt * p.samples[k] * std::polar(1.0, -w * k * h);
  }
  return std::abs(s * h / 3.0);
}

// 1 - F_g of the cumulant channel of a single pulse against the
// virtual-Z-corrected CZ.
double coupler_infidelity(const ConditionalLadder& l, const PulseSpec& p,
                          const FrequencyNoise& n) {
  const auto ev = evolve_sequence(l, single_pulse_sequence(p));
  const auto ideal = corrected_ideal(conditional_phases(blocks_of(ev.final)), kPi);
  const auto r = cumulant_evolve(ev, n, product_inputs());
  return 1.0 - averaged_gate_fidelity(entanglement_fidelity(r.outputs, ideal));
}

}  // namespace

int main() {
  criterion(1, "qubit sensitivity maximum (200x200, J <= 0.7 GHz)", 10.0, [](Outcome& o) {
    const Config c;
    const auto m = qubit_sensitivity_map(c);
    o.detail << "max |d omega_q/d eps_m| = " << m.max << " at eps_m/U = " << m.eps_at
             << ", t/U = " << m.t_at << " (target 0.104 +- 0.002) ";
    o.check(m.eps_over_U.size() == 200 && m.t_over_U.size() == 200, "grid is 200x200");
    o.check(std::abs(m.max - 0.104) <= 0.002, "maximum within tolerance");
  });

  criterion(2, "coupler sensitivity maximum (100x100, 1 GHz parity split)", 60.0,
            [](Outcome& o) {
              const Config c;
              const auto m = coupler_sensitivity_map(c);
              o.detail << "max |d omega_c/d n_g| = " << m.max << " Grad/s at E_J = " << m.ej_at
                       << ", E_C = " << m.ec_at << " GHz (target 139 +- 3%) ";
              o.check(m.E_J.size() == 100 && m.E_C.size() == 100, "grid is 100x100");
              o.check(std::abs(m.max - 139.0) <= 0.03 * 139.0, "maximum within 3%");
            });

  criterion(3, "operating-point consistency (alpha = 0.2)", 0, [](Outcome& o) {
    const auto h = base_config();
    const auto l = conditional_ladder(h);
    const double dw_mhz = l.delta_omega_c / kTwoPi * 1e3;
    const double g_mhz = std::abs(coupling_strength(h)) * 1e3;
    const double slope = coupler_slope(h);
    const double dn = gate_charge_shift(h);
    const double tri = std::abs(l.delta_omega_linear - std::abs(slope) * dn) / l.delta_omega_linear;
    o.detail << "d omega_c/2pi = " << dw_mhz << " MHz (237 +- 3%), g/h = " << g_mhz
             << " MHz (53 +- 3%), triangle rel. error = " << tri << " ";
    o.check(std::abs(dw_mhz - 237) <= 0.03 * 237, "Delta omega_c within 3%");
    o.check(std::abs(g_mhz - 53) <= 0.03 * 53, "g within 3%");
    o.check(tri <= 1e-10, "consistency triangle");
  });

  criterion(4, "coherent gate correctness", 30.0, [](Outcome& o) {
    const auto l = conditional_ladder(base_config());
    const auto off = conditional_phases(evolve_unitary(l, off_resonant_cz(l), false));
    double leak = 0;
    for (double x : off.leakage) leak = std::max(leak, x);
    const double off_err = std::abs(wrap_phase(off.theta - kPi));
    o.detail << "offres |theta - pi| = " << off_err << ", max leakage = " << leak << "; ";
    o.check(off_err <= 1e-3, "off-resonant theta");
    o.check(leak < 1e-4, "off-resonant leakage");

    const auto sq = synthesize_cphase(l, kPi / 2);
    const auto sph = conditional_phases(evolve_unitary(l, sq, false), 1.0);
    const double sq_err = std::abs(wrap_phase(sph.theta - kPi / 2));
    double sq_leak = 0;
    for (double x : sph.leakage) sq_leak = std::max(sq_leak, x);
    o.detail << "GaMAM sqrt(CZ) t_g = " << sq.t_g << " ns |theta - pi/2| = " << sq_err
             << " (leakage " << sq_leak << "); ";
    o.check(std::abs(sq.t_g - 16 / l.delta_omega_c) < 1e-12, "t_g = 16/dw");
    o.check(sq_err <= 1e-3, "sqrt(CZ) theta");

    SynthesisOptions so;
    so.dd_composite = true;
    const auto p = synthesize_cphase(l, l.sign * kPi / 2, 0.0, so);
    const auto ev = evolve_sequence(l, dd_sequence(p));
    const double dd_err = std::abs(wrap_phase(conditional_phases(blocks_of(ev.final)).theta - kPi));
    o.detail << "DD composite |theta - pi| = " << dd_err << "; ";
    o.check(dd_err <= 2e-3, "DD theta");

    Mat4 ideal = Mat4::Identity();
    ideal(3, 3) = cdouble(0, 1);
    Mat4 want = Mat4::Identity();
    want(0, 0) = want(3, 3) = cdouble(0, 1);
    const double id_err = (dd_cz_compose(ideal) - want).norm();
    o.detail << "ideal-matrix identity error = " << id_err << " ";
    o.check(id_err == 0.0, "Appendix identity exact");
  });

  criterion(5, "Magnus residuals and spectral nulls", 0, [](Outcome& o) {
    const auto l = conditional_ladder(base_config());
    SynthesisReport rep;
    const auto p = synthesize_cphase(l, l.sign * kPi / 2, 0.0, {}, &rep);
    const auto r = magnus_residuals(rep.params, p.t_g, l.delta_omega_c);
    double peak = 0;
    for (int k = 0; k <= 500; ++k)
      peak = std::max(peak, stage_one_spectrum(p, 10 * l.delta_omega_c * k / 500));
    const double n1 = stage_one_spectrum(p, l.delta_omega_c) / peak;
    const double n2 = stage_one_spectrum(p, 2 * l.delta_omega_c) / peak;
    o.detail << "|r0| = " << std::abs(r.r0) << ", |r1| = " << std::abs(r.r1)
             << ", |r2| = " << std::abs(r.r2) << ", nulls/peak = " << n1 << ", " << n2 << " ";
    o.check(r.max_abs() < 1e-6, "residuals below 1e-6");
    o.check(n1 < 1e-4 && n2 < 1e-4, "spectral nulls below 1e-4 of peak");
  });

  criterion(6, "noise-solver validation", 600.0, [](Outcome& o) {
    const auto h = base_config();
    const auto l = conditional_ladder(h);
    const auto p = off_resonant_cz(l);
    const auto ev = evolve_sequence(l, single_pulse_sequence(p));
    const auto inputs = product_inputs();

    // (a) zero noise
    FrequencyNoise zero;
    const auto za = cumulant_evolve(ev, zero, inputs);
    double dev = 0;
    for (size_t k = 0; k < inputs.size(); ++k)
      dev = std::max(dev, (za.outputs[k] - ev.final * inputs[k] * ev.final.adjoint()).norm());
    o.detail << "(a) max state distance = " << dev << "; ";
    o.check(dev <= 1e-10, "(a) zero-noise channel");

    // (b) undriven block against exp(-(Gamma t)^2), Gamma t up to 1
    const double t = 10.0;
    const double unit = qubit_dephasing_rate(1.0, false, t) * t;
    double worst = 0;
    for (double gt : {0.1, 0.25, 0.5, 0.75, 1.0}) {
      FrequencyNoise n;
      n.a_omega = gt * gt / (unit * unit);
      PulseSpec idle;
      idle.kind = PulseKind::kCustom;
      idle.t_g = t;
      idle.omega_d = l.omega11();
      idle.samples.assign(2001, cdouble(0));
      Mat8 rho = Mat8::Zero();
      rho.block<2, 2>(6, 6).setConstant(0.5);
      const Mat8 out = cumulant_evolve(l, idle, n, rho);
      const double want = std::exp(-gt * gt);
      worst = std::max(worst, std::abs(2 * std::abs(out(6, 7)) - want) / want);
    }
    o.detail << "(b) worst relative envelope error = " << worst << "; ";
    o.check(worst <= 0.05, "(b) Gaussian envelope within 5%");

    // (c) cumulant vs Monte Carlo, base coupler noise
    const auto fc = frequency_noise(coupler_noise_preset(),
                                    {coupler_slope(h), SensitivityUnit::kRadPerNsPerNg},
                                    NoiseKind::kCoupler);
    const auto ideal = corrected_ideal(conditional_phases(blocks_of(ev.final)), kPi);
    const double fg_cum =
        averaged_gate_fidelity(entanglement_fidelity(cumulant_evolve(ev, fc, inputs).outputs, ideal));
    const auto mc = mc_entanglement_fidelity(l, single_pulse_sequence(p), fc, ideal, 1000, 2024);
    const double fg_mc = (4 * mc.mean + 1) / 5, se = 0.8 * mc.std_error;
    o.detail << "(c) F_g cumulant = " << fg_cum << ", MC = " << fg_mc << " +- " << se << "; ";
    o.check(std::abs(fg_cum - fg_mc) <= 0.01, "(c) cumulant vs MC within 1%");

    // (d) gamma scaling on the evenly spaced ladder
    FrequencyNoise weak = fc;
    weak.a_omega *= 0.2;
    auto infid = [&](double g) {
      const auto lg = linear_ladder(l.omega_ab[3], g * l.delta_omega_c, l.sign);
      FrequencyNoise n = weak;
      n.a_omega *= g * g;
      return coupler_infidelity(lg, off_resonant_cz(lg), n);
    };
    const double i1 = infid(1.0);
    o.detail << "(d) IF(1) = " << i1;
    for (double g : {0.5, 2.0}) {
      const double ig = infid(g);
      o.detail << ", IF(" << g << ") = " << ig;
      o.check(i1 < 0.1, "(d) weak-noise regime");
      o.check(std::abs(ig - i1) <= 0.1 * i1, "(d) gamma invariance within 10%");
    }
    o.detail << " ";
  });

  criterion(7, "headline off-resonant CZ fidelity", 120.0, [](Outcome& o) {
    const auto r = total_cz_fidelity(base_config(), qubit_noise_preset(), coupler_noise_preset(),
                                     Scheme::kOffResonant);
    o.detail << "F = " << r.F_total << " (IF_A = " << r.IF.qubitA << ", IF_B = " << r.IF.qubitB
             << ", IF_C = " << r.IF.coupler << "; target 0.91 +- 0.02) ";
    o.check(std::abs(r.F_total - 0.91) <= 0.02, "total fidelity");
  });

  criterion(8, "scheme crossover (qubit beta 1.1 vs 1)", 0, [](Outcome& o) {
    const double qr[] = {1, 3, 10}, cr[] = {0.01, 0.1, 1}, alphas[] = {0.2, 0.4};
    int dd_wins_11 = 0, dd_wins_1 = 0, points = 0;
    for (double a : alphas) {
      const auto h = base_config(a);
      for (double q : qr)
        for (double c : cr) {
          ++points;
          NoiseSpec nq = qubit_noise_preset(), nc = coupler_noise_preset();
          nq.A *= q;
          nc.A *= c;
          for (double beta : {1.0, 1.1}) {
            const NoiseSpec nb = rescale_beta(nq, beta);
            const double off = total_cz_fidelity(h, nb, nc, Scheme::kOffResonant).F_total;
            const double dd = total_cz_fidelity(h, nb, nc, Scheme::kDD).F_total;
            if (dd > off) ++(beta == 1.0 ? dd_wins_1 : dd_wins_11);
          }
        }
    }
    o.detail << "DD better at " << dd_wins_11 << "/" << points << " points for beta = 1.1, "
             << dd_wins_1 << "/" << points << " for beta = 1 ";
    o.check(dd_wins_11 > 0, "DD advantageous somewhere at beta = 1.1");
    o.check(dd_wins_1 == 0, "off-resonant better everywhere at beta = 1");
  });

  criterion(9, "cross-formula oracles (randomized)", 0, [](Outcome& o) {
    std::mt19937_64 rng(20260901);
    std::uniform_real_distribution<double> u(0, 1);
    double q_worst = 0, occ_worst = 0, full8_worst = 0, full8_scaled = 0;
    const double U = mev_to_ghz(4.0);
    for (int k = 0; k < 200; ++k) {
      const QubitParams p{U, 0.2 * U, (0.5 + 0.25 * u(rng)) * U, 0, (0.008 + 0.012 * u(rng)) * U};
      const double a = charge_sensitivity(p, SensitivityMethod::kAnalytic);
      const double occ = charge_sensitivity(p, SensitivityMethod::kOccupation);
      const double f8 = charge_sensitivity(p, SensitivityMethod::kFull8);
      occ_worst = std::max(occ_worst, std::abs(occ - a) / std::abs(a));
      full8_worst = std::max(full8_worst, std::abs(f8 - a) / std::abs(a));
      full8_scaled = std::max(full8_scaled, std::abs(f8 - a) / 0.104);
      q_worst = std::max(occ_worst, full8_worst);
    }
    double t_worst = 0;
    for (int k = 0; k < 200; ++k) {
      const TransmonParams tp{0.3 + 2.7 * u(rng), 0.3 + 2.7 * u(rng), 0.05 + 0.4 * u(rng), 12};
      const auto s = charge_dispersion_sensitivity(tp);
      if (!s.near_degenerate)
        t_worst = std::max(t_worst, std::abs(s.hellmann_feynman - s.finite_difference) /
                                        std::abs(s.hellmann_feynman));
    }
    int monotone = 0, trials = 100;
    double c_last = 0;
    for (int k = 0; k < trials; ++k) {
      CapNetwork n;
      const double f = 1e-15;
      n.Cchi1 = (0.5 + u(rng)) * f;
      n.Cchi2 = (0.5 + u(rng)) * f;
      n.Cchi3 = (0.5 + u(rng)) * f;
      n.Cm12 = (0.5 + u(rng)) * f;
      n.Cm23 = (0.5 + u(rng)) * f;
      const double g[4] = {0.5 + u(rng), 0.5 + u(rng), 0.5 + u(rng), 0.5 + u(rng)};
      double prev = 1e300;
      bool ok = true;
      for (double r : {10.0, 100.0, 1000.0}) {
        n.C1 = r * g[0] * f;
        n.C2 = r * g[1] * f;
        n.C3 = r * g[2] * f;
        n.Cc = r * g[3] * f;
        const auto ex = interaction_coefficients(n), fo = first_order_coefficients(n);
        double e = 0;
        for (int i = 0; i < 3; ++i) e = std::max(e, std::abs(ex[i] - fo[i]) / fo[i]);
        ok = ok && e < prev;
        prev = e;
      }
      monotone += ok;
      c_last = std::max(c_last, prev);
    }
    o.detail << "charge sensitivity worst rel. dev. = " << q_worst << " (occupation "
             << occ_worst << ", full8 " << full8_worst << ", full8 / max sensitivity "
             << full8_scaled << ")"
             << ", transmon HF vs FD worst = " << t_worst << ", capacitance monotone "
             << monotone << "/" << trials << " (worst at 1000x: " << c_last << ") ";
    o.check(q_worst <= 1e-2, "three-method agreement 1e-2");
    o.check(t_worst <= 1e-6, "HF vs FD 1e-6");
    o.check(monotone == trials, "capacitance convergence monotone");
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
