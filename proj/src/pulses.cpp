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

#include "ocscz/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gsl/gsl_multimin.h>

#include "ocscz/error.hpp"
#include "ocscz/propagator.hpp"

namespace ocscz {

const char* pulse_kind_name(PulseKind kind) {
  switch (kind) {
    case PulseKind::kOffResonantCZ: return "OffResonantCZ";
    case PulseKind::kGaMAM: return "GaMAM";
    case PulseKind::kCustom: return "Custom";
  }
  return "Custom";
}

double gamam_envelope(const GamamParams& p, double t_g, double t) {
  const double slack = 1e-12 * t_g;
  if (!(t >= -slack && t <= 0.5 * t_g + slack)) {
    std::ostringstream msg;
    msg << "GaMAM stage-one time " << t << " outside [0, " << 0.5 * t_g << "]";
    fail(ErrorCode::kParameterDomain, msg.str());
  }
  const double x = t - 0.25 * t_g;
  return p.amp * std::exp(-x * x / (2.0 * p.sigma * p.sigma)) *
         (1.0 - std::cos(p.omega1 * x)) * (1.0 - std::cos(p.omega2 * x));
}

cdouble PulseSpec::envelope(double t) const {
  switch (kind) {
    case PulseKind::kOffResonantCZ:
      return {amplitude, 0.0};
    case PulseKind::kGaMAM: {
      const double half = 0.5 * t_g;
      if (t <= half) return {gamam_envelope(gamam, t_g, std::max(t, 0.0)), 0.0};
      return std::polar(1.0, Theta) * gamam_envelope(gamam, t_g, std::min(t - half, half));
    }
    case PulseKind::kCustom: {
      require(samples.size() >= 2, ErrorCode::kParameterDomain, "custom pulse has no samples");
      const double x = std::clamp(t / dt(), 0.0, static_cast<double>(steps()));
      const int k = std::min(static_cast<int>(x), steps() - 1);
      const double w = x - k;
      return (1.0 - w) * samples[k] + w * samples[k + 1];
    }
  }
  return {};
}

double PulseSpec::peak() const {
  double m = 0.0;
  for (const auto& s : samples) m = std::max(m, std::abs(s));
  return m;
}

void resample(PulseSpec& pulse, int steps) {
  require(steps >= 1, ErrorCode::kParameterDomain, "need at least one step");
  if (pulse.kind == PulseKind::kCustom) {
    PulseSpec src = pulse;
    pulse.samples.resize(steps + 1);
    for (int k = 0; k <= steps; ++k) pulse.samples[k] = src.envelope(k * pulse.t_g / steps);
    return;
  }
  pulse.samples.resize(steps + 1);
  if (pulse.kind == PulseKind::kGaMAM) {
    require(steps % 2 == 0, ErrorCode::kParameterDomain, "GaMAM grid needs an even step count");
    // Stage two is copied sample-wise so the rotation identity is exact.
    const int half = steps / 2;
    for (int k = 0; k <= half; ++k)
      pulse.samples[k] = gamam_envelope(pulse.gamam, pulse.t_g, k * pulse.t_g / steps);
    const cdouble rot = std::polar(1.0, pulse.Theta);
    for (int k = half + 1; k <= steps; ++k) pulse.samples[k] = rot * pulse.samples[k - half];
    return;
  }
  for (int k = 0; k <= steps; ++k) pulse.samples[k] = pulse.envelope(k * pulse.t_g / steps);
}

int required_steps(const ConditionalLadder& ladder, const PulseSpec& pulse,
                   double samples_per_period) {
  require(samples_per_period >= 200.0, ErrorCode::kParameterDomain,
          "sampling below 200 points per period is not allowed");
  double wmax = ladder.delta_omega_c;
  const double delta = ladder.omega11() - pulse.omega_d;
  for (int ab = 0; ab < 4; ++ab) wmax = std::max(wmax, std::abs(ladder.block_detuning(ab, delta)));
  // Peak of the envelope from a coarse probe of the analytic shape.
  for (int k = 0; k <= 512; ++k) wmax = std::max(wmax, std::abs(pulse.envelope(k * pulse.t_g / 512)));
  int n = static_cast<int>(std::ceil(pulse.t_g * wmax / kTwoPi * samples_per_period));
  n = std::max(n, 200);
  if (n % 2) ++n;
  return n;
}

PulseSpec off_resonant_cz(const ConditionalLadder& ladder, double samples_per_period) {
  const double dw = ladder.delta_omega_c;
  if (!(dw > 0.0)) fail(ErrorCode::kDegenerateLadder, "conditional ladder has zero spacing");
  PulseSpec p;
  p.kind = PulseKind::kOffResonantCZ;
  p.omega_d = ladder.omega11() + ladder.sign * 0.5 * dw;
  p.amplitude = std::sqrt(5.0 / 12.0) * dw;
  p.t_g = kPi * std::sqrt(6.0) / dw;
  resample(p, required_steps(ladder, p, samples_per_period));
  return p;
}

double MagnusResiduals::max_abs() const {
  return std::max({std::abs(r0), std::abs(r1), std::abs(r2)});
}

namespace {

using boost::math::quadrature::gauss_kronrod;

double integrate(const auto& f, double a, double b) {
  double err = 0.0;
  const double v = gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14, &err);
  if (!(err < 1e-10) || !std::isfinite(v))
    fail(ErrorCode::kNumerical, "Magnus residual quadrature did not converge");
  return v;
}

}  // namespace

MagnusResiduals magnus_residuals(const GamamParams& p, double t_g, double dw) {
  const double half = 0.5 * t_g;
  auto env = [&](double t) { return gamam_envelope(p, t_g, t); };
  MagnusResiduals r;
  r.r0 = integrate(env, 0.0, half) - kPi;
  for (int k = 1; k <= 2; ++k) {
    const double re = integrate([&](double t) { return env(t) * std::cos(k * dw * t); }, 0.0, half);
    const double im = integrate([&](double t) { return -env(t) * std::sin(k * dw * t); }, 0.0, half);
    (k == 1 ? r.r1 : r.r2) = cdouble(re, im);
  }
  return r;
}

namespace {

// Everything below works in units dw = 1.
constexpr double kEdgeTarget = 5e-4;

double edge_ratio(const GamamParams& p, double t_g) {
  double peak = 0.0;
  const int n = 4000;
  for (int k = 0; k <= n; ++k)
    peak = std::max(peak, std::abs(gamam_envelope(p, t_g, 0.5 * t_g * k / n)));
  if (!(peak > 0.0)) return std::numeric_limits<double>::infinity();
  return std::abs(gamam_envelope(p, t_g, 0.0)) / peak;
}

// Symmetric about t_g/4, so each r_k is a phase times a real cosine integral
// about the centre; fixed Gauss-Legendre on a fine panel set is ample here.
struct FastResiduals {
  double t_g;
  std::vector<double> x, w;
  explicit FastResiduals(double tg) : t_g(tg) {
    static const double gx[5] = {0.0, 0.5384693101056831, 0.9061798459386640,
                                 -0.5384693101056831, -0.9061798459386640};
    static const double gw[5] = {0.5688888888888889, 0.4786286704993665, 0.2369268850561891,
                                 0.4786286704993665, 0.2369268850561891};
    const int panels = 200;
    const double a = -0.25 * t_g, h = 0.5 * t_g / panels;
    for (int i = 0; i < panels; ++i)
      for (int j = 0; j < 5; ++j) {
        x.push_back(a + h * (i + 0.5) + 0.5 * h * gx[j]);
        w.push_back(0.5 * h * gw[j]);
      }
  }
  std::array<double, 3> eval(const GamamParams& p) const {
    std::array<double, 3> r{-kPi, 0.0, 0.0};
    for (size_t i = 0; i < x.size(); ++i) {
      const double u = x[i];
      const double e = p.amp * std::exp(-u * u / (2.0 * p.sigma * p.sigma)) *
                       (1.0 - std::cos(p.omega1 * u)) * (1.0 - std::cos(p.omega2 * u)) * w[i];
      r[0] += e;
      r[1] += e * std::cos(u);
      r[2] += e * std::cos(2.0 * u);
    }
    return r;
  }
};

struct Objective {
  const FastResiduals* fr;
  double t_g;
};

GamamParams unpack(const gsl_vector* v) {
  return {gsl_vector_get(v, 0), std::abs(gsl_vector_get(v, 1)), gsl_vector_get(v, 2),
          gsl_vector_get(v, 3)};
}

double objective(const gsl_vector* v, void* data) {
  const auto* o = static_cast<const Objective*>(data);
  const GamamParams p = unpack(v);
  const auto r = o->fr->eval(p);
  double f = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
  const double edge = std::abs(gamam_envelope(p, o->t_g, 0.0));
  // Cheap peak proxy: the centre lobes sit within one modulation period.
  double peak = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double t = 0.25 * o->t_g * k / 200.0;
    peak = std::max(peak, std::abs(gamam_envelope(p, o->t_g, t)));
  }
  if (peak > 0.0) {
    const double excess = std::max(0.0, edge / peak - kEdgeTarget);
    f += excess * excess;
  }
  return f;
}

GamamParams nelder_mead(const Objective& obj, GamamParams start) {
  const gsl_multimin_fminimizer_type* type = gsl_multimin_fminimizer_nmsimplex2;
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(type, 4);
  gsl_vector* x = gsl_vector_alloc(4);
  gsl_vector* step = gsl_vector_alloc(4);
  const double init[4] = {start.amp, start.sigma, start.omega1, start.omega2};
  for (int i = 0; i < 4; ++i) {
    gsl_vector_set(x, i, init[i]);
    gsl_vector_set(step, i, 0.05 * std::abs(init[i]));
  }
  gsl_multimin_function f{&objective, 4, const_cast<Objective*>(&obj)};
  gsl_multimin_fminimizer_set(s, &f, x, step);
  for (int it = 0; it < 20000; ++it) {
    if (gsl_multimin_fminimizer_iterate(s)) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-13) == GSL_SUCCESS) break;
  }
  const GamamParams best = unpack(s->x);
  gsl_vector_free(step);
  gsl_vector_free(x);
  gsl_multimin_fminimizer_free(s);
  return best;
}

// Newton polish of (amp, omega1, omega2) at fixed sigma: three equations,
// three unknowns, finite-difference Jacobian.
GamamParams polish(const FastResiduals& fr, GamamParams p) {
  for (int it = 0; it < 30; ++it) {
    const auto r = fr.eval(p);
    const Eigen::Vector3d rv(r[0], r[1], r[2]);
    if (rv.norm() < 1e-14) break;
    Eigen::Matrix3d jac;
    for (int j = 0; j < 3; ++j) {
      GamamParams q = p;
      double* field = j == 0 ? &q.amp : (j == 1 ? &q.omega1 : &q.omega2);
      const double h = 1e-7 * std::max(1.0, std::abs(*field));
      *field += h;
      const auto rq = fr.eval(q);
      jac.col(j) = (Eigen::Vector3d(rq[0], rq[1], rq[2]) - rv) / h;
    }
    const Eigen::Vector3d dx = jac.fullPivLu().solve(-rv);
    if (!dx.allFinite()) break;
    p.amp += dx(0);
    p.omega1 += dx(1);
    p.omega2 += dx(2);
  }
  return p;
}

GamamParams scaled(GamamParams p, double dw) {
  return {p.amp * dw, p.sigma / dw, p.omega1 * dw, p.omega2 * dw};
}

}  // namespace

SynthesisReport optimize_gamam(double dw, double t_g, const SynthesisOptions& opt) {
  if (!(dw > 0.0)) fail(ErrorCode::kDegenerateLadder, "conditional ladder has zero spacing");
  require(t_g > 0.0, ErrorCode::kParameterDomain, "gate time must be positive");
  const double tg = t_g * dw;  // dimensionless
  const FastResiduals fr(tg);
  const Objective obj{&fr, tg};

  SynthesisReport best;
  double best_score = std::numeric_limits<double>::infinity();
  std::array<double, 3> best_res{1, 1, 1};
  for (int r = 0; r < std::max(1, opt.restarts); ++r) {
    std::mt19937_64 rng(opt.seed + static_cast<uint64_t>(r));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    GamamParams seed{1.0, tg / 10.0, 2.9, 3.1};
    if (r > 0) {
      seed.sigma *= 1.0 + 0.5 * std::abs(u(rng)) + 0.5 * u(rng);
      seed.omega1 *= 1.0 + 0.05 * u(rng);
      seed.omega2 *= 1.0 + 0.05 * u(rng);
    }
    GamamParams unit = seed;
    unit.amp = 1.0;
    seed.amp = kPi / (fr.eval(unit)[0] + kPi);  // r0 = 0 normalization
    GamamParams p = polish(fr, nelder_mead(obj, seed));
    const auto res = fr.eval(p);
    const double rmax = std::max({std::abs(res[0]), std::abs(res[1]), std::abs(res[2])});
    const double edge = edge_ratio(p, tg);
    if (!(p.amp > 0.0) || !std::isfinite(rmax)) continue;
    const bool ok = rmax < 0.1 * opt.residual_tol && edge < 1e-3;
    if (ok) ++best.restarts_converged;
    // Converged solutions ranked by edge; otherwise by residual.
    const double score = ok ? edge : 1.0 + rmax;
    if (score < best_score) {
      best_score = score;
      best.params = p;
      best.edge_ratio = edge;
      best_res = res;
    }
  }
  if (!(best_score < 1.0)) {
    throw SynthesisError("GaMAM optimizer did not reach the residual tolerance",
                         best_res);
  }
  best.params = scaled(best.params, dw);
  best.residuals = magnus_residuals(best.params, t_g, dw);
  if (!(best.residuals.max_abs() < opt.residual_tol)) {
    throw SynthesisError(
        "GaMAM residuals above tolerance after adaptive re-evaluation",
        {best.residuals.r0, std::abs(best.residuals.r1), std::abs(best.residuals.r2)});
  }
  return best;
}

PulseSpec synthesize_cphase(const ConditionalLadder& ladder, double theta_target,
                            double t_g, const SynthesisOptions& opt,
                            SynthesisReport* report) {
  const double dw = ladder.delta_omega_c;
  if (!(dw > 0.0)) fail(ErrorCode::kDegenerateLadder, "conditional ladder has zero spacing");
  if (t_g <= 0.0) t_g = 16.0 / dw;
  const SynthesisReport rep = optimize_gamam(dw, t_g, opt);
  if (report) *report = rep;

  PulseSpec p;
  p.kind = PulseKind::kGaMAM;
  p.omega_d = ladder.omega11();
  p.t_g = t_g;
  p.gamam = rep.params;
  const int steps = required_steps(ladder, p, opt.samples_per_period);

  auto run = [&](double theta_rot) {
    PulseSpec q = p;
    q.Theta = theta_rot;
    resample(q, steps);
    auto b = evolve_unitary(ladder, q, false).blocks;
    if (opt.dd_composite) {
      // XX swaps block ab with 3 - ab between the two segments.
      const auto one = b;
      for (int ab = 0; ab < 4; ++ab) b[ab] = one[3 - ab] * one[ab];
    }
    return conditional_phases(b, 1.0);
  };
  const double goal = opt.dd_composite ? 2.0 * theta_target : theta_target;
  auto mismatch = [&](double theta_rot) { return wrap_phase(run(theta_rot).theta - goal); };
  // Several rotations can hit the target phase; keep the one that leaves the
  // least population in the coupler.
  const int scan = 24;
  double best_theta = 0.0, best_f = std::numeric_limits<double>::infinity();
  double best_leak = std::numeric_limits<double>::infinity();
  double prev_x = -kPi, prev_f = mismatch(prev_x);
  for (int i = 1; i <= scan; ++i) {
    const double x = -kPi + kTwoPi * i / scan;
    const double f = mismatch(x);
    if ((prev_f <= 0.0) != (f <= 0.0) && std::abs(prev_f - f) < kPi) {
      double lo = prev_x, hi = x, flo = prev_f;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = mismatch(mid);
        if ((fm <= 0.0) == (flo <= 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      const double root = 0.5 * (lo + hi);
      const auto ph = run(root);
      const double fr = std::abs(wrap_phase(ph.theta - goal));
      const double leak = *std::max_element(ph.leakage.begin(), ph.leakage.end());
      const bool ok = fr < opt.theta_tol, best_ok = best_f < opt.theta_tol;
      if ((ok && (!best_ok || leak < best_leak)) || (!ok && !best_ok && fr < best_f)) {
        best_f = fr;
        best_leak = leak;
        best_theta = root;
      }
    }
    prev_x = x;
    prev_f = f;
  }
  if (!(best_f < opt.theta_tol)) {
    std::ostringstream msg;
    msg << "no stage-two rotation reaches theta = " << theta_target;
    fail(ErrorCode::kPhaseInfeasible, msg.str());
  }
  p.Theta = wrap_phase(best_theta);
  resample(p, steps);
  return p;
}

Mat4 dd_cz_compose(const Mat4& u) {
  if (!((u.adjoint() * u - Mat4::Identity()).norm() < 1e-8))
    fail(ErrorCode::kParameterDomain, "sqrt(CZ) input is not unitary");
  const Mat4 x = pauli_xx();
  return x * u * x * u;
}

void write_pulse_table(std::ostream& os, const PulseSpec& p) {
  const auto old = os.precision(12);
  os << "# kind = " << pulse_kind_name(p.kind) << "\n"
     << "# omega_d = " << p.omega_d << "\n"
     << "# t_g = " << p.t_g << "\n"
     << "# Theta = " << p.Theta << "\n";
  if (p.kind == PulseKind::kGaMAM) {
    os << "# amp = " << p.gamam.amp << "\n# sigma = " << p.gamam.sigma
       << "\n# omega1 = " << p.gamam.omega1 << "\n# omega2 = " << p.gamam.omega2 << "\n";
  }
  os << "time_ns,omega_x,omega_y\n";
  for (int k = 0; k <= p.steps(); ++k)
    os << k * p.dt() << ',' << p.samples[k].real() << ',' << p.samples[k].imag() << '\n';
  os.precision(old);
}

}  // namespace ocscz
