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

#include "ocscz/runs.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "ocscz/error.hpp"
#include "ocscz/ocs_transmon.hpp"
#include "ocscz/pulses.hpp"
#include "ocscz/rx_qubit.hpp"
#include "parallel.hpp"

namespace ocscz {

namespace {

constexpr const char* kVersion = "0.1.0";

class Csv {
 public:
  Csv(const std::string& path, const std::string& title, const Config& cfg) : path_(path) {
    f_.open(path);
    if (!f_) fail(ErrorCode::kIo, "cannot write '" + path + "'");
    f_ << std::setprecision(12);
    f_ << "# ocscz " << kVersion << " " << title << "\n";
    f_ << "# seed = " << cfg.simulation.seed << "\n";
  }
  template <class T>
  void meta(const std::string& key, const T& v) {
    f_ << "# " << key << " = " << v << "\n";
  }
  std::ostream& os() { return f_; }
  void close() {
    f_.close();
    if (!f_) fail(ErrorCode::kIo, "failed writing '" + path_ + "'");
  }

 private:
  std::string path_;
  std::ofstream f_;
};

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

void add(RunOutput& r, const std::string& k, double v) { r.derived.emplace_back(k, v); }

// Operating-point quantities shared by all manifests.
void common_derived(const Config& cfg, RunOutput& r) {
  const QubitParams q = qubit_params(cfg);
  add(r, "qubit.U_ghz", q.U);
  add(r, "qubit.U_C_ghz", q.U_C);
  add(r, "qubit.t_ghz", q.t_hop);
  add(r, "qubit.eps_m_ghz", q.eps_m);
  add(r, "qubit.delta_fh_ghz", delta_fh(q));
  add(r, "qubit.omega_q_ghz", qubit_frequency(q));
  add(r, "qubit.J_ghz", exchange_energy(q));
  add(r, "qubit.sensitivity", charge_sensitivity(q, SensitivityMethod::kAnalytic));
  const HybridConfig h = hybrid_config(cfg);
  TransmonParams tp = h.transmon;
  tp.n_g = h.n_g0;
  const CouplerSpectrum cs = coupler_spectrum(tp);
  add(r, "transmon.n_g0", h.n_g0);
  add(r, "transmon.omega_c_ghz", cs.omega_c);
  add(r, "transmon.n_zpf", cs.n_zpf);
  const double slope = charge_dispersion_sensitivity(tp).value;
  add(r, "transmon.slope_rad_per_ns", slope);
  add(r, "hybrid.g_ghz", coupling_strength(h, 0));
  add(r, "hybrid.delta_n_g", gate_charge_shift(h));
  const ConditionalLadder l = conditional_ladder(h);
  for (int ab = 0; ab < 4; ++ab)
    add(r, std::string("hybrid.omega_c_") + (ab < 2 ? "0" : "1") + (ab % 2 ? "1" : "0") + "_ghz",
        l.omega_ab[ab]);
  add(r, "hybrid.delta_omega_c_rad_per_ns", l.delta_omega_c);
  add(r, "hybrid.delta_omega_linear_rad_per_ns", l.delta_omega_linear);
  add(r, "hybrid.ladder_sign", l.sign);
  add(r, "hybrid.linearity_residual", l.linearity_residual);
  const NoiseSpec nq = qubit_noise(cfg), nc = coupler_noise(cfg);
  add(r, "noise.qubit.A_effective", nq.A);
  add(r, "noise.coupler.A_effective", nc.A);
  add(r, "noise.qubit.A_omega",
      frequency_noise_power(nq, {charge_sensitivity(q, SensitivityMethod::kAnalytic),
                                 SensitivityUnit::kPerEpsM},
                            NoiseKind::kQubit));
  add(r, "noise.coupler.A_omega",
      frequency_noise_power(nc, {slope, SensitivityUnit::kRadPerNsPerNg}, NoiseKind::kCoupler));
}

std::vector<Scheme> schemes_of(const Config& cfg) {
  switch (cfg.simulation.scheme) {
    case SchemeChoice::kOffResonant: return {Scheme::kOffResonant};
    case SchemeChoice::kDD: return {Scheme::kDD};
    default: return {Scheme::kOffResonant, Scheme::kDD};
  }
}

std::string with_suffix(const std::string& out, const std::string& suffix) {
  const size_t slash = out.find_last_of('/');
  const size_t dot = out.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return out + suffix;
  return out.substr(0, dot) + suffix + out.substr(dot);
}

}  // namespace

QubitMap qubit_sensitivity_map(const Config& cfg) {
  const auto& m = cfg.qubit_map;
  QubitMap r;
  r.eps_over_U = linspace(m.eps_min_over_U, m.eps_max_over_U, m.eps_points);
  r.t_over_U = linspace(m.t_min_over_U, m.t_max_over_U, m.t_points);
  const size_t n = r.eps_over_U.size() * r.t_over_U.size();
  r.sensitivity.assign(n, 0.0);
  r.J.assign(n, 0.0);
  r.allowed.assign(n, 0);
  const double U = mev_to_ghz(cfg.qubit.U_meV);
  const double U_C = cfg.qubit.U_C_over_U * U;
  detail::parallel_for(static_cast<int>(r.t_over_U.size()), cfg.simulation.workers, [&](int it) {
    for (size_t ie = 0; ie < r.eps_over_U.size(); ++ie) {
      const size_t k = it * r.eps_over_U.size() + ie;
      const QubitParams p{U, U_C, r.eps_over_U[ie] * U, 0.0, r.t_over_U[it] * U};
      if (!rx_regime_valid(p)) continue;
      r.sensitivity[k] = std::abs(charge_sensitivity(p, SensitivityMethod::kAnalytic));
      r.J[k] = exchange_energy(p);
      r.allowed[k] = delta_fh(p) > 0.0 && r.J[k] <= m.j_max_ghz;
    }
  });
  for (size_t k = 0; k < n; ++k)
    if (r.allowed[k] && r.sensitivity[k] > r.max) {
      r.max = r.sensitivity[k];
      r.eps_at = r.eps_over_U[k % r.eps_over_U.size()];
      r.t_at = r.t_over_U[k / r.eps_over_U.size()];
    }
  return r;
}

CouplerMap coupler_sensitivity_map(const Config& cfg) {
  const auto& m = cfg.coupler_map;
  CouplerMap r;
  r.E_J = linspace(m.ej_min, m.ej_max, m.ej_points);
  r.E_C = linspace(m.ec_min, m.ec_max, m.ec_points);
  const size_t n = r.E_J.size() * r.E_C.size();
  r.slope.assign(n, 0.0);
  r.n_g0.assign(n, std::numeric_limits<double>::quiet_NaN());
  r.allowed.assign(n, 0);
  detail::parallel_for(static_cast<int>(r.E_C.size()), cfg.simulation.workers, [&](int ic) {
    for (size_t ij = 0; ij < r.E_J.size(); ++ij) {
      const size_t k = ic * r.E_J.size() + ij;
      const double ej = r.E_J[ij], ec = r.E_C[ic];
      if (ej < m.min_ej_over_ec * ec * (1.0 - 1e-12)) continue;
      try {
        const BiasPoint b =
            parity_aware_bias({ej, ec, 0.0, cfg.transmon.cutoff}, cfg.transmon.parity_split_ghz);
        r.slope[k] = std::abs(b.slope);
        r.n_g0[k] = b.n_g0;
        r.allowed[k] = 1;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInfeasibleBias) throw;
      }
    }
  });
  for (size_t k = 0; k < n; ++k)
    if (r.allowed[k] && r.slope[k] > r.max) {
      r.max = r.slope[k];
      r.ej_at = r.E_J[k % r.E_J.size()];
      r.ec_at = r.E_C[k / r.E_J.size()];
    }
  return r;
}

std::vector<SweepPoint> sweep_fidelity(const Config& cfg) {
  const auto& axes = cfg.sweep.axes;
  require(!axes.empty(), ErrorCode::kConfig, "sweep-fidelity needs at least sweep.axis1");
  std::vector<std::vector<double>> values;
  size_t total = 1;
  for (const auto& a : axes) {
    values.push_back(a.values());
    total *= values.back().size();
  }
  const auto schemes = schemes_of(cfg);
  std::vector<SweepPoint> points(total * schemes.size());
  for (size_t i = 0; i < total; ++i) {
    std::vector<double> c(axes.size());
    size_t rem = i;
    for (size_t a = axes.size(); a-- > 0;) {
      c[a] = values[a][rem % values[a].size()];
      rem /= values[a].size();
    }
    for (size_t s = 0; s < schemes.size(); ++s) {
      points[i * schemes.size() + s].coords = c;
      points[i * schemes.size() + s].scheme = schemes[s];
    }
  }
  detail::parallel_for(static_cast<int>(points.size()), cfg.simulation.workers, [&](int k) {
    SweepPoint& p = points[k];
    Config local = cfg;
    local.simulation.workers = 1;
    try {
      for (size_t a = 0; a < axes.size(); ++a) {
        std::ostringstream v;
        v << std::setprecision(17) << p.coords[a];
        set_config_value(local, axes[a].name, v.str());
      }
      validate(local);
      p.report = total_cz_fidelity(hybrid_config(local), qubit_noise(local), coupler_noise(local),
                                   p.scheme, fidelity_options(local));
    } catch (const Error& e) {
      p.ok = false;
      p.status = error_code_name(e.code());
    }
  });
  return points;
}

RunOutput run_rx_spectrum(const Config& cfg, const std::string& out) {
  RunOutput r;
  const QubitParams base = qubit_params(cfg);
  const double U = base.U;
  Csv csv(out, "rx-spectrum", cfg);
  csv.meta("U_ghz", U);
  csv.meta("U_C_ghz", base.U_C);
  csv.meta("t_ghz", base.t_hop);
  auto& os = csv.os();
  os << "eps_m_over_U,eps_m_ghz,delta_fh_ghz,E0,E1,E2,E3,omega_q_ghz,J_ghz,sensitivity,"
        "n1_0,n2_0,n3_0,n1_1,n2_1,n3_1\n";
  for (double x : linspace(cfg.rx_spectrum.eps_min_over_U, cfg.rx_spectrum.eps_max_over_U,
                           cfg.rx_spectrum.points)) {
    QubitParams p = base;
    p.eps_m = x * U;
    if (!rx_regime_valid(p)) continue;
    const RxSpectrum s = rx_eigensystem(p);
    const auto o0 = dot_occupations(p, 0), o1 = dot_occupations(p, 1);
    os << x << ',' << p.eps_m << ',' << delta_fh(p);
    for (double e : s.energies) os << ',' << e;
    os << ',' << qubit_frequency(p) << ',' << exchange_energy(p) << ','
       << charge_sensitivity(p, SensitivityMethod::kAnalytic);
    for (double v : o0) os << ',' << v;
    for (double v : o1) os << ',' << v;
    os << '\n';
  }
  csv.close();
  r.files.push_back(out);
  common_derived(cfg, r);
  return r;
}

RunOutput run_transmon_dispersion(const Config& cfg, const std::string& out) {
  RunOutput r;
  const auto& d = cfg.transmon_dispersion;
  Csv csv(out, "transmon-dispersion", cfg);
  csv.meta("E_J_ghz", cfg.transmon.E_J);
  csv.meta("E_C_ghz", cfg.transmon.E_C);
  csv.meta("cutoff", cfg.transmon.cutoff);
  auto& os = csv.os();
  os << "n_g,omega_c_ghz,omega_c_shifted_ghz";
  for (int k = 0; k < d.levels; ++k) os << ",E" << k;
  os << '\n';
  for (double ng : linspace(d.n_g_min, d.n_g_max, d.points)) {
    TransmonParams p = transmon_params(cfg);
    p.n_g = ng;
    const CouplerSpectrum s = coupler_spectrum(p, d.levels);
    p.n_g = ng + 0.5;
    os << ng << ',' << s.omega_c << ',' << transition_frequency(p);
    for (double e : s.levels) os << ',' << e;
    os << '\n';
  }
  csv.close();
  r.files.push_back(out);
  common_derived(cfg, r);
  return r;
}

RunOutput run_sensitivity_map(const Config& cfg, const std::string& out, MapKind kind) {
  RunOutput r;
  if (kind != MapKind::kCoupler) {
    const std::string path = kind == MapKind::kBoth ? with_suffix(out, "_qubit") : out;
    const QubitMap m = qubit_sensitivity_map(cfg);
    Csv csv(path, "sensitivity-map qubit", cfg);
    csv.meta("j_max_ghz", cfg.qubit_map.j_max_ghz);
    csv.meta("max_sensitivity", m.max);
    csv.meta("max_at_eps_m_over_U", m.eps_at);
    csv.meta("max_at_t_over_U", m.t_at);
    auto& os = csv.os();
    os << "eps_m_over_U,t_over_U,sensitivity,J_ghz,allowed\n";
    const size_t ne = m.eps_over_U.size();
    for (size_t k = 0; k < m.sensitivity.size(); ++k)
      os << m.eps_over_U[k % ne] << ',' << m.t_over_U[k / ne] << ',' << m.sensitivity[k] << ','
         << m.J[k] << ',' << int(m.allowed[k]) << '\n';
    csv.close();
    r.files.push_back(path);
    add(r, "map.qubit.max_sensitivity", m.max);
    add(r, "map.qubit.max_eps_m_over_U", m.eps_at);
    add(r, "map.qubit.max_t_over_U", m.t_at);
  }
  if (kind != MapKind::kQubit) {
    const std::string path = kind == MapKind::kBoth ? with_suffix(out, "_coupler") : out;
    const CouplerMap m = coupler_sensitivity_map(cfg);
    Csv csv(path, "sensitivity-map coupler", cfg);
    csv.meta("parity_split_ghz", cfg.transmon.parity_split_ghz);
    csv.meta("min_ej_over_ec", cfg.coupler_map.min_ej_over_ec);
    csv.meta("max_slope_rad_per_ns", m.max);
    csv.meta("max_at_E_J", m.ej_at);
    csv.meta("max_at_E_C", m.ec_at);
    auto& os = csv.os();
    os << "E_J_ghz,E_C_ghz,n_g0,slope_rad_per_ns,allowed\n";
    const size_t nj = m.E_J.size();
    for (size_t k = 0; k < m.slope.size(); ++k)
      os << m.E_J[k % nj] << ',' << m.E_C[k / nj] << ',' << m.n_g0[k] << ',' << m.slope[k] << ','
         << int(m.allowed[k]) << '\n';
    csv.close();
    r.files.push_back(path);
    add(r, "map.coupler.max_slope_rad_per_ns", m.max);
    add(r, "map.coupler.max_E_J", m.ej_at);
    add(r, "map.coupler.max_E_C", m.ec_at);
  }
  common_derived(cfg, r);
  return r;
}

RunOutput run_synth_pulse(const Config& cfg, const std::string& out) {
  RunOutput r;
  const HybridConfig h = hybrid_config(cfg);
  const ConditionalLadder ladder = conditional_ladder(h);
  const auto schemes = schemes_of(cfg);
  for (Scheme s : schemes) {
    const std::string tag = s == Scheme::kDD ? "dd" : "offres";
    const std::string path = schemes.size() > 1 ? with_suffix(out, "_" + tag) : out;
    PulseSpec p;
    SynthesisReport rep;
    if (s == Scheme::kOffResonant) {
      p = off_resonant_cz(ladder, cfg.simulation.samples_per_period);
    } else {
      SynthesisOptions so = synthesis_options(cfg);
      so.dd_composite = true;
      p = synthesize_cphase(ladder, ladder.sign * kPi / 2.0, 0.0, so, &rep);
    }
    {
      std::ofstream f(path);
      if (!f) fail(ErrorCode::kIo, "cannot write '" + path + "'");
      f << "# ocscz " << kVersion << " synth-pulse " << tag << "\n";
      if (s == Scheme::kDD)
        f << std::setprecision(12) << "# magnus_residual_max = " << rep.residuals.max_abs()
          << "\n# edge_ratio = " << rep.edge_ratio << "\n";
      write_pulse_table(f, p);
      if (!f) fail(ErrorCode::kIo, "failed writing '" + path + "'");
    }
    r.files.push_back(path);

    const BlockUnitary bu = evolve_unitary(ladder, p, true);
    const ConditionalPhases ph = conditional_phases(bu, 1.0);
    const std::string bpath = with_suffix(path, "_bloch");
    Csv csv(bpath, "synth-pulse bloch " + tag, cfg);
    csv.meta("theta", ph.theta);
    auto& os = csv.os();
    os << "time_ns,block,sx,sy,sz,p_excited\n";
    static const char* names[4] = {"00", "01", "10", "11"};
    for (int ab = 0; ab < 4; ++ab) {
      const auto traj = bloch_trajectory(bu, ab);
      for (size_t k = 0; k < traj.size(); ++k) {
        if (k % cfg.synth_pulse.bloch_stride != 0 && k + 1 != traj.size()) continue;
        const auto& b = traj[k];
        os << b.t << ',' << names[ab] << ',' << b.sx << ',' << b.sy << ',' << b.sz << ','
           << 0.5 * (1.0 - b.sz) << '\n';
      }
    }
    csv.close();
    r.files.push_back(bpath);
    add(r, "pulse." + tag + ".t_g_ns", p.t_g);
    add(r, "pulse." + tag + ".omega_d_rad_per_ns", p.omega_d);
    add(r, "pulse." + tag + ".Theta", p.Theta);
    add(r, "pulse." + tag + ".theta", ph.theta);
    for (int ab = 0; ab < 4; ++ab)
      add(r, "pulse." + tag + ".leakage_" + names[ab], ph.leakage[ab]);
  }
  common_derived(cfg, r);
  return r;
}

RunOutput run_simulate_gate(const Config& cfg, const std::string& out) {
  RunOutput r;
  const HybridConfig h = hybrid_config(cfg);
  std::ofstream f(out);
  if (!f) fail(ErrorCode::kIo, "cannot write '" + out + "'");
  f << "# ocscz " << kVersion << " simulate-gate\n";
  bool first = true;
  for (Scheme s : schemes_of(cfg)) {
    const GateReport rep =
        total_cz_fidelity(h, qubit_noise(cfg), coupler_noise(cfg), s, fidelity_options(cfg));
    if (!first) f << '\n';
    first = false;
    write_key_value(f, rep);
    if (rep.positivity_warning)
      r.warnings.push_back(std::string(scheme_name(s)) +
                           ": cumulant density matrix has eigenvalues below -1e-3");
    if (!rep.qubit_perturbative)
      r.warnings.push_back(std::string(scheme_name(s)) +
                           ": qubit dephasing outside the perturbative regime");
    add(r, std::string("report.") + scheme_name(s) + ".F_total", rep.F_total);
  }
  if (!f) fail(ErrorCode::kIo, "failed writing '" + out + "'");
  r.files.push_back(out);
  common_derived(cfg, r);
  return r;
}

RunOutput run_sweep_fidelity(const Config& cfg, const std::string& out) {
  RunOutput r;
  const auto points = sweep_fidelity(cfg);
  Csv csv(out, "sweep-fidelity", cfg);
  for (size_t a = 0; a < cfg.sweep.axes.size(); ++a)
    csv.meta("axis" + std::to_string(a + 1), format_axis(cfg.sweep.axes[a]));
  auto& os = csv.os();
  for (const auto& a : cfg.sweep.axes) os << a.name << ',';
  os << "status," << csv_header() << '\n';
  int failed = 0;
  for (const auto& p : points) {
    for (double c : p.coords) os << c << ',';
    if (p.ok) {
      os << "ok," << csv_row(p.report) << '\n';
    } else {
      ++failed;
      os << p.status << ',' << scheme_name(p.scheme) << '\n';
    }
  }
  csv.close();
  if (failed) r.warnings.push_back(std::to_string(failed) + " sweep point(s) failed");
  r.files.push_back(out);
  add(r, "sweep.points", static_cast<double>(points.size()));
  add(r, "sweep.failed", failed);
  common_derived(cfg, r);
  return r;
}

std::string manifest_path(const std::string& out) { return out + ".manifest.json"; }

void write_manifest(const std::string& out, const std::string& subcommand, const Config& cfg,
                    const RunOutput& result) {
  nlohmann::ordered_json j;
  j["tool"] = "ocscz";
  j["version"] = kVersion;
  j["subcommand"] = subcommand;
  j["seed"] = cfg.simulation.seed;
  auto& c = j["config"];
  for (const auto& [k, v] : config_entries(cfg)) c[k] = v;
  auto& d = j["derived"];
  for (const auto& [k, v] : result.derived) d[k] = v;
  j["outputs"] = result.files;
  j["warnings"] = result.warnings;
  const std::string path = manifest_path(out);
  std::ofstream f(path);
  if (!f) fail(ErrorCode::kIo, "cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

}  // namespace ocscz
