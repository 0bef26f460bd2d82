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

#include "ocscz/ocscz.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ocscz/config.hpp"
#include "ocscz/error.hpp"
#include "ocscz/fidelity.hpp"
#include "ocscz/pulses.hpp"
#include "ocscz/runs.hpp"

struct ocscz_config {
  ocscz::Config cfg;
};

struct ocscz_report {
  ocscz::GateReport report;
};

struct ocscz_pulse {
  ocscz::PulseSpec pulse;
};

struct ocscz_run_result {
  ocscz::RunOutput out;
};

namespace {

thread_local std::string g_last_error;

ocscz_status set_error(ocscz_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs fn, translating exceptions into status codes.
template <class F>
ocscz_status guarded(F&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const ocscz::Error& e) {
    return set_error(static_cast<ocscz_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(OCSCZ_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(OCSCZ_E_INTERNAL, e.what());
  }
}

ocscz_status copy_out(const std::string& s, char* buf, size_t len, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf) return needed ? OCSCZ_OK : set_error(OCSCZ_E_INVALID_ARGUMENT, "null buffer");
  if (len < s.size() + 1) return set_error(OCSCZ_E_BUFFER_TOO_SMALL, "buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return OCSCZ_OK;
}

ocscz::Scheme to_scheme(ocscz_scheme s) {
  if (s == OCSCZ_SCHEME_DD) return ocscz::Scheme::kDD;
  if (s == OCSCZ_SCHEME_OFFRES) return ocscz::Scheme::kOffResonant;
  ocscz::fail(ocscz::ErrorCode::kParameterDomain, "unknown scheme");
}

}  // namespace

extern "C" {

const char* ocscz_version(void) { return "0.1.0"; }

const char* ocscz_last_error(void) { return g_last_error.c_str(); }

const char* ocscz_status_name(ocscz_status status) {
  switch (status) {
    case OCSCZ_OK: return "ok";
    case OCSCZ_E_INVALID_ARGUMENT: return "invalid-argument";
    case OCSCZ_E_BUFFER_TOO_SMALL: return "buffer-too-small";
    case OCSCZ_E_INTERNAL: return "internal";
    default:
      if (status >= OCSCZ_E_PARAMETER_DOMAIN && status <= OCSCZ_E_IO)
        return ocscz::error_code_name(static_cast<ocscz::ErrorCode>(status));
      return "unknown";
  }
}

ocscz_status ocscz_config_new(ocscz_config** out) {
  if (!out) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null output handle");
  return guarded([&] {
    *out = new ocscz_config{};
    return OCSCZ_OK;
  });
}

ocscz_status ocscz_config_load(const char* path, ocscz_config** out) {
  if (!path || !out) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ocscz_config{ocscz::load_config(path)};
    return OCSCZ_OK;
  });
}

ocscz_status ocscz_config_parse(const char* text, ocscz_config** out) {
  if (!text || !out) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ocscz_config{ocscz::parse_config(text)};
    return OCSCZ_OK;
  });
}

ocscz_status ocscz_config_set(ocscz_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ocscz::Config next = cfg->cfg;
    ocscz::set_config_value(next, key, value);
    try {
      ocscz::validate(next);
    } catch (const ocscz::Error& e) {
      ocscz::fail(ocscz::ErrorCode::kConfig, e.what());
    }
    cfg->cfg = next;
    return OCSCZ_OK;
  });
}

ocscz_status ocscz_config_get(const ocscz_config* cfg, const char* key, char* buf, size_t len,
                              size_t* needed) {
  if (!cfg || !key) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    for (const auto& [k, v] : ocscz::config_entries(cfg->cfg))
      if (k == key) return copy_out(v, buf, len, needed);
    return set_error(OCSCZ_E_CONFIG, std::string("unknown key '") + key + "'");
  });
}

ocscz_status ocscz_config_to_text(const ocscz_config* cfg, char* buf, size_t len,
                                  size_t* needed) {
  if (!cfg) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null config");
  return guarded([&] { return copy_out(ocscz::to_text(cfg->cfg), buf, len, needed); });
}

void ocscz_config_free(ocscz_config* cfg) { delete cfg; }

ocscz_status ocscz_run(const ocscz_config* cfg, const char* subcommand, const char* out_path,
                       const char* option, ocscz_run_result** result) {
  if (!cfg || !subcommand || !out_path)
    return set_error(OCSCZ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string cmd = subcommand, out = out_path;
    const ocscz::Config& c = cfg->cfg;
    ocscz::RunOutput r;
    if (cmd == "rx-spectrum") {
      r = ocscz::run_rx_spectrum(c, out);
    } else if (cmd == "transmon-dispersion") {
      r = ocscz::run_transmon_dispersion(c, out);
    } else if (cmd == "sensitivity-map") {
      const std::string opt = option ? option : "both";
      ocscz::MapKind kind;
      if (opt == "qubit") kind = ocscz::MapKind::kQubit;
      else if (opt == "coupler") kind = ocscz::MapKind::kCoupler;
      else if (opt == "both") kind = ocscz::MapKind::kBoth;
      else return set_error(OCSCZ_E_INVALID_ARGUMENT, "map must be qubit, coupler or both");
      r = ocscz::run_sensitivity_map(c, out, kind);
    } else if (cmd == "synth-pulse") {
      r = ocscz::run_synth_pulse(c, out);
    } else if (cmd == "simulate-gate") {
      r = ocscz::run_simulate_gate(c, out);
    } else if (cmd == "sweep-fidelity") {
      r = ocscz::run_sweep_fidelity(c, out);
    } else {
      return set_error(OCSCZ_E_INVALID_ARGUMENT, "unknown subcommand '" + cmd + "'");
    }
    ocscz::write_manifest(out, cmd, c, r);
    r.files.push_back(ocscz::manifest_path(out));
    if (result) *result = new ocscz_run_result{std::move(r)};
    return OCSCZ_OK;
  });
}

size_t ocscz_run_result_file_count(const ocscz_run_result* r) { return r ? r->out.files.size() : 0; }

const char* ocscz_run_result_file(const ocscz_run_result* r, size_t i) {
  return r && i < r->out.files.size() ? r->out.files[i].c_str() : nullptr;
}

size_t ocscz_run_result_warning_count(const ocscz_run_result* r) {
  return r ? r->out.warnings.size() : 0;
}

const char* ocscz_run_result_warning(const ocscz_run_result* r, size_t i) {
  return r && i < r->out.warnings.size() ? r->out.warnings[i].c_str() : nullptr;
}

void ocscz_run_result_free(ocscz_run_result* r) { delete r; }

ocscz_status ocscz_simulate_gate(const ocscz_config* cfg, ocscz_scheme scheme,
                                 ocscz_report** out) {
  if (!cfg || !out) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const ocscz::Config& c = cfg->cfg;
    auto rep = ocscz::total_cz_fidelity(ocscz::hybrid_config(c), ocscz::qubit_noise(c),
                                        ocscz::coupler_noise(c), to_scheme(scheme),
                                        ocscz::fidelity_options(c));
    *out = new ocscz_report{rep};
    return OCSCZ_OK;
  });
}

ocscz_status ocscz_report_get(const ocscz_report* r, const char* field, double* value) {
  if (!r || !field || !value) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null argument");
  const auto& g = r->report;
  const std::string f = field;
  if (f == "F_total") *value = g.F_total;
  else if (f == "F_e") *value = g.F_e;
  else if (f == "F_g") *value = g.F_g;
  else if (f == "F_e_coherent") *value = g.F_e_coherent;
  else if (f == "theta") *value = g.theta;
  else if (f == "IF_qubitA") *value = g.IF.qubitA;
  else if (f == "IF_qubitB") *value = g.IF.qubitB;
  else if (f == "IF_coupler") *value = g.IF.coupler;
  else if (f == "t_g_ns") *value = g.t_g;
  else if (f == "delta_omega_c") *value = g.delta_omega_c;
  else if (f == "leakage_00") *value = g.leakage[0];
  else if (f == "leakage_01") *value = g.leakage[1];
  else if (f == "leakage_10") *value = g.leakage[2];
  else if (f == "leakage_11") *value = g.leakage[3];
  else return set_error(OCSCZ_E_INVALID_ARGUMENT, "unknown report field '" + f + "'");
  return OCSCZ_OK;
}

ocscz_status ocscz_report_to_text(const ocscz_report* r, char* buf, size_t len, size_t* needed) {
  if (!r) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null report");
  return guarded([&] {
    std::ostringstream os;
    ocscz::write_key_value(os, r->report);
    return copy_out(os.str(), buf, len, needed);
  });
}

void ocscz_report_free(ocscz_report* r) { delete r; }

ocscz_status ocscz_pulse_synthesize(const ocscz_config* cfg, ocscz_scheme scheme,
                                    ocscz_pulse** out) {
  if (!cfg || !out) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const ocscz::Config& c = cfg->cfg;
    const auto ladder = ocscz::conditional_ladder(ocscz::hybrid_config(c));
    ocscz::PulseSpec p;
    if (to_scheme(scheme) == ocscz::Scheme::kOffResonant) {
      p = ocscz::off_resonant_cz(ladder, c.simulation.samples_per_period);
    } else {
      auto so = ocscz::synthesis_options(c);
      so.dd_composite = true;
      p = ocscz::synthesize_cphase(ladder, ladder.sign * ocscz::kPi / 2.0, 0.0, so);
    }
    *out = new ocscz_pulse{std::move(p)};
    return OCSCZ_OK;
  });
}

ocscz_status ocscz_pulse_info(const ocscz_pulse* p, double* t_g_ns, double* omega_d,
                              double* Theta, size_t* n_samples) {
  if (!p) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null pulse");
  if (t_g_ns) *t_g_ns = p->pulse.t_g;
  if (omega_d) *omega_d = p->pulse.omega_d;
  if (Theta) *Theta = p->pulse.Theta;
  if (n_samples) *n_samples = p->pulse.samples.size();
  return OCSCZ_OK;
}

ocscz_status ocscz_pulse_samples(const ocscz_pulse* p, double* re, double* im, size_t n) {
  if (!p || !re || !im) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null argument");
  if (n < p->pulse.samples.size()) return set_error(OCSCZ_E_BUFFER_TOO_SMALL, "arrays too small");
  for (size_t k = 0; k < p->pulse.samples.size(); ++k) {
    re[k] = p->pulse.samples[k].real();
    im[k] = p->pulse.samples[k].imag();
  }
  return OCSCZ_OK;
}

ocscz_status ocscz_pulse_write_table(const ocscz_pulse* p, const char* path) {
  if (!p || !path) return set_error(OCSCZ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::ofstream f(path);
    if (!f) ocscz::fail(ocscz::ErrorCode::kIo, std::string("cannot write '") + path + "'");
    ocscz::write_pulse_table(f, p->pulse);
    if (!f) ocscz::fail(ocscz::ErrorCode::kIo, std::string("failed writing '") + path + "'");
    return OCSCZ_OK;
  });
}

void ocscz_pulse_free(ocscz_pulse* p) { delete p; }

}  // extern "C"
