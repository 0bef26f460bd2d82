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

#include "ocscz/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ocscz/error.hpp"
#include "ocscz/ocs_transmon.hpp"
#include "ocscz/rx_qubit.hpp"

namespace ocscz {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// Thrown by value parsers; the caller adds the location.
struct ValueError {
  std::string message;
};

double to_double(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end || !std::isfinite(v))
    throw ValueError{"expected a number, got '" + s + "'"};
  return v;
}

int64_t to_int(const std::string& s) {
  int64_t v = 0;
  const char* end = s.data() + s.size();
  auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end) throw ValueError{"expected an integer, got '" + s + "'"};
  return v;
}

uint64_t to_uint(const std::string& s) {
  uint64_t v = 0;
  const bool hex = s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
  const char* begin = s.data() + (hex ? 2 : 0);
  const char* end = s.data() + s.size();
  auto r = std::from_chars(begin, end, v, hex ? 16 : 10);
  if (r.ec != std::errc() || r.ptr != end)
    throw ValueError{"expected a non-negative integer, got '" + s + "'"};
  return v;
}

enum class Kind { kDouble, kInt, kText };

struct Entry {
  std::string name;
  Kind kind;
  std::function<void(Config&, const std::string&)> set;
  std::function<std::string(const Config&)> get;
};

template <class Get>
Entry make_double(std::string name, Get ref) {
  return Entry{std::move(name), Kind::kDouble,
               [ref](Config& c, const std::string& v) { ref(c) = to_double(v); },
               [ref](const Config& c) { return format_double(ref(const_cast<Config&>(c))); }};
}

template <class Get>
Entry make_int(std::string name, Get ref) {
  return Entry{std::move(name), Kind::kInt,
               [ref](Config& c, const std::string& v) {
                 const int64_t x = to_int(v);
                 if (x < -2147483647 || x > 2147483647) throw ValueError{"integer out of range"};
                 ref(c) = static_cast<int>(x);
               },
               [ref](const Config& c) { return std::to_string(ref(const_cast<Config&>(c))); }};
}

template <class Get>
Entry make_seed(std::string name, Get ref) {
  return Entry{std::move(name), Kind::kInt,
               [ref](Config& c, const std::string& v) { ref(c) = to_uint(v); },
               [ref](const Config& c) { return std::to_string(ref(const_cast<Config&>(c))); }};
}

// Optional number; "auto" clears it.
template <class Get>
Entry make_auto(std::string name, Get ref) {
  return Entry{std::move(name), Kind::kDouble,
               [ref](Config& c, const std::string& v) {
                 if (v == "auto") ref(c).reset();
                 else ref(c) = to_double(v);
               },
               [ref](const Config& c) {
                 const auto& o = ref(const_cast<Config&>(c));
                 return o ? format_double(*o) : std::string("auto");
               }};
}

void add_noise(std::vector<Entry>& e, const std::string& prefix, NoiseSection Config::*sec) {
  e.push_back(make_double(prefix + ".A", [sec](Config& c) -> double& { return (c.*sec).A; }));
  e.push_back(make_double(prefix + ".scale", [sec](Config& c) -> double& { return (c.*sec).scale; }));
  e.push_back(make_double(prefix + ".beta", [sec](Config& c) -> double& { return (c.*sec).beta; }));
  e.push_back(make_double(prefix + ".f_low_hz", [sec](Config& c) -> double& { return (c.*sec).f_low_hz; }));
  e.push_back(make_double(prefix + ".f_high_hz", [sec](Config& c) -> double& { return (c.*sec).f_high_hz; }));
  e.push_back(make_double(prefix + ".pivot_hz", [sec](Config& c) -> double& { return (c.*sec).pivot_hz; }));
}

#define OCSCZ_D(name, field) make_double(name, [](Config& c) -> double& { return c.field; })
#define OCSCZ_I(name, field) make_int(name, [](Config& c) -> int& { return c.field; })

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    e.push_back(OCSCZ_D("qubit.U_meV", qubit.U_meV));
    e.push_back(OCSCZ_D("qubit.U_C_over_U", qubit.U_C_over_U));
    e.push_back(OCSCZ_D("qubit.t_over_U", qubit.t_over_U));
    e.push_back(make_auto("qubit.eps_m_over_U",
                          [](Config& c) -> std::optional<double>& { return c.qubit.eps_m_over_U; }));
    e.push_back(OCSCZ_D("qubit.eps_over_U", qubit.eps_over_U));
    e.push_back(OCSCZ_D("transmon.E_J", transmon.E_J));
    e.push_back(OCSCZ_D("transmon.E_C", transmon.E_C));
    e.push_back(OCSCZ_I("transmon.cutoff", transmon.cutoff));
    e.push_back(make_auto("transmon.n_g0",
                          [](Config& c) -> std::optional<double>& { return c.transmon.n_g0; }));
    e.push_back(OCSCZ_D("transmon.parity_split_ghz", transmon.parity_split_ghz));
    e.push_back(OCSCZ_D("coupling.alpha", alpha));
    add_noise(e, "noise.qubit", &Config::noise_qubit);
    add_noise(e, "noise.coupler", &Config::noise_coupler);
    e.push_back(Entry{"simulation.scheme", Kind::kText,
                      [](Config& c, const std::string& v) {
                        try {
                          c.simulation.scheme = parse_scheme(v);
                        } catch (const Error& err) {
                          throw ValueError{err.what()};
                        }
                      },
                      [](const Config& c) { return std::string(scheme_choice_name(c.simulation.scheme)); }});
    e.push_back(OCSCZ_D("simulation.samples_per_period", simulation.samples_per_period));
    e.push_back(make_seed("simulation.seed", [](Config& c) -> uint64_t& { return c.simulation.seed; }));
    e.push_back(OCSCZ_I("simulation.workers", simulation.workers));
    e.push_back(OCSCZ_I("simulation.mc_trajectories", simulation.mc_trajectories));
    e.push_back(OCSCZ_I("simulation.mc_modes", simulation.mc_modes));
    e.push_back(OCSCZ_I("synthesis.restarts", synthesis.restarts));
    e.push_back(make_seed("synthesis.seed", [](Config& c) -> uint64_t& { return c.synthesis.seed; }));
    e.push_back(OCSCZ_D("synthesis.residual_tol", synthesis.residual_tol));
    e.push_back(OCSCZ_D("synthesis.theta_tol", synthesis.theta_tol));
    e.push_back(OCSCZ_D("rx_spectrum.eps_min_over_U", rx_spectrum.eps_min_over_U));
    e.push_back(OCSCZ_D("rx_spectrum.eps_max_over_U", rx_spectrum.eps_max_over_U));
    e.push_back(OCSCZ_I("rx_spectrum.points", rx_spectrum.points));
    e.push_back(OCSCZ_D("transmon_dispersion.n_g_min", transmon_dispersion.n_g_min));
    e.push_back(OCSCZ_D("transmon_dispersion.n_g_max", transmon_dispersion.n_g_max));
    e.push_back(OCSCZ_I("transmon_dispersion.points", transmon_dispersion.points));
    e.push_back(OCSCZ_I("transmon_dispersion.levels", transmon_dispersion.levels));
    e.push_back(OCSCZ_D("qubit_map.eps_min_over_U", qubit_map.eps_min_over_U));
    e.push_back(OCSCZ_D("qubit_map.eps_max_over_U", qubit_map.eps_max_over_U));
    e.push_back(OCSCZ_I("qubit_map.eps_points", qubit_map.eps_points));
    e.push_back(OCSCZ_D("qubit_map.t_min_over_U", qubit_map.t_min_over_U));
    e.push_back(OCSCZ_D("qubit_map.t_max_over_U", qubit_map.t_max_over_U));
    e.push_back(OCSCZ_I("qubit_map.t_points", qubit_map.t_points));
    e.push_back(OCSCZ_D("qubit_map.j_max_ghz", qubit_map.j_max_ghz));
    e.push_back(OCSCZ_D("coupler_map.ej_min", coupler_map.ej_min));
    e.push_back(OCSCZ_D("coupler_map.ej_max", coupler_map.ej_max));
    e.push_back(OCSCZ_I("coupler_map.ej_points", coupler_map.ej_points));
    e.push_back(OCSCZ_D("coupler_map.ec_min", coupler_map.ec_min));
    e.push_back(OCSCZ_D("coupler_map.ec_max", coupler_map.ec_max));
    e.push_back(OCSCZ_I("coupler_map.ec_points", coupler_map.ec_points));
    e.push_back(OCSCZ_D("coupler_map.min_ej_over_ec", coupler_map.min_ej_over_ec));
    e.push_back(OCSCZ_I("synth_pulse.bloch_stride", synth_pulse.bloch_stride));
    for (int i = 0; i < 3; ++i) {
      const size_t idx = i;
      e.push_back(Entry{"sweep.axis" + std::to_string(i + 1), Kind::kText,
                        [idx](Config& c, const std::string& v) {
                          auto& axes = c.sweep.axes;
                          if (axes.size() < idx)
                            throw ValueError{"sweep axes must be numbered consecutively from axis1"};
                          SweepAxis a;
                          try {
                            a = parse_axis(v);
                          } catch (const Error& err) {
                            throw ValueError{err.what()};
                          }
                          if (axes.size() == idx) axes.push_back(a);
                          else axes[idx] = a;
                        },
                        [idx](const Config& c) {
                          return idx < c.sweep.axes.size() ? format_axis(c.sweep.axes[idx])
                                                           : std::string();
                        }});
    }
    return e;
  }();
  return entries;
}

#undef OCSCZ_D
#undef OCSCZ_I

const Entry* find_entry(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return &e;
  return nullptr;
}

std::set<std::string> sections() {
  std::set<std::string> s;
  for (const auto& e : registry()) s.insert(e.name.substr(0, e.name.rfind('.')));
  return s;
}

std::string trim(const std::string& s, size_t* lead = nullptr) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    if (lead) *lead = s.size();
    return {};
  }
  const size_t e = s.find_last_not_of(" \t\r");
  if (lead) *lead = b;
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(const std::string& origin, int line, size_t col, const std::string& msg) {
  std::ostringstream os;
  os << origin << ":" << line << ":" << col + 1 << ": " << msg;
  fail(ErrorCode::kConfig, os.str());
}

}  // namespace

const char* scheme_choice_name(SchemeChoice s) {
  switch (s) {
    case SchemeChoice::kOffResonant: return "offres";
    case SchemeChoice::kDD: return "dd";
    case SchemeChoice::kBoth: return "both";
  }
  return "?";
}

SchemeChoice parse_scheme(const std::string& s) {
  if (s == "offres") return SchemeChoice::kOffResonant;
  if (s == "dd") return SchemeChoice::kDD;
  if (s == "both") return SchemeChoice::kBoth;
  fail(ErrorCode::kConfig, "scheme must be offres, dd or both, got '" + s + "'");
}

std::vector<double> SweepAxis::values() const {
  std::vector<double> v(points);
  for (int i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    v[i] = log ? min * std::pow(max / min, f) : min + (max - min) * f;
  }
  return v;
}

SweepAxis parse_axis(const std::string& text) {
  std::istringstream is(text);
  std::string name, scale, lo, hi, n, extra;
  if (!(is >> name >> scale >> lo >> hi >> n) || (is >> extra))
    fail(ErrorCode::kConfig, "axis must read '<key> lin|log <min> <max> <points>'");
  SweepAxis a;
  a.name = name;
  if (scale != "lin" && scale != "log") fail(ErrorCode::kConfig, "axis scale must be lin or log");
  a.log = scale == "log";
  try {
    a.min = to_double(lo);
    a.max = to_double(hi);
    a.points = static_cast<int>(to_int(n));
  } catch (const ValueError& e) {
    fail(ErrorCode::kConfig, "axis " + name + ": " + e.message);
  }
  if (!is_numeric_key(name)) fail(ErrorCode::kConfig, "axis parameter '" + name + "' is not a numeric key");
  if (a.points < 2) fail(ErrorCode::kConfig, "axis " + name + " needs at least 2 points");
  if (a.log && !(a.min > 0.0 && a.max > 0.0))
    fail(ErrorCode::kConfig, "log axis " + name + " needs positive bounds");
  return a;
}

std::string format_axis(const SweepAxis& a) {
  return a.name + (a.log ? " log " : " lin ") + format_double(a.min) + " " + format_double(a.max) +
         " " + std::to_string(a.points);
}

bool is_numeric_key(const std::string& name) {
  const Entry* e = find_entry(name);
  return e && e->kind != Kind::kText;
}

void set_config_value(Config& cfg, const std::string& name, const std::string& value) {
  const Entry* e = find_entry(name);
  if (!e) fail(ErrorCode::kConfig, "unknown key '" + name + "'");
  try {
    e->set(cfg, value);
  } catch (const ValueError& v) {
    fail(ErrorCode::kConfig, name + ": " + v.message);
  }
}

std::vector<std::pair<std::string, std::string>> config_entries(const Config& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : registry()) {
    std::string v = e.get(cfg);
    if (e.name.rfind("sweep.", 0) == 0 && v.empty()) continue;
    out.emplace_back(e.name, std::move(v));
  }
  return out;
}

std::string to_text(const Config& cfg) {
  std::ostringstream os;
  std::string current;
  for (const auto& [name, value] : config_entries(cfg)) {
    const size_t dot = name.rfind('.');
    const std::string sec = name.substr(0, dot);
    if (sec != current) {
      os << (current.empty() ? "" : "\n") << "[" << sec << "]\n";
      current = sec;
    }
    os << name.substr(dot + 1) << " = " << value << "\n";
  }
  return os.str();
}

Config parse_config(const std::string& text, const std::string& origin) {
  Config cfg;
  const auto known = sections();
  std::istringstream in(text);
  std::string raw, section;
  std::set<std::string> seen;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t lead = 0;
    const std::string body = trim(line, &lead);
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') parse_fail(origin, line_no, lead, "section header missing ']'");
      section = trim(body.substr(1, body.size() - 2));
      if (!known.count(section))
        parse_fail(origin, line_no, lead + 1, "unknown section [" + section + "]");
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) parse_fail(origin, line_no, lead, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    size_t vlead = 0;
    const std::string value = trim(line.substr(eq + 1), &vlead);
    const size_t vcol = eq + 1 + vlead;
    if (key.empty()) parse_fail(origin, line_no, lead, "missing key before '='");
    if (section.empty()) parse_fail(origin, line_no, lead, "key '" + key + "' outside any section");
    if (value.empty()) parse_fail(origin, line_no, vcol, "missing value for '" + key + "'");
    const std::string name = section + "." + key;
    const Entry* e = find_entry(name);
    if (!e) parse_fail(origin, line_no, lead, "unknown key '" + key + "' in [" + section + "]");
    if (!seen.insert(name).second) parse_fail(origin, line_no, lead, "duplicate key '" + name + "'");
    try {
      e->set(cfg, value);
    } catch (const ValueError& v) {
      parse_fail(origin, line_no, vcol, name + ": " + v.message);
    }
  }
  try {
    validate(cfg);
  } catch (const Error& err) {
    fail(ErrorCode::kConfig, origin + ": " + err.what());
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::kIo, "cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path);
}

namespace {

void check(bool ok, const std::string& key, const std::string& what) {
  if (!ok) fail(ErrorCode::kConfig, key + " " + what);
}

void check_noise(const NoiseSection& n, const std::string& p) {
  check(n.A >= 0.0, p + ".A", "must be >= 0");
  check(n.scale >= 0.0, p + ".scale", "must be >= 0");
  check(n.beta >= 0.6 && n.beta <= 1.4, p + ".beta", "must be in [0.6, 1.4]");
  check(n.f_low_hz > 0.0 && n.f_low_hz < n.f_high_hz, p + ".f_low_hz", "must be in (0, f_high_hz)");
  check(n.pivot_hz > 0.0, p + ".pivot_hz", "must be > 0");
}

}  // namespace

void validate(const Config& c) {
  check(c.qubit.U_meV > 0.0, "qubit.U_meV", "must be > 0");
  check(c.qubit.U_C_over_U > 0.0 && c.qubit.U_C_over_U < 0.5, "qubit.U_C_over_U", "must be in (0, 0.5)");
  check(c.qubit.t_over_U > 0.0 && c.qubit.t_over_U < 0.2, "qubit.t_over_U", "must be in (0, 0.2)");
  if (c.qubit.eps_m_over_U)
    check(*c.qubit.eps_m_over_U >= 0.0 && *c.qubit.eps_m_over_U < 1.0, "qubit.eps_m_over_U",
          "must be in [0, 1)");
  check(c.transmon.E_J > 0.0, "transmon.E_J", "must be > 0");
  check(c.transmon.E_C > 0.0, "transmon.E_C", "must be > 0");
  check(c.transmon.cutoff >= 5 && c.transmon.cutoff <= 200, "transmon.cutoff", "must be in [5, 200]");
  check(c.transmon.parity_split_ghz > 0.0, "transmon.parity_split_ghz", "must be > 0");
  check(c.alpha > 0.0 && c.alpha < 1.0, "coupling.alpha", "must be in (0, 1)");
  check_noise(c.noise_qubit, "noise.qubit");
  check_noise(c.noise_coupler, "noise.coupler");
  check(c.simulation.samples_per_period >= 200.0, "simulation.samples_per_period", "must be >= 200");
  check(c.simulation.workers >= 1, "simulation.workers", "must be >= 1");
  check(c.simulation.mc_trajectories >= 100, "simulation.mc_trajectories", "must be >= 100");
  check(c.simulation.mc_modes >= 10, "simulation.mc_modes", "must be >= 10");
  check(c.synthesis.restarts >= 1, "synthesis.restarts", "must be >= 1");
  check(c.synthesis.residual_tol > 0.0, "synthesis.residual_tol", "must be > 0");
  check(c.synthesis.theta_tol > 0.0, "synthesis.theta_tol", "must be > 0");
  check(c.rx_spectrum.points >= 2, "rx_spectrum.points", "must be >= 2");
  check(c.rx_spectrum.eps_min_over_U < c.rx_spectrum.eps_max_over_U, "rx_spectrum.eps_min_over_U",
        "must be below eps_max_over_U");
  check(c.transmon_dispersion.points >= 2, "transmon_dispersion.points", "must be >= 2");
  check(c.transmon_dispersion.levels >= 2 && c.transmon_dispersion.levels <= 10,
        "transmon_dispersion.levels", "must be in [2, 10]");
  check(c.transmon_dispersion.n_g_min < c.transmon_dispersion.n_g_max, "transmon_dispersion.n_g_min",
        "must be below n_g_max");
  const auto& q = c.qubit_map;
  check(q.eps_points >= 2 && q.t_points >= 2, "qubit_map.eps_points", "and t_points must be >= 2");
  check(q.eps_min_over_U < q.eps_max_over_U, "qubit_map.eps_min_over_U", "must be below eps_max_over_U");
  check(q.t_min_over_U > 0.0 && q.t_min_over_U < q.t_max_over_U, "qubit_map.t_min_over_U",
        "must be in (0, t_max_over_U)");
  check(q.j_max_ghz > 0.0, "qubit_map.j_max_ghz", "must be > 0");
  const auto& m = c.coupler_map;
  check(m.ej_points >= 2 && m.ec_points >= 2, "coupler_map.ej_points", "and ec_points must be >= 2");
  check(m.ej_min > 0.0 && m.ej_min < m.ej_max, "coupler_map.ej_min", "must be in (0, ej_max)");
  check(m.ec_min > 0.0 && m.ec_min < m.ec_max, "coupler_map.ec_min", "must be in (0, ec_max)");
  check(m.min_ej_over_ec >= 0.0, "coupler_map.min_ej_over_ec", "must be >= 0");
  check(c.synth_pulse.bloch_stride >= 1, "synth_pulse.bloch_stride", "must be >= 1");
}

QubitParams qubit_params(const Config& cfg) {
  const double U = mev_to_ghz(cfg.qubit.U_meV);
  const double U_C = cfg.qubit.U_C_over_U * U, t = cfg.qubit.t_over_U * U;
  QubitParams q = qubit_operating_point(U, U_C, t);
  if (cfg.qubit.eps_m_over_U) q.eps_m = *cfg.qubit.eps_m_over_U * U;
  q.eps = cfg.qubit.eps_over_U * U;
  validate(q);
  return q;
}

TransmonParams transmon_params(const Config& cfg) {
  TransmonParams p{cfg.transmon.E_J, cfg.transmon.E_C, 0.0, cfg.transmon.cutoff};
  validate(p);
  return p;
}

HybridConfig hybrid_config(const Config& cfg) {
  HybridConfig h;
  h.qubitA = h.qubitB = qubit_params(cfg);
  h.transmon = transmon_params(cfg);
  h.alpha = cfg.alpha;
  h.n_g0 = cfg.transmon.n_g0 ? *cfg.transmon.n_g0
                             : parity_aware_bias(h.transmon, cfg.transmon.parity_split_ghz).n_g0;
  h.symmetric = true;
  validate(h);
  return h;
}

namespace {

NoiseSpec noise_spec(const NoiseSection& n) {
  NoiseSpec s{n.A * n.scale, 1.0, kTwoPi * n.f_low_hz, kTwoPi * n.f_high_hz};
  return rescale_beta(s, n.beta, n.pivot_hz);
}

}  // namespace

NoiseSpec qubit_noise(const Config& cfg) { return noise_spec(cfg.noise_qubit); }
NoiseSpec coupler_noise(const Config& cfg) { return noise_spec(cfg.noise_coupler); }

SynthesisOptions synthesis_options(const Config& cfg) {
  SynthesisOptions o;
  o.restarts = cfg.synthesis.restarts;
  o.seed = cfg.synthesis.seed;
  o.residual_tol = cfg.synthesis.residual_tol;
  o.theta_tol = cfg.synthesis.theta_tol;
  o.samples_per_period = cfg.simulation.samples_per_period;
  return o;
}

FidelityOptions fidelity_options(const Config& cfg) {
  FidelityOptions o;
  o.samples_per_period = cfg.simulation.samples_per_period;
  o.workers = cfg.simulation.workers;
  o.seed = cfg.simulation.seed;
  o.mc_trajectories = cfg.simulation.mc_trajectories;
  o.mc_modes = cfg.simulation.mc_modes;
  o.synthesis = synthesis_options(cfg);
  return o;
}

}  // namespace ocscz
