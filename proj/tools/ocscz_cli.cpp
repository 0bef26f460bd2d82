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

// Command-line front end; talks to the library only through its C API.
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ocscz/ocscz.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct ConfigDeleter {
  void operator()(ocscz_config* c) const { ocscz_config_free(c); }
};
using ConfigPtr = std::unique_ptr<ocscz_config, ConfigDeleter>;

int report(ocscz_status s) {
  std::cerr << "ocscz: " << ocscz_last_error() << "\n";
  return s == OCSCZ_E_CONFIG || s == OCSCZ_E_INVALID_ARGUMENT ? kExitUsage : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Remote CZ gate simulator for triple-dot spin qubits coupled by an OCS transmon"};
  app.set_version_flag("--version", std::string(ocscz_version()));
  app.require_subcommand(1);

  std::string config_path, out, scheme, map = "both";
  std::vector<std::string> overrides;
  uint64_t seed = 0;
  int workers = 0;
  app.add_option("--config", config_path, "configuration file")->check(CLI::ExistingFile);
  app.add_option("--out", out, "output path (default: <subcommand>.csv)");
  auto* seed_opt = app.add_option("--seed", seed, "random seed");
  auto* workers_opt = app.add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--scheme", scheme, "gate scheme")->check(CLI::IsMember({"offres", "dd", "both"}));
  app.add_option("--set", overrides, "override a key: section.key=value (repeatable)");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"rx-spectrum", "RX qubit spectrum, occupations and sensitivity versus eps_m"},
      {"transmon-dispersion", "OCS transmon levels versus gate charge, both parities"},
      {"sensitivity-map", "qubit and coupler charge-sensitivity grids with constraint masks"},
      {"synth-pulse", "pulse table and conditional Bloch trajectories"},
      {"simulate-gate", "single gate report with noise"},
      {"sweep-fidelity", "fidelity over the configured sweep axes"},
      {"print-config", "print the effective configuration"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (name == "sensitivity-map")
      sub->add_option("--map", map, "which map")->check(CLI::IsMember({"qubit", "coupler", "both"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  ocscz_config* raw = nullptr;
  ocscz_status s = config_path.empty() ? ocscz_config_new(&raw) : ocscz_config_load(config_path.c_str(), &raw);
  if (s != OCSCZ_OK) return report(s);
  ConfigPtr cfg(raw);

  auto set = [&](const std::string& key, const std::string& value) {
    return ocscz_config_set(cfg.get(), key.c_str(), value.c_str());
  };
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) {
      std::cerr << "ocscz: --set expects section.key=value, got '" << o << "'\n";
      return kExitUsage;
    }
    if ((s = set(o.substr(0, eq), o.substr(eq + 1))) != OCSCZ_OK) return report(s);
  }
  if (*seed_opt && (s = set("simulation.seed", std::to_string(seed))) != OCSCZ_OK) return report(s);
  if (*workers_opt && (s = set("simulation.workers", std::to_string(workers))) != OCSCZ_OK)
    return report(s);
  if (!scheme.empty() && (s = set("simulation.scheme", scheme)) != OCSCZ_OK) return report(s);

  if (cmd == "print-config") {
    size_t need = 0;
    ocscz_config_to_text(cfg.get(), nullptr, 0, &need);
    std::string text(need, '\0');
    if ((s = ocscz_config_to_text(cfg.get(), text.data(), text.size(), nullptr)) != OCSCZ_OK)
      return report(s);
    std::fputs(text.c_str(), stdout);
    return 0;
  }

  if (out.empty()) out = cmd + (cmd == "simulate-gate" ? ".txt" : ".csv");
  ocscz_run_result* result = nullptr;
  s = ocscz_run(cfg.get(), cmd.c_str(), out.c_str(), cmd == "sensitivity-map" ? map.c_str() : nullptr,
                &result);
  if (s != OCSCZ_OK) return report(s);
  for (size_t i = 0; i < ocscz_run_result_warning_count(result); ++i)
    std::cerr << "ocscz: warning: " << ocscz_run_result_warning(result, i) << "\n";
  for (size_t i = 0; i < ocscz_run_result_file_count(result); ++i)
    std::cout << ocscz_run_result_file(result, i) << "\n";
  ocscz_run_result_free(result);
  return 0;
}
