// Copyright 2026 The kaoncp Authors
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "config.hpp"
#include "runners.hpp"

using namespace kaoncp::cli;

namespace {

constexpr int kExitUsage = 2;

struct Options {
  std::string config;
  std::string out;
  std::string format;
};

std::string describe(const ConfigError& e) {
  std::string s = e.source();
  if (e.line() > 0) s += ":" + std::to_string(e.line());
  s += ": ";
  if (!e.field().empty()) s += "field '" + e.field() + "': ";
  return s + e.what();
}

int dispatch(const std::string& command, const Options& o) {
  const ScenarioConfig config = load_config(o.config);
  const std::string fmt = o.format.empty() ? (command == "check-cp" ? "json" : "csv") : o.format;
  const Format format = fmt == "json" ? Format::Json : Format::Csv;

  RunResult r;
  if (command == "check-cp") {
    r = run_check_cp(config, format);
  } else if (command == "evolve") {
    r = run_evolve(config, format);
  } else if (command == "two-kaon") {
    r = run_two_kaon(config, format);
  } else if (command == "trotter") {
    r = run_trotter(config, format);
  } else {
    r = run_sweep(config, format);
  }

  const std::string out = !o.out.empty() ? o.out : config.output.value_or("");
  if (out.empty()) {
    std::cout << r.output << std::flush;
  } else {
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) {
      std::cerr << "kaoncp: cannot write " << out << "\n";
      return kExitUsage;
    }
    f << r.output;
  }
  for (const std::string& m : r.messages) std::cerr << m << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kaon dissipative dynamics scenario runner"};
  app.set_version_flag("--version", std::string(kcp_version()));
  app.require_subcommand(1);

  const std::map<std::string, std::string> commands = {
      {"check-cp", "Inequality margins, Choi sweep and positivity verdict"},
      {"evolve", "Bloch components and observables over the time grid"},
      {"two-kaon", "Singlet witness, negative mass and Trotter bound"},
      {"trotter", "Trotter error and bound as the step count doubles"},
      {"sweep", "Verdicts and margins over a parameter grid"},
  };
  Options opts;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opts.config, "Scenario file (JSON)")->required();
    sub->add_option("--out", opts.out, "Output path (default: stdout)");
    sub->add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), opts);
  } catch (const ConfigError& e) {
    std::cerr << "kaoncp: " << describe(e) << "\n";
  } catch (const ScenarioError& e) {
    std::cerr << "kaoncp: " << opts.config << ": " << e.what() << "\n";
  }
  return kExitUsage;
}
