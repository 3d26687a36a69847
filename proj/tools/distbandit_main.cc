// Copyright 2026 The distbandit Authors.
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

// Experiment runner. Exit codes: 0 success, 2 config error, 3 runtime error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "distbandit/errors.h"
#include "distbandit/experiment.h"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw distbandit::ConfigError("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed multi-armed bandit simulator"};
  std::string config_path;
  std::string preset;
  std::optional<int> replications;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<int> threads;
  bool bounds = false;

  auto* config_opt =
      app.add_option("--config", config_path, "Experiment config file");
  app.add_option("--preset", preset, "Built-in experiment (figure1)")
      ->excludes(config_opt);
  app.add_option("--replications", replications, "Monte Carlo replications")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Root random seed");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--bounds", bounds,
               "Print and write the theoretical comparison tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  distbandit::ExperimentConfig cfg;
  try {
    if (!config_path.empty()) {
      cfg = distbandit::ParseConfig(ReadFile(config_path));
    } else if (!preset.empty()) {
      cfg = distbandit::PresetByName(preset);
    } else {
      std::cerr << "error: one of --config or --preset is required\n"
                << app.help();
      return kExitConfigError;
    }
    if (replications) cfg.replications = *replications;
    if (seed) cfg.seed = *seed;
    if (out_dir) cfg.out_dir = *out_dir;
    if (threads) cfg.threads = *threads;
    if (bounds) cfg.bounds = true;
  } catch (const distbandit::ConfigError& e) {
    for (const auto& message : e.errors()) {
      std::cerr << "config error: " << message << "\n";
    }
    return kExitConfigError;
  }

  try {
    const auto result = distbandit::RunExperiment(cfg, std::cout);
    for (const auto& path : result.files) {
      std::cout << "wrote " << path.string() << "\n";
    }
  } catch (const distbandit::ConfigError& e) {
    for (const auto& message : e.errors()) {
      std::cerr << "config error: " << message << "\n";
    }
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return 0;
}
