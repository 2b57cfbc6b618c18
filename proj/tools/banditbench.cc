// Copyright 2026 The Authors.
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

// Experiment runner: `run <spec>`, `list [filter]`, `validate <spec>`.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bandits/errors.h"
#include "bandits/runner.h"

namespace {

// --out beats BANDIT_BENCH_OUT, which beats the spec's "out"; the
// experiment writes into <base>/<name>.
std::string OutputDir(const bandits::ExperimentSpec& spec,
                      const std::string& flag) {
  std::string base = flag;
  if (base.empty()) {
    if (const char* env = std::getenv("BANDIT_BENCH_OUT"); env && *env) {
      base = env;
    }
  }
  if (base.empty()) base = spec.out_dir.empty() ? "results" : spec.out_dir;
  return (std::filesystem::path(base) / spec.name).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded bandit experiment runner"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_flag;
  int parallel = 1;
  bool quiet = false;
  bool no_timing = false;
  CLI::App* run = app.add_subcommand("run", "Run an experiment spec");
  run->add_option("spec", spec_path, "Experiment JSON")->required();
  run->add_option("--out", out_flag, "Output base directory");
  run->add_option("--parallel", parallel, "Worker threads")
      ->check(CLI::PositiveNumber);
  run->add_flag("--quiet", quiet, "No progress lines");
  run->add_flag("--no-timing", no_timing,
                "Write 0 runtimes for byte-identical reruns");

  std::string filter;
  CLI::App* list = app.add_subcommand("list", "List environments and policies");
  list->add_option("filter", filter, "Substring filter");

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "Check a spec");
  validate->add_option("spec", validate_path, "Experiment JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& line : bandits::ListComponents(filter)) {
        std::cout << line << "\n";
      }
      return 0;
    }
    if (*validate) {
      const auto spec = bandits::LoadExperimentSpec(validate_path);
      std::cout << "ok " << spec.name << ": " << spec.policies.size()
                << " policies, " << spec.seeds.size() << " seeds, T=" << spec.T
                << "\n";
      return 0;
    }
    auto spec = bandits::LoadExperimentSpec(spec_path);
    spec.out_dir = OutputDir(spec, out_flag);
    bandits::RunOptions options;
    options.parallel = parallel;
    options.quiet = quiet;
    options.no_timing = no_timing;
    const auto report = bandits::RunExperiment(spec, options);
    if (!quiet) {
      bandits::WriteSummaryCsv(std::cout, report.summary);
      std::cerr << "wrote " << report.files.size() << " files to "
                << spec.out_dir << "\n";
    }
    return 0;
  } catch (const bandits::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}
