// Copyright 2026 The SIoT Trust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// siot-trust: generate traces, replay them and report trust experiments.
//
//   siot-trust generate [--seed N] [--out DIR]
//   siot-trust run      [--config FILE] [--trace FILE] [--scheme S] ...
//   siot-trust compare  [--config FILE] [--scheme S --scheme S ...]
//   siot-trust sweep    [--config FILE] [--fractions 0.1,0.2,...]
//   siot-trust validate FILE
//
// Exit codes: 0 success, 1 runtime failure, 2 usage or config error.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "siot/config.h"
#include "siot/experiment.h"
#include "siot/text.h"
#include "siot/trace.h"

namespace {

constexpr int kRuntimeFailure = 1;
constexpr int kUsageError = 2;

struct Flags {
  std::string config;
  std::map<std::string, std::string> overrides;
  std::vector<std::string> schemes;
};

siot::ExperimentConfig BuildConfig(const Flags& flags) {
  siot::ExperimentConfig config =
      flags.config.empty() ? siot::ExperimentConfig{}
                           : siot::LoadExperimentConfig(flags.config);
  for (const auto& [k, v] : flags.overrides) config.Set(k, v);
  if (!flags.schemes.empty()) {
    std::string joined;
    for (const std::string& s : flags.schemes) {
      joined += (joined.empty() ? "" : ";") + s;
    }
    config.Set("schemes", joined);
  }
  config.Validate();
  return config;
}

void PrintDetection(const siot::DetectionReport& d) {
  std::cout << "scheme=" << d.scheme << " at_event=" << d.at_event
            << " detected=" << d.detected << "/" << d.true_malicious
            << " accuracy="
            << (d.accuracy ? siot::text::FormatFixed(*d.accuracy, 4) : "n/a")
            << " false_positives=" << d.false_positives << "/" << d.good_count
            << '\n';
}

int Generate(const siot::ExperimentConfig& config) {
  siot::ExperimentConfig c = config;
  c.trace_path.reset();
  const siot::Trace trace = siot::PrepareTrace(c);
  std::filesystem::create_directories(c.out_dir);
  siot::WriteTraceFile(trace, c.out_dir / "trace.siot");
  siot::WriteManifest(c, "generate", {"trace.siot"}, c.out_dir);
  std::cout << "wrote " << (c.out_dir / "trace.siot").string() << " ("
            << trace.network.size() << " objects, " << trace.events.size()
            << " events)\n";
  return 0;
}

int RunCommand(const siot::ExperimentConfig& config) {
  const siot::Trace trace = siot::PrepareTrace(config);
  const siot::RunResult result =
      siot::RunExperiment(config, trace, config.schemes.front());
  const auto files =
      siot::WriteRunOutputs(config, trace, result, config.out_dir);
  siot::WriteManifest(config, "run", files, config.out_dir);
  PrintDetection(result.detection);
  return 0;
}

int Compare(const siot::ExperimentConfig& config) {
  const siot::Trace trace = siot::PrepareTrace(config);
  const siot::ComparisonResult result = siot::SchemeComparison(config, trace);
  const auto files = siot::WriteComparisonOutputs(trace, result, config.out_dir);
  siot::WriteManifest(config, "compare", files, config.out_dir);
  for (const auto& d : result.detections) PrintDetection(d);
  return 0;
}

int Sweep(const siot::ExperimentConfig& config) {
  const std::vector<siot::SweepRow> rows = siot::MaliciousSweep(config);
  const auto files = siot::WriteSweepOutputs(rows, config.out_dir);
  siot::WriteManifest(config, "sweep", files, config.out_dir);
  for (const auto& row : rows) {
    std::cout << "fraction=" << siot::text::FormatDouble(row.fraction) << ' ';
    PrintDetection(row.detection);
  }
  return 0;
}

int Validate(const std::string& path) {
  const siot::Trace trace = siot::LoadTrace(path);
  std::cout << "ok: " << path << " (" << trace.network.size() << " objects, "
            << trace.events.size() << " events)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trust quantification and attack simulation for social IoT"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  std::map<std::string, std::string> raw;
  auto add = [&](const std::string& flag, const std::string& key,
                 const std::string& help) {
    app.add_option_function<std::string>(
        flag, [&raw, key](const std::string& v) { raw[key] = v; }, help);
  };
  app.add_option("--config", flags.config,
                 "Config file (key = value) or run manifest (JSON)");
  app.add_option("--scheme", flags.schemes,
                 "Weight scheme: ws1, ws2, mean or w1,w2,w3 (repeatable)");
  add("--seed", "seed", "Seed for generation and replay");
  add("--theta", "theta", "Trust threshold");
  add("--checkpoints", "checkpoints", "Comma-separated snapshot points");
  add("--out", "out", "Output directory");
  add("--trace", "trace", "Replay this trace file instead of generating");
  add("--window", "window", "Sliding ledger window in events (0 = off)");
  add("--tracked", "tracked", "Comma-separated object ids to track");
  add("--fractions", "sweep", "Comma-separated malicious fractions");
  add("--objects", "objects", "Objects to generate");
  add("--events", "events", "Events to generate");
  add("--malicious-fraction", "malicious_fraction",
      "Fraction of malicious-family objects");

  auto* generate = app.add_subcommand("generate", "Write a synthetic trace");
  auto* run = app.add_subcommand("run", "Replay a trace and report");
  auto* compare = app.add_subcommand("compare", "Compare weight schemes");
  auto* sweep = app.add_subcommand("sweep", "Sweep the malicious fraction");
  auto* validate = app.add_subcommand("validate", "Check a trace file");
  std::string validate_path;
  validate->add_option("file", validate_path, "Trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n"
              << "run with --help for usage\n";
    return kUsageError;
  }
  flags.overrides = raw;

  try {
    if (validate->parsed()) return Validate(validate_path);
    const siot::ExperimentConfig config = BuildConfig(flags);
    if (generate->parsed()) return Generate(config);
    if (run->parsed()) return RunCommand(config);
    if (compare->parsed()) return Compare(config);
    if (sweep->parsed()) return Sweep(config);
  } catch (const siot::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  return kUsageError;
}
