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

// Experiment configuration. The text form is a flat `key = value` file
// ('#' starts a comment); a run manifest (JSON, with the same keys under
// "config") is accepted wherever a config file is.

#ifndef SIOT_CONFIG_H_
#define SIOT_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "siot/behavior.h"
#include "siot/trace.h"
#include "siot/trust_core.h"
#include "siot/types.h"

namespace siot {

// Bad configuration or command-line input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct ExperimentConfig {
  // Replay this trace file instead of generating one.
  std::optional<std::filesystem::path> trace_path;
  // Used when trace_path is unset. Its seed field is ignored in favor of
  // `seed`.
  GeneratorConfig generator;

  // `run` uses the first scheme; `compare` and `sweep` use all of them.
  std::vector<WeightScheme> schemes = {WeightScheme::Ws1(), WeightScheme::Ws2(),
                                       WeightScheme::Mean()};
  double theta = kDefaultTheta;
  // Empty means five evenly spaced checkpoints ending at the last event.
  std::vector<std::uint64_t> checkpoints;
  std::vector<double> sweep_fractions = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  // Empty means: five good, five malicious and every dynamic-behavior object.
  std::vector<ObjectId> tracked;
  std::uint64_t window = 0;
  std::set<BehaviorKind> malicious_kinds = {BehaviorKind::kMalicious,
                                            BehaviorKind::kGoodToMalicious,
                                            BehaviorKind::kOnOff};
  AttackOptions attacks;
  std::filesystem::path out_dir = "results";
  std::uint64_t seed = 42;

  // Throws ConfigError.
  void Validate() const;

  // Canonical flat form; FromKeyValues(ToKeyValues()) reproduces the config.
  std::map<std::string, std::string> ToKeyValues() const;

  // Applies `values` on top of the defaults. Throws ConfigError on an
  // unknown key or a malformed value.
  static ExperimentConfig FromKeyValues(
      const std::map<std::string, std::string>& values);
  // Applies one key to this config.
  void Set(const std::string& key, const std::string& value);
};

// Parses the flat text form.
std::map<std::string, std::string> ParseKeyValueText(const std::string& text);

// Loads a flat config file or a JSON manifest.
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);

// Checkpoints actually used for a trace of `event_count` events.
std::vector<std::uint64_t> EffectiveCheckpoints(const ExperimentConfig& config,
                                                std::uint64_t event_count);

}  // namespace siot

#endif  // SIOT_CONFIG_H_
