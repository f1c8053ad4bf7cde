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

// Experiment drivers behind the CLI: single runs, weight-scheme comparisons
// and malicious-fraction sweeps, plus their CSV/JSON outputs.
//
// CSV schemas (header row included, columns in this order):
//
//   snapshot_<event>.csv  object,behavior,malicious,global_trust,label
//   trajectory.csv        checkpoint,object,behavior,score
//   detection.csv         scheme,at_event,true_malicious,detected,accuracy,
//                         good_nodes,false_positives,false_positive_rate
//   comparison.csv        scheme,object,behavior,checkpoint,score
//   sweep.csv             fraction,scheme,true_malicious,detected,accuracy,
//                         good_nodes,false_positives,mean_good_score
//
// Absent values (e.g. accuracy without malicious objects) are empty fields.
// Scores use six decimals.

#ifndef SIOT_EXPERIMENT_H_
#define SIOT_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "siot/config.h"
#include "siot/engine.h"
#include "siot/metrics.h"
#include "siot/trace.h"

namespace siot {

inline constexpr int kManifestVersion = 1;

// Loads config.trace_path, or generates a trace seeded with config.seed.
Trace PrepareTrace(const ExperimentConfig& config);

PolicyMap PoliciesFor(const Trace& trace, const ExperimentConfig& config);

// The engine stream is derived from config.seed.
EngineOptions EngineOptionsFor(const ExperimentConfig& config,
                               const WeightScheme& scheme);

// config.tracked, or an automatic pick: the first five good and five
// malicious objects in roster order plus every dynamic-behavior object.
std::vector<ObjectId> TrackedNodes(const ExperimentConfig& config,
                                   const Trace& trace);

struct RunResult {
  std::string scheme;
  std::vector<TrustSnapshot> snapshots;
  // Evaluated on the final snapshot.
  DetectionReport detection;
  std::vector<ObjectId> tracked;
  std::vector<TrajectoryRow> trajectory;
};

RunResult RunExperiment(const ExperimentConfig& config, const Trace& trace,
                        const WeightScheme& scheme);

struct ComparisonRow {
  std::string scheme;
  ObjectId node;
  std::uint64_t checkpoint = 0;
  double score = 0.0;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct ComparisonResult {
  std::vector<ComparisonRow> rows;
  std::vector<DetectionReport> detections;
};

// Replays the same trace and seed under every configured scheme (at least
// two). Rows are ordered by scheme (config order), checkpoint, node.
ComparisonResult SchemeComparison(const ExperimentConfig& config,
                                  const Trace& trace);

struct SweepRow {
  double fraction = 0.0;
  std::string scheme;
  DetectionReport detection;
  std::optional<double> mean_good_score;
};

// One generated trace per malicious fraction (seed derived from config.seed
// and the fraction's position), replayed under every scheme. Rows are
// ordered by fraction, then scheme.
std::vector<SweepRow> MaliciousSweep(const ExperimentConfig& config);

// Each writer creates `dir` if needed and returns the file names written.
std::vector<std::string> WriteRunOutputs(const ExperimentConfig& config,
                                         const Trace& trace,
                                         const RunResult& result,
                                         const std::filesystem::path& dir);
std::vector<std::string> WriteComparisonOutputs(
    const Trace& trace, const ComparisonResult& result,
    const std::filesystem::path& dir);
std::vector<std::string> WriteSweepOutputs(const std::vector<SweepRow>& rows,
                                           const std::filesystem::path& dir);

// manifest.json: the full config (reloadable with --config), the command,
// format versions and the files produced.
void WriteManifest(const ExperimentConfig& config, std::string_view command,
                   const std::vector<std::string>& outputs,
                   const std::filesystem::path& dir);

}  // namespace siot

#endif  // SIOT_EXPERIMENT_H_
