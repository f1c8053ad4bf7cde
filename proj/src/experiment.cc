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

#include "siot/experiment.h"

#include <algorithm>
#include <fstream>
#include <future>
#include <memory>

#include "json.hpp"
#include "siot/rng.h"
#include "siot/text.h"

namespace siot {
namespace {

constexpr std::uint64_t kEngineStream = 0xe1;
constexpr std::uint64_t kSweepStream = 0x5e;

constexpr std::size_t kAutoTrackedPerClass = 5;

std::string Optional(const std::optional<double>& v) {
  return v ? text::FormatFixed(*v) : "";
}

std::string BehaviorOf(const Trace& trace, ObjectId id) {
  const auto it = trace.behaviors.find(id);
  return std::string(BehaviorKindName(
      it == trace.behaviors.end() ? BehaviorKind::kGood : it->second.kind));
}

std::ofstream OpenCsv(const std::filesystem::path& dir,
                      const std::string& name) {
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw Error("cannot write " + (dir / name).string());
  return out;
}

void WriteDetectionCsv(const std::vector<DetectionReport>& reports,
                       const std::filesystem::path& dir) {
  std::ofstream out = OpenCsv(dir, "detection.csv");
  out << "scheme,at_event,true_malicious,detected,accuracy,good_nodes,"
         "false_positives,false_positive_rate\n";
  for (const DetectionReport& r : reports) {
    out << r.scheme << ',' << r.at_event << ',' << r.true_malicious << ','
        << r.detected << ',' << Optional(r.accuracy) << ',' << r.good_count
        << ',' << r.false_positives << ',' << Optional(r.false_positive_rate)
        << '\n';
  }
}

Trace GenerateWith(GeneratorConfig g, std::uint64_t seed) {
  g.seed = seed;
  return GenerateTrace(g);
}

}  // namespace

Trace PrepareTrace(const ExperimentConfig& config) {
  if (config.trace_path) return LoadTrace(*config.trace_path);
  return GenerateWith(config.generator, config.seed);
}

PolicyMap PoliciesFor(const Trace& trace, const ExperimentConfig& config) {
  return DefaultPolicies(trace.behaviors, config.malicious_kinds,
                         config.attacks);
}

EngineOptions EngineOptionsFor(const ExperimentConfig& config,
                               const WeightScheme& scheme) {
  EngineOptions options;
  options.scheme = scheme;
  options.theta = config.theta;
  options.window = config.window;
  options.seed = DeriveSeed(config.seed, kEngineStream);
  return options;
}

std::vector<ObjectId> TrackedNodes(const ExperimentConfig& config,
                                   const Trace& trace) {
  if (!config.tracked.empty()) {
    for (ObjectId id : config.tracked) {
      if (!trace.network.Contains(id)) throw UnknownObject(id);
    }
    return config.tracked;
  }
  std::vector<ObjectId> good, bad, dynamic;
  for (ObjectId id : trace.network.roster()) {
    const auto it = trace.behaviors.find(id);
    const BehaviorKind kind =
        it == trace.behaviors.end() ? BehaviorKind::kGood : it->second.kind;
    if (kind == BehaviorKind::kGood) {
      if (good.size() < kAutoTrackedPerClass) good.push_back(id);
    } else if (kind == BehaviorKind::kMalicious) {
      if (bad.size() < kAutoTrackedPerClass) bad.push_back(id);
    } else {
      dynamic.push_back(id);
    }
  }
  std::vector<ObjectId> out = good;
  out.insert(out.end(), bad.begin(), bad.end());
  out.insert(out.end(), dynamic.begin(), dynamic.end());
  std::sort(out.begin(), out.end());
  return out;
}

RunResult RunExperiment(const ExperimentConfig& config, const Trace& trace,
                        const WeightScheme& scheme) {
  const PolicyMap policies = PoliciesFor(trace, config);
  const std::vector<std::uint64_t> checkpoints =
      EffectiveCheckpoints(config, trace.events.size());

  RunResult result;
  result.scheme = scheme.ToString();
  result.snapshots =
      Run(trace, policies, EngineOptionsFor(config, scheme),
          checkpoints);
  result.detection = DetectionAccuracy(result.snapshots.back(), trace.behaviors,
                                       config.malicious_kinds, result.scheme);
  result.tracked = TrackedNodes(config, trace);
  result.trajectory = TrajectorySeries(result.snapshots, result.tracked);
  return result;
}

ComparisonResult SchemeComparison(const ExperimentConfig& config,
                                  const Trace& trace) {
  if (config.schemes.size() < 2) {
    throw ConfigError("scheme comparison needs at least two schemes");
  }
  std::vector<std::future<RunResult>> cells;
  for (const WeightScheme& scheme : config.schemes) {
    cells.push_back(std::async(std::launch::async, [&config, &trace, scheme] {
      return RunExperiment(config, trace, scheme);
    }));
  }
  ComparisonResult out;
  for (auto& cell : cells) {
    const RunResult r = cell.get();
    for (const TrajectoryRow& row : r.trajectory) {
      out.rows.push_back({r.scheme, row.node, row.checkpoint, row.score});
    }
    out.detections.push_back(r.detection);
  }
  return out;
}

std::vector<SweepRow> MaliciousSweep(const ExperimentConfig& config) {
  if (config.sweep_fractions.empty()) {
    throw ConfigError("malicious sweep needs at least one fraction");
  }
  if (config.trace_path) {
    throw ConfigError("malicious sweep generates its own traces; unset trace");
  }
  struct Cell {
    double fraction;
    std::shared_ptr<const Trace> trace;
    std::vector<std::future<RunResult>> runs;
  };
  std::vector<Cell> cells;
  for (std::size_t f = 0; f < config.sweep_fractions.size(); ++f) {
    GeneratorConfig g = config.generator;
    g.malicious_fraction = config.sweep_fractions[f];
    const std::uint32_t bad = g.malicious_count();
    g.on_off_count = std::min(g.on_off_count, bad);
    g.good_to_malicious_count =
        std::min(g.good_to_malicious_count, bad - g.on_off_count);
    g.malicious_to_good_count =
        std::min(g.malicious_to_good_count, g.object_count - bad);
    const std::uint64_t cell_seed = DeriveSeed(config.seed, kSweepStream + f);
    auto trace = std::make_shared<const Trace>(GenerateWith(g, cell_seed));

    Cell cell{g.malicious_fraction, trace, {}};
    for (const WeightScheme& scheme : config.schemes) {
      cell.runs.push_back(std::async(std::launch::async, [&config, trace,
                                                          scheme, cell_seed] {
        ExperimentConfig c = config;
        c.seed = cell_seed;
        c.checkpoints = {trace->events.size()};
        c.tracked.clear();
        return RunExperiment(c, *trace, scheme);
      }));
    }
    cells.push_back(std::move(cell));
  }

  std::vector<SweepRow> rows;
  for (Cell& cell : cells) {
    for (auto& run : cell.runs) {
      const RunResult r = run.get();
      rows.push_back({cell.fraction, r.scheme, r.detection,
                      MeanGoodScore(r.snapshots.back(), cell.trace->behaviors,
                                    config.malicious_kinds)});
    }
  }
  return rows;
}

std::vector<std::string> WriteRunOutputs(const ExperimentConfig& config,
                                         const Trace& trace,
                                         const RunResult& result,
                                         const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> files;
  for (const TrustSnapshot& snap : result.snapshots) {
    const std::string name =
        "snapshot_" + std::to_string(snap.at_event) + ".csv";
    std::ofstream out = OpenCsv(dir, name);
    out << "object,behavior,malicious,global_trust,label\n";
    for (const auto& [id, score] : snap.global_scores) {
      const auto b = trace.behaviors.find(id);
      const bool malicious =
          b != trace.behaviors.end() &&
          IsMaliciousFamily(b->second, config.malicious_kinds);
      out << id << ',' << BehaviorOf(trace, id) << ','
          << (malicious ? 1 : 0) << ',' << text::FormatFixed(score) << ','
          << VerdictName(snap.labels.at(id)) << '\n';
    }
    files.push_back(name);
  }

  {
    std::ofstream out = OpenCsv(dir, "trajectory.csv");
    out << "checkpoint,object,behavior,score\n";
    for (const TrajectoryRow& row : result.trajectory) {
      out << row.checkpoint << ',' << row.node << ','
          << BehaviorOf(trace, row.node) << ',' << text::FormatFixed(row.score)
          << '\n';
    }
    files.push_back("trajectory.csv");
  }

  WriteDetectionCsv({result.detection}, dir);
  files.push_back("detection.csv");
  return files;
}

std::vector<std::string> WriteComparisonOutputs(
    const Trace& trace, const ComparisonResult& result,
    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream out = OpenCsv(dir, "comparison.csv");
  out << "scheme,object,behavior,checkpoint,score\n";
  for (const ComparisonRow& row : result.rows) {
    out << row.scheme << ',' << row.node << ',' << BehaviorOf(trace, row.node)
        << ',' << row.checkpoint << ',' << text::FormatFixed(row.score) << '\n';
  }
  WriteDetectionCsv(result.detections, dir);
  return {"comparison.csv", "detection.csv"};
}

std::vector<std::string> WriteSweepOutputs(const std::vector<SweepRow>& rows,
                                           const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream out = OpenCsv(dir, "sweep.csv");
  out << "fraction,scheme,true_malicious,detected,accuracy,good_nodes,"
         "false_positives,mean_good_score\n";
  for (const SweepRow& row : rows) {
    const DetectionReport& d = row.detection;
    out << text::FormatDouble(row.fraction) << ',' << row.scheme << ','
        << d.true_malicious << ',' << d.detected << ',' << Optional(d.accuracy)
        << ',' << d.good_count << ',' << d.false_positives << ','
        << Optional(row.mean_good_score) << '\n';
  }
  return {"sweep.csv"};
}

void WriteManifest(const ExperimentConfig& config, std::string_view command,
                   const std::vector<std::string>& outputs,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json doc;
  doc["tool"] = "siot-trust";
  doc["manifest_version"] = kManifestVersion;
  doc["trace_format_version"] = kTraceFormatVersion;
  doc["command"] = std::string(command);
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config.ToKeyValues()) cfg[k] = v;
  doc["config"] = cfg;
  doc["csv_schemas"] = {
      {"snapshot", "object,behavior,malicious,global_trust,label"},
      {"trajectory", "checkpoint,object,behavior,score"},
      {"detection",
       "scheme,at_event,true_malicious,detected,accuracy,good_nodes,"
       "false_positives,false_positive_rate"},
      {"comparison", "scheme,object,behavior,checkpoint,score"},
      {"sweep",
       "fraction,scheme,true_malicious,detected,accuracy,good_nodes,"
       "false_positives,mean_good_score"},
  };
  doc["outputs"] = outputs;
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  if (!out) throw Error("cannot write " + (dir / "manifest.json").string());
  out << doc.dump(2) << '\n';
}

}  // namespace siot
