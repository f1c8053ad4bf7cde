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

#include "siot/metrics.h"

namespace siot {

std::set<BehaviorKind> DefaultMaliciousKinds() {
  return {BehaviorKind::kMalicious, BehaviorKind::kGoodToMalicious,
          BehaviorKind::kOnOff};
}

bool IsMaliciousFamily(const BehaviorModel& model,
                       const std::set<BehaviorKind>& malicious_kinds) {
  return malicious_kinds.contains(model.kind);
}

namespace {

bool MaliciousOf(ObjectId id, const BehaviorMap& behaviors,
                 const std::set<BehaviorKind>& malicious_kinds) {
  const auto it = behaviors.find(id);
  return it != behaviors.end() && IsMaliciousFamily(it->second, malicious_kinds);
}

}  // namespace

DetectionReport DetectionAccuracy(const TrustSnapshot& snapshot,
                                  const BehaviorMap& behaviors,
                                  const std::set<BehaviorKind>& malicious_kinds,
                                  std::string scheme) {
  DetectionReport report;
  report.scheme = std::move(scheme);
  report.at_event = snapshot.at_event;
  for (const auto& [id, label] : snapshot.labels) {
    const bool flagged = label == Verdict::kUntrustworthy;
    if (MaliciousOf(id, behaviors, malicious_kinds)) {
      ++report.true_malicious;
      if (flagged) ++report.detected;
    } else {
      ++report.good_count;
      if (flagged) ++report.false_positives;
    }
  }
  if (report.true_malicious > 0) {
    report.accuracy = static_cast<double>(report.detected) /
                      static_cast<double>(report.true_malicious);
  }
  if (report.good_count > 0) {
    report.false_positive_rate = static_cast<double>(report.false_positives) /
                                 static_cast<double>(report.good_count);
  }
  return report;
}

std::optional<double> MeanGoodScore(
    const TrustSnapshot& snapshot, const BehaviorMap& behaviors,
    const std::set<BehaviorKind>& malicious_kinds) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& [id, score] : snapshot.global_scores) {
    if (MaliciousOf(id, behaviors, malicious_kinds)) continue;
    sum += score;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::vector<TrajectoryRow> TrajectorySeries(
    std::span<const TrustSnapshot> snapshots, std::span<const ObjectId> nodes) {
  std::vector<TrajectoryRow> rows;
  rows.reserve(snapshots.size() * nodes.size());
  for (const TrustSnapshot& snap : snapshots) {
    for (ObjectId node : nodes) {
      const auto it = snap.global_scores.find(node);
      if (it == snap.global_scores.end()) throw UnknownObject(node);
      rows.push_back({snap.at_event, node, it->second});
    }
  }
  return rows;
}

}  // namespace siot
