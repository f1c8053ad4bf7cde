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

#ifndef SIOT_METRICS_H_
#define SIOT_METRICS_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "siot/behavior.h"
#include "siot/engine.h"
#include "siot/types.h"

namespace siot {

// Kinds counted as malicious when scoring detection: {Malicious,
// GoodToMalicious, OnOff}. MaliciousToGood ends as a good actor.
std::set<BehaviorKind> DefaultMaliciousKinds();

bool IsMaliciousFamily(const BehaviorModel& model,
                       const std::set<BehaviorKind>& malicious_kinds);

struct DetectionReport {
  std::string scheme;
  std::uint64_t at_event = 0;
  std::size_t true_malicious = 0;
  // Malicious-family objects labeled untrustworthy.
  std::size_t detected = 0;
  std::size_t good_count = 0;
  // Good-family objects labeled untrustworthy.
  std::size_t false_positives = 0;
  // detected / true_malicious; absent without malicious objects.
  std::optional<double> accuracy;
  // false_positives / good_count; absent without good objects.
  std::optional<double> false_positive_rate;
};

// Objects without a behavior entry count as good.
DetectionReport DetectionAccuracy(
    const TrustSnapshot& snapshot, const BehaviorMap& behaviors,
    const std::set<BehaviorKind>& malicious_kinds = DefaultMaliciousKinds(),
    std::string scheme = {});

// Mean global trust of good-family objects; absent when there are none.
std::optional<double> MeanGoodScore(
    const TrustSnapshot& snapshot, const BehaviorMap& behaviors,
    const std::set<BehaviorKind>& malicious_kinds = DefaultMaliciousKinds());

struct TrajectoryRow {
  std::uint64_t checkpoint = 0;
  ObjectId node;
  double score = 0.0;

  friend bool operator==(const TrajectoryRow&, const TrajectoryRow&) = default;
};

// One row per (snapshot, node), snapshot-major, holding global trust.
// Throws UnknownObject for a node missing from the snapshots.
std::vector<TrajectoryRow> TrajectorySeries(
    std::span<const TrustSnapshot> snapshots, std::span<const ObjectId> nodes);

}  // namespace siot

#endif  // SIOT_METRICS_H_
