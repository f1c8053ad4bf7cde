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

// Actor policies: how well an object serves the objects that interact with it
// over time, and how honestly it reports its opinion of others.

#ifndef SIOT_BEHAVIOR_H_
#define SIOT_BEHAVIOR_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "siot/rng.h"
#include "siot/types.h"

namespace siot {

enum class BehaviorKind {
  kGood,
  kMalicious,
  kGoodToMalicious,
  kMaliciousToGood,
  kOnOff,
};

// "good", "malicious", "good_to_malicious", "malicious_to_good", "on_off".
std::string_view BehaviorKindName(BehaviorKind kind);
BehaviorKind ParseBehaviorKind(std::string_view name);

enum class Outcome { kPositive, kNegative };

struct BehaviorModel {
  BehaviorKind kind = BehaviorKind::kGood;
  // Probability that an interaction in a good phase is rated positive.
  double p_good_service = 0.9;
  // Same, for a malicious phase.
  double p_bad_service = 0.2;
  // Fraction of the planned interactions after which two-phase kinds flip.
  double switch_point = 0.5;
  // Interactions per phase for kOnOff; the first phase is good.
  std::uint64_t on_off_period = 1;

  // Throws InvalidArgument unless 0 <= p_bad < p_good <= 1,
  // 0 < switch_point < 1 and on_off_period >= 1.
  void Validate() const;

  // Whether the `index`-th of `total_planned` interactions is served in the
  // good phase.
  bool InGoodPhase(std::uint64_t index, std::uint64_t total_planned) const;

  friend bool operator==(const BehaviorModel&, const BehaviorModel&) = default;
};

using BehaviorMap = std::map<ObjectId, BehaviorModel>;

// Draws the outcome of the `index`-th interaction served by an actor that
// has `total_planned` interactions in the whole trace. Requires
// index < total_planned.
Outcome ServiceOutcome(const BehaviorModel& model, std::uint64_t index,
                       std::uint64_t total_planned, Rng& rng);

enum class RecommendationKind {
  kHonest,
  kBadMouthing,
  kBallotStuffing,
  // Bad-mouths one set and ballot-stuffs another.
  kColluding,
};

class RecommendationPolicy {
 public:
  RecommendationPolicy() = default;

  static RecommendationPolicy Honest() { return {}; }
  // Reports 0 about every target. Throws InvalidArgument on an empty set.
  static RecommendationPolicy BadMouthing(std::set<ObjectId> targets);
  // Reports 1 about every target. Throws InvalidArgument on an empty set.
  static RecommendationPolicy BallotStuffing(std::set<ObjectId> targets);
  // Throws InvalidArgument if both sets are empty or they overlap.
  static RecommendationPolicy Colluding(std::set<ObjectId> bad_mouthed,
                                        std::set<ObjectId> ballot_stuffed);

  RecommendationKind kind() const;
  const std::set<ObjectId>& bad_mouthed() const { return bad_mouthed_; }
  const std::set<ObjectId>& ballot_stuffed() const { return ballot_stuffed_; }

 private:
  std::set<ObjectId> bad_mouthed_;
  std::set<ObjectId> ballot_stuffed_;
};

// Objects without an entry recommend honestly.
using PolicyMap = std::map<ObjectId, RecommendationPolicy>;

// What a recommender tells a trustor about `about`, given its true direct
// trust in it.
double ReportedDirectTrust(const RecommendationPolicy& policy,
                           double true_score, ObjectId about);

struct AttackOptions {
  bool bad_mouthing = true;
  bool ballot_stuffing = true;
};

// Every actor whose kind is in `dishonest_kinds` bad-mouths the remaining
// actors and ballot-stuffs its fellow dishonest actors, per `attacks`.
PolicyMap DefaultPolicies(const BehaviorMap& behaviors,
                          const std::set<BehaviorKind>& dishonest_kinds,
                          const AttackOptions& attacks = {});

}  // namespace siot

#endif  // SIOT_BEHAVIOR_H_
