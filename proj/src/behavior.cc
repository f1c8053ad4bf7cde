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

#include "siot/behavior.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "siot/text.h"

namespace siot {

std::string_view BehaviorKindName(BehaviorKind kind) {
  switch (kind) {
    case BehaviorKind::kGood:
      return "good";
    case BehaviorKind::kMalicious:
      return "malicious";
    case BehaviorKind::kGoodToMalicious:
      return "good_to_malicious";
    case BehaviorKind::kMaliciousToGood:
      return "malicious_to_good";
    case BehaviorKind::kOnOff:
      return "on_off";
  }
  return "unknown";
}

BehaviorKind ParseBehaviorKind(std::string_view name) {
  std::string n = text::ToLower(text::Trim(name));
  std::replace(n.begin(), n.end(), '-', '_');
  for (BehaviorKind k :
       {BehaviorKind::kGood, BehaviorKind::kMalicious,
        BehaviorKind::kGoodToMalicious, BehaviorKind::kMaliciousToGood,
        BehaviorKind::kOnOff}) {
    if (n == BehaviorKindName(k)) return k;
  }
  throw InvalidArgument("unknown behavior kind '" + std::string(name) + "'");
}

void BehaviorModel::Validate() const {
  if (!(p_bad_service >= 0.0 && p_bad_service < p_good_service &&
        p_good_service <= 1.0)) {
    throw InvalidArgument(
        "behavior requires 0 <= p_bad_service < p_good_service <= 1");
  }
  if (!(switch_point > 0.0 && switch_point < 1.0)) {
    throw InvalidArgument("behavior switch_point must lie in (0, 1)");
  }
  if (on_off_period < 1) {
    throw InvalidArgument("behavior on_off_period must be at least 1");
  }
}

bool BehaviorModel::InGoodPhase(std::uint64_t index,
                                std::uint64_t total_planned) const {
  const auto switch_index = static_cast<std::uint64_t>(
      std::floor(switch_point * static_cast<double>(total_planned)));
  switch (kind) {
    case BehaviorKind::kGood:
      return true;
    case BehaviorKind::kMalicious:
      return false;
    case BehaviorKind::kGoodToMalicious:
      return index < switch_index;
    case BehaviorKind::kMaliciousToGood:
      return index >= switch_index;
    case BehaviorKind::kOnOff:
      return (index / on_off_period) % 2 == 0;
  }
  return true;
}

Outcome ServiceOutcome(const BehaviorModel& model, std::uint64_t index,
                       std::uint64_t total_planned, Rng& rng) {
  if (index >= total_planned) {
    throw InvalidArgument("interaction index " + std::to_string(index) +
                          " is outside the " + std::to_string(total_planned) +
                          " planned interactions");
  }
  const double p = model.InGoodPhase(index, total_planned)
                       ? model.p_good_service
                       : model.p_bad_service;
  return rng.Bernoulli(p) ? Outcome::kPositive : Outcome::kNegative;
}

RecommendationPolicy RecommendationPolicy::BadMouthing(
    std::set<ObjectId> targets) {
  if (targets.empty()) {
    throw InvalidArgument("bad-mouthing policy needs at least one target");
  }
  RecommendationPolicy p;
  p.bad_mouthed_ = std::move(targets);
  return p;
}

RecommendationPolicy RecommendationPolicy::BallotStuffing(
    std::set<ObjectId> targets) {
  if (targets.empty()) {
    throw InvalidArgument("ballot-stuffing policy needs at least one target");
  }
  RecommendationPolicy p;
  p.ballot_stuffed_ = std::move(targets);
  return p;
}

RecommendationPolicy RecommendationPolicy::Colluding(
    std::set<ObjectId> bad_mouthed, std::set<ObjectId> ballot_stuffed) {
  if (bad_mouthed.empty() && ballot_stuffed.empty()) {
    throw InvalidArgument("colluding policy needs at least one target");
  }
  for (ObjectId id : bad_mouthed) {
    if (ballot_stuffed.contains(id)) {
      throw InvalidArgument("object " + ToString(id) +
                            " is both bad-mouthed and ballot-stuffed");
    }
  }
  RecommendationPolicy p;
  p.bad_mouthed_ = std::move(bad_mouthed);
  p.ballot_stuffed_ = std::move(ballot_stuffed);
  return p;
}

RecommendationKind RecommendationPolicy::kind() const {
  if (bad_mouthed_.empty() && ballot_stuffed_.empty()) {
    return RecommendationKind::kHonest;
  }
  if (ballot_stuffed_.empty()) return RecommendationKind::kBadMouthing;
  if (bad_mouthed_.empty()) return RecommendationKind::kBallotStuffing;
  return RecommendationKind::kColluding;
}

double ReportedDirectTrust(const RecommendationPolicy& policy,
                           double true_score, ObjectId about) {
  if (policy.bad_mouthed().contains(about)) return 0.0;
  if (policy.ballot_stuffed().contains(about)) return 1.0;
  return true_score;
}

PolicyMap DefaultPolicies(const BehaviorMap& behaviors,
                          const std::set<BehaviorKind>& dishonest_kinds,
                          const AttackOptions& attacks) {
  std::set<ObjectId> dishonest;
  std::set<ObjectId> honest;
  for (const auto& [id, model] : behaviors) {
    (dishonest_kinds.contains(model.kind) ? dishonest : honest).insert(id);
  }

  PolicyMap policies;
  for (ObjectId id : dishonest) {
    std::set<ObjectId> victims = attacks.bad_mouthing ? honest
                                                      : std::set<ObjectId>{};
    std::set<ObjectId> allies;
    if (attacks.ballot_stuffing) {
      allies = dishonest;
      allies.erase(id);
    }
    if (victims.empty() && allies.empty()) continue;
    policies.emplace(id, RecommendationPolicy::Colluding(std::move(victims),
                                                         std::move(allies)));
  }
  return policies;
}

}  // namespace siot
