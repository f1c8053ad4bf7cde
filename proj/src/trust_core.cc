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

#include "siot/trust_core.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "siot/text.h"

namespace siot {

WeightScheme WeightScheme::Create(double w1, double w2, double w3,
                                  std::string name) {
  if (!(w1 >= 0.0) || !(w2 >= 0.0) || !(w3 >= 0.0)) {
    throw InvalidArgument("weight scheme weights must be non-negative");
  }
  if (std::abs(w1 + w2 + w3 - 1.0) > kSumTolerance) {
    throw InvalidArgument("weight scheme weights must sum to 1, got " +
                          text::FormatDouble(w1 + w2 + w3));
  }
  return WeightScheme(w1, w2, w3, std::move(name));
}

WeightScheme WeightScheme::Ws1() { return WeightScheme(0.5, 0.3, 0.2, "ws1"); }

WeightScheme WeightScheme::Ws2() { return WeightScheme(0.4, 0.3, 0.3, "ws2"); }

WeightScheme WeightScheme::Mean() {
  constexpr double kThird = 1.0 / 3.0;
  return WeightScheme(kThird, kThird, kThird, "mean");
}

WeightScheme WeightScheme::Parse(std::string_view input) {
  const std::string lowered = text::ToLower(text::Trim(input));
  if (lowered == "ws1" || lowered == "ws-1") return Ws1();
  if (lowered == "ws2" || lowered == "ws-2") return Ws2();
  if (lowered == "mean") return Mean();

  const std::vector<std::string> parts = text::Split(lowered, ',');
  if (parts.size() != 3) {
    throw InvalidArgument("unrecognized weight scheme '" + std::string(input) +
                          "' (expected ws1, ws2, mean or w1,w2,w3)");
  }
  return Create(text::ParseDouble(parts[0]), text::ParseDouble(parts[1]),
                text::ParseDouble(parts[2]), "custom");
}

std::string WeightScheme::ToString() const {
  if (name_ != "custom") return name_;
  return text::FormatDouble(w1_) + "," + text::FormatDouble(w2_) + "," +
         text::FormatDouble(w3_);
}

std::string_view VerdictName(Verdict v) {
  return v == Verdict::kTrustworthy ? "trustworthy" : "untrustworthy";
}

double DirectTrust(const InteractionCounts& counts) {
  return (static_cast<double>(counts.positive) + 1.0) /
         (static_cast<double>(counts.total()) + 2.0);
}

double RecommendationTrust(std::span<const double> recommender_scores) {
  if (recommender_scores.empty()) throw NoRecommenders();
  const double sum = std::accumulate(recommender_scores.begin(),
                                     recommender_scores.end(), 0.0);
  return sum / static_cast<double>(recommender_scores.size());
}

double CoiSimilarity(const std::set<CommunityId>& a,
                     const std::set<CommunityId>& b) {
  return JaccardSimilarity(a, b);
}

double FriendshipSimilarity(const std::set<ObjectId>& a,
                            const std::set<ObjectId>& b) {
  return JaccardSimilarity(a, b);
}

double CoworkSimilarity(const std::set<GroupId>& a,
                        const std::set<GroupId>& b) {
  return CosineSimilarity(a, b);
}

double SocialSimilarity(std::span<const double> measures) {
  if (measures.empty()) throw NoSimilarityData();
  const double sum = std::accumulate(measures.begin(), measures.end(), 0.0);
  return sum / static_cast<double>(measures.size());
}

EffectiveWeights ResolveScenario(const TrustFeatures& features,
                                 const WeightScheme& scheme) {
  const double w1 = scheme.direct();
  const double w2 = scheme.social();
  const double w3 = scheme.recommendation();
  const bool dt = features.direct.has_value();
  const bool ss = features.social.has_value();
  const bool r = features.recommendation.has_value();

  if (dt && ss && r) return {w1, w2, w3, 1};
  if (dt && !ss && r) return {w1 + w2, 0.0, w3, 2};
  if (dt && ss && !r) return {w1 + w3, w2, 0.0, 3};
  if (!dt && ss && r) return {0.0, w2, w3 + w1, 4};
  if (dt && !ss && !r) return {w1 + w2 + w3, 0.0, 0.0, 5};
  if (!dt && !ss && r) return {0.0, 0.0, w1 + w2 + w3, 6};
  if (!dt && ss && !r) return {0.0, w1 + w2 + w3, 0.0, 7};
  throw NoTrustEvidence();
}

double FinalTrust(const TrustFeatures& features, const WeightScheme& scheme) {
  const EffectiveWeights w = ResolveScenario(features, scheme);
  double score = 0.0;
  if (features.direct) score += w.direct * *features.direct;
  if (features.social) score += w.social * *features.social;
  if (features.recommendation) {
    score += w.recommendation * *features.recommendation;
  }
  // Rounding can push a convex combination a few ulps outside [0, 1].
  return std::clamp(score, 0.0, 1.0);
}

Verdict Classify(double score, double theta) {
  return score > theta ? Verdict::kTrustworthy : Verdict::kUntrustworthy;
}

}  // namespace siot
