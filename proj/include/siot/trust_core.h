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

// Stateless trust formulas: beta-posterior direct trust, recommendation
// averaging, set similarities, scenario-aware weighted fusion and the
// threshold decision. Every function here is pure and thread-safe.
//
// Trust values are plain doubles in [0, 1].

#ifndef SIOT_TRUST_CORE_H_
#define SIOT_TRUST_CORE_H_

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "siot/types.h"

namespace siot {

class NoRecommenders : public Error {
 public:
  NoRecommenders() : Error("no recommenders") {}
};

class NoSimilarityData : public Error {
 public:
  NoSimilarityData() : Error("no similarity data") {}
};

class NoTrustEvidence : public Error {
 public:
  NoTrustEvidence() : Error("no trust evidence") {}
};

// Positive/negative outcome counters for one (trustor, trustee) pair.
struct InteractionCounts {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;

  std::uint64_t total() const { return positive + negative; }
  friend bool operator==(const InteractionCounts&,
                         const InteractionCounts&) = default;
};

// Weights for (direct, social similarity, recommendation). Non-negative and
// summing to one.
class WeightScheme {
 public:
  // Throws InvalidArgument if a weight is negative or the sum is off by more
  // than kSumTolerance.
  static WeightScheme Create(double w1, double w2, double w3,
                             std::string name = "custom");

  static WeightScheme Ws1();   // 0.5 / 0.3 / 0.2
  static WeightScheme Ws2();   // 0.4 / 0.3 / 0.3
  static WeightScheme Mean();  // exact thirds

  // Accepts "ws1", "ws2", "mean" (case-insensitive) or "w1,w2,w3".
  static WeightScheme Parse(std::string_view text);

  double direct() const { return w1_; }
  double social() const { return w2_; }
  double recommendation() const { return w3_; }
  const std::string& name() const { return name_; }

  // Canonical text form accepted by Parse().
  std::string ToString() const;

  static constexpr double kSumTolerance = 1e-9;

 private:
  WeightScheme(double w1, double w2, double w3, std::string name)
      : w1_(w1), w2_(w2), w3_(w3), name_(std::move(name)) {}

  double w1_;
  double w2_;
  double w3_;
  std::string name_;
};

// The optional trust features available for one trustor/trustee pair.
struct TrustFeatures {
  std::optional<double> direct;
  std::optional<double> social;
  std::optional<double> recommendation;

  bool empty() const { return !direct && !social && !recommendation; }
};

// Feature weights after redistributing the weight of absent features.
struct EffectiveWeights {
  double direct = 0.0;
  double social = 0.0;
  double recommendation = 0.0;
  // 1..6 follow the standard availability table; 7 is the social-only case,
  // which the table does not list and is handled as an extension.
  int scenario = 0;

  bool is_extension() const { return scenario == 7; }
  double sum() const { return direct + social + recommendation; }
};

enum class Verdict { kTrustworthy, kUntrustworthy };

std::string_view VerdictName(Verdict v);

inline constexpr double kDefaultTheta = 0.5;

// (P + 1) / (P + N + 2): mean of the Beta(P+1, N+1) posterior.
double DirectTrust(const InteractionCounts& counts);

// Arithmetic mean of the recommenders' direct trust. Throws NoRecommenders
// on an empty list.
double RecommendationTrust(std::span<const double> recommender_scores);

// Jaccard |A ∩ B| / |A ∪ B|; 0 when both sets are empty.
template <typename T>
double JaccardSimilarity(const std::set<T>& a, const std::set<T>& b);

// Cosine over set indicators |A ∩ B| / sqrt(|A| |B|); 0 when either is empty.
template <typename T>
double CosineSimilarity(const std::set<T>& a, const std::set<T>& b);

double CoiSimilarity(const std::set<CommunityId>& a,
                     const std::set<CommunityId>& b);
double FriendshipSimilarity(const std::set<ObjectId>& a,
                            const std::set<ObjectId>& b);
double CoworkSimilarity(const std::set<GroupId>& a,
                        const std::set<GroupId>& b);

// Mean of the available similarity measures. Throws NoSimilarityData on an
// empty list.
double SocialSimilarity(std::span<const double> measures);

// Throws NoTrustEvidence when no feature is present.
EffectiveWeights ResolveScenario(const TrustFeatures& features,
                                 const WeightScheme& scheme);

// Weighted sum of the present features under ResolveScenario's weights.
double FinalTrust(const TrustFeatures& features, const WeightScheme& scheme);

// Strict: a score equal to theta is untrustworthy.
Verdict Classify(double score, double theta = kDefaultTheta);

// ---------------------------------------------------------------------------
// Template implementations.

namespace internal {

template <typename T>
std::size_t IntersectionSize(const std::set<T>& a, const std::set<T>& b) {
  std::size_t n = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++n;
      ++ia;
      ++ib;
    }
  }
  return n;
}

}  // namespace internal

template <typename T>
double JaccardSimilarity(const std::set<T>& a, const std::set<T>& b) {
  const std::size_t common = internal::IntersectionSize(a, b);
  const std::size_t all = a.size() + b.size() - common;
  if (all == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(all);
}

template <typename T>
double CosineSimilarity(const std::set<T>& a, const std::set<T>& b) {
  if (a.empty() || b.empty()) return 0.0;
  const std::size_t common = internal::IntersectionSize(a, b);
  return static_cast<double>(common) /
         std::sqrt(static_cast<double>(a.size()) *
                   static_cast<double>(b.size()));
}

}  // namespace siot

#endif  // SIOT_TRUST_CORE_H_
