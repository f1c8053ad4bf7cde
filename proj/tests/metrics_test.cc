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

#include <vector>

#include "gtest/gtest.h"

namespace siot {
namespace {

BehaviorModel Kind(BehaviorKind k) {
  BehaviorModel m;
  m.kind = k;
  return m;
}

// Objects 0..malicious-1 are malicious, the rest good. The first `detected`
// malicious and the first `false_pos` good objects score 0.2, others 0.8.
struct Population {
  Population(int malicious, int good, int detected, int false_pos) {
    snap.at_event = 20000;
    for (int k = 0; k < malicious + good; ++k) {
      const ObjectId id(static_cast<std::uint32_t>(k));
      const bool bad = k < malicious;
      behaviors[id] = Kind(bad ? BehaviorKind::kMalicious : BehaviorKind::kGood);
      const bool flagged = bad ? k < detected : k - malicious < false_pos;
      const double score = flagged ? 0.2 : 0.8;
      snap.global_scores[id] = score;
      snap.labels[id] = Classify(score);
    }
  }
  TrustSnapshot snap;
  BehaviorMap behaviors;
};

TEST(DetectionTest, FourteenOfFifteen) {
  const Population p(15, 135, 14, 2);
  const DetectionReport r = DetectionAccuracy(p.snap, p.behaviors, {}, "ws1");
  EXPECT_EQ(r.scheme, "ws1");
  EXPECT_EQ(r.at_event, 20000u);
  EXPECT_EQ(r.true_malicious, 0u);  // empty kind set: nobody is malicious
  const DetectionReport d = DetectionAccuracy(p.snap, p.behaviors);
  EXPECT_EQ(d.true_malicious, 15u);
  EXPECT_EQ(d.detected, 14u);
  EXPECT_NEAR(*d.accuracy, 0.933, 1e-3);
  EXPECT_EQ(d.good_count, 135u);
  EXPECT_EQ(d.false_positives, 2u);
  EXPECT_NEAR(*d.false_positive_rate, 2.0 / 135.0, 1e-12);
}

TEST(DetectionTest, AbsentRatios) {
  const Population none_bad(0, 10, 0, 0);
  EXPECT_FALSE(DetectionAccuracy(none_bad.snap, none_bad.behaviors)
                   .accuracy.has_value());
  const Population all_bad(10, 0, 4, 0);
  const DetectionReport r = DetectionAccuracy(all_bad.snap, all_bad.behaviors);
  EXPECT_NEAR(*r.accuracy, 0.4, 1e-12);
  EXPECT_FALSE(r.false_positive_rate.has_value());
  EXPECT_FALSE(MeanGoodScore(all_bad.snap, all_bad.behaviors).has_value());
}

TEST(DetectionTest, MaliciousFamilyIsConfigurable) {
  TrustSnapshot snap;
  BehaviorMap b;
  b[ObjectId(0)] = Kind(BehaviorKind::kMaliciousToGood);
  b[ObjectId(1)] = Kind(BehaviorKind::kOnOff);
  for (std::uint32_t k = 0; k < 2; ++k) {
    snap.global_scores[ObjectId(k)] = 0.3;
    snap.labels[ObjectId(k)] = Verdict::kUntrustworthy;
  }
  EXPECT_EQ(DetectionAccuracy(snap, b).true_malicious, 1u);
  EXPECT_EQ(DetectionAccuracy(snap, b, {BehaviorKind::kMaliciousToGood,
                                        BehaviorKind::kOnOff})
                .true_malicious,
            2u);
  EXPECT_TRUE(IsMaliciousFamily(Kind(BehaviorKind::kGoodToMalicious),
                                DefaultMaliciousKinds()));
  EXPECT_FALSE(IsMaliciousFamily(Kind(BehaviorKind::kMaliciousToGood),
                                 DefaultMaliciousKinds()));
}

TEST(MeanGoodScoreTest, AveragesGoodNodesOnly) {
  const Population p(2, 4, 2, 1);
  EXPECT_NEAR(*MeanGoodScore(p.snap, p.behaviors), (0.2 + 3 * 0.8) / 4, 1e-12);
}

TEST(TrajectoryTest, RowsPerCheckpointAndNode) {
  std::vector<TrustSnapshot> snaps(2);
  snaps[0].at_event = 10;
  snaps[1].at_event = 20;
  for (std::uint32_t k = 0; k < 3; ++k) {
    snaps[0].global_scores[ObjectId(k)] = 0.1 * k;
    snaps[1].global_scores[ObjectId(k)] = 0.2 * k;
  }
  const std::vector<ObjectId> nodes = {ObjectId(2), ObjectId(0)};
  const auto rows = TrajectorySeries(snaps, nodes);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (TrajectoryRow{10, ObjectId(2), 0.1 * 2}));
  EXPECT_EQ(rows[1], (TrajectoryRow{10, ObjectId(0), 0.0}));
  EXPECT_EQ(rows[3], (TrajectoryRow{20, ObjectId(0), 0.0}));
  const std::vector<ObjectId> missing = {ObjectId(9)};
  EXPECT_THROW(TrajectorySeries(snaps, missing), UnknownObject);
}

}  // namespace
}  // namespace siot
