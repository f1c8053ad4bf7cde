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

#include "siot/social_graph.h"

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "siot/trace.h"

namespace siot {
namespace {

ObjectId Id(std::uint32_t v) { return ObjectId(v); }

void ExpectSymmetric(const Network& net) {
  for (ObjectId a : net.roster()) {
    EXPECT_FALSE(net.Profile(a).friends.contains(a));
    for (ObjectId b : net.Profile(a).friends) {
      ASSERT_TRUE(net.Contains(b));
      EXPECT_TRUE(net.Profile(b).friends.contains(a))
          << a << " lists " << b << " but not the reverse";
    }
  }
}

TEST(NetworkTest, AddObjectMirrorsFriendship) {
  Network net;
  net.AddObject(Id(1), {});
  net.AddObject(Id(2), {{Id(1)}, {}, {}});
  EXPECT_EQ(net.NeighborsOf(Id(1)), std::vector<ObjectId>{Id(2)});
  EXPECT_EQ(net.NeighborsOf(Id(2)), std::vector<ObjectId>{Id(1)});
  ExpectSymmetric(net);
}

TEST(NetworkTest, NeighborsAreSorted) {
  Network net;
  net.AddObjects({{Id(5), {}}, {Id(3), {}}, {Id(9), {{Id(5), Id(3)}, {}, {}}}});
  EXPECT_EQ(net.NeighborsOf(Id(9)), (std::vector<ObjectId>{Id(3), Id(5)}));
  EXPECT_EQ(net.roster(), (std::vector<ObjectId>{Id(3), Id(5), Id(9)}));
  EXPECT_TRUE(net.NeighborsOf(Id(3)).size() == 1);
}

TEST(NetworkTest, IsolatedObjectHasNoNeighbors) {
  Network net;
  net.AddObject(Id(0), {});
  EXPECT_TRUE(net.NeighborsOf(Id(0)).empty());
}

TEST(NetworkTest, RejectsDuplicatesSelfFriendsAndDanglingReferences) {
  Network net;
  net.AddObject(Id(1), {});
  EXPECT_THROW(net.AddObject(Id(1), {}), InvalidArgument);
  EXPECT_THROW(net.AddObject(Id(2), {{Id(2)}, {}, {}}), InvalidArgument);
  EXPECT_THROW(net.AddObject(Id(3), {{Id(77)}, {}, {}}), InvalidArgument);
  EXPECT_THROW(net.AddFriendship(Id(1), Id(1)), InvalidArgument);
  EXPECT_THROW(net.AddFriendship(Id(1), Id(42)), UnknownObject);
  EXPECT_EQ(net.size(), 1u);
}

TEST(NetworkTest, FailedBatchLeavesNetworkUntouched) {
  Network net;
  net.AddObject(Id(1), {});
  const Network before = net;
  EXPECT_THROW(net.AddObjects({{Id(2), {{Id(1)}, {}, {}}},
                               {Id(3), {{Id(99)}, {}, {}}}}),
               InvalidArgument);
  EXPECT_EQ(net, before);
  EXPECT_THROW(net.AddObjects({{Id(4), {}}, {Id(4), {}}}), InvalidArgument);
  EXPECT_EQ(net, before);
}

TEST(NetworkTest, BatchMayReferenceItsOwnMembers) {
  Network net;
  net.AddObjects({{Id(1), {{Id(2)}, {}, {}}}, {Id(2), {}}});
  EXPECT_TRUE(net.Profile(Id(2)).friends.contains(Id(1)));
}

TEST(NetworkTest, UnknownIdsThrow) {
  Network net;
  net.AddObject(Id(1), {});
  EXPECT_THROW(net.Profile(Id(2)), UnknownObject);
  EXPECT_THROW(net.NeighborsOf(Id(2)), UnknownObject);
  EXPECT_THROW(net.IndexOf(Id(2)), UnknownObject);
  EXPECT_THROW(net.SimilarityFeatures(Id(1), Id(2)), UnknownObject);
}

TEST(SimilarityFeaturesTest, FullyPopulatedProfiles) {
  // CoI {1,2} vs {2,3}: 1/3. Friends {10,11,12} vs {11,12,13}: 1/2.
  // Groups {1,2,3,4} vs {1,2}: 2/sqrt(8).
  Network net;
  net.AddObjects({{Id(10), {}}, {Id(11), {}}, {Id(12), {}}, {Id(13), {}}});
  net.AddObject(Id(1), {{Id(10), Id(11), Id(12)}, {1, 2}, {1, 2, 3, 4}});
  net.AddObject(Id(2), {{Id(11), Id(12), Id(13)}, {2, 3}, {1, 2}});
  const auto s = net.SimilarityFeatures(Id(1), Id(2));
  ASSERT_TRUE(s.has_value());
  EXPECT_NEAR(*s, (1.0 / 3.0 + 0.5 + 2.0 / std::sqrt(8.0)) / 3.0, 1e-9);
  EXPECT_NEAR(*s, (1.0 / 3 + 0.5 + 2 / std::sqrt(8.0)) / 3, 1e-12);
}

TEST(SimilarityFeaturesTest, EmptyProfilesGiveNoSocialFeature) {
  Network net;
  net.AddObjects({{Id(1), {}}, {Id(2), {}}});
  EXPECT_FALSE(net.SimilarityFeatures(Id(1), Id(2)).has_value());
}

TEST(SimilarityFeaturesTest, MetricsMissingOnEitherSideAreExcluded) {
  Network net;
  net.AddObject(Id(1), {{}, {1, 2}, {7}});
  net.AddObject(Id(2), {{}, {2, 3}, {}});
  // Only communities are populated on both sides.
  EXPECT_NEAR(*net.SimilarityFeatures(Id(1), Id(2)), 1.0 / 3.0, 1e-9);
}

TEST(SimilarityFeaturesTest, DisjointDataGivesZeroNotAbsent) {
  Network net;
  net.AddObject(Id(1), {{}, {1}, {}});
  net.AddObject(Id(2), {{}, {2}, {}});
  const auto s = net.SimilarityFeatures(Id(1), Id(2));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, 0.0);
}

TEST(SimilarityFeaturesTest, SelfSimilarityIsRejected) {
  Network net;
  net.AddObject(Id(1), {{}, {1}, {}});
  EXPECT_THROW(net.SimilarityFeatures(Id(1), Id(1)), InvalidArgument);
}

TEST(NetworkPropertyTest, RandomBatchesStaySymmetric) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    Network net;
    std::uint32_t next = 0;
    for (int batch = 0; batch < 6; ++batch) {
      std::vector<std::pair<ObjectId, SocialProfile>> items;
      const std::uint32_t count = 1 + gen() % 6;
      for (std::uint32_t k = 0; k < count; ++k) {
        SocialProfile p;
        const std::uint32_t id = next++;
        for (std::uint32_t f = 0; f < id; ++f) {
          if (gen() % 4 == 0) p.friends.insert(Id(f));
        }
        for (int c = 0; c < 3; ++c) p.communities.insert(gen() % 5);
        items.emplace_back(Id(id), std::move(p));
      }
      net.AddObjects(std::move(items));
      if (net.size() > 2) {
        const auto a = static_cast<std::uint32_t>(gen() % net.size());
        const auto b = static_cast<std::uint32_t>(gen() % net.size());
        if (a != b) net.AddFriendship(Id(a), Id(b));
      }
      ExpectSymmetric(net);
    }
    for (ObjectId a : net.roster()) {
      for (ObjectId b : net.roster()) {
        if (a == b) continue;
        EXPECT_EQ(net.SimilarityFeatures(a, b), net.SimilarityFeatures(b, a));
      }
    }
  }
}

TEST(NetworkPropertyTest, SameInputsGiveIdenticalNetworks) {
  GeneratorConfig config;
  config.object_count = 60;
  config.target_event_count = 200;
  const Trace a = GenerateTrace(config);
  const Trace b = GenerateTrace(config);
  EXPECT_EQ(a.network.roster(), b.network.roster());
  for (ObjectId id : a.network.roster()) {
    EXPECT_EQ(a.network.NeighborsOf(id), b.network.NeighborsOf(id));
  }
}

TEST(NetworkTest, GeneratedDefaultHas150Objects) {
  GeneratorConfig config;
  config.target_event_count = 1000;
  const Trace t = GenerateTrace(config);
  EXPECT_EQ(t.network.size(), 150u);
  ExpectSymmetric(t.network);
}

}  // namespace
}  // namespace siot
