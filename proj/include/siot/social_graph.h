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

#ifndef SIOT_SOCIAL_GRAPH_H_
#define SIOT_SOCIAL_GRAPH_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "siot/types.h"

namespace siot {

struct SocialProfile {
  std::set<ObjectId> friends;
  std::set<CommunityId> communities;
  std::set<GroupId> multicast_groups;

  friend bool operator==(const SocialProfile&, const SocialProfile&) = default;
};

// The objects of a network and their social structure. Friendship is kept
// symmetric and irreflexive. The roster is sorted by id, so two networks with
// equal contents iterate identically.
//
// Mutation is single-writer; a constructed network is safe for concurrent
// reads.
class Network {
 public:
  Network() = default;

  // Adds one object. Every friend must already exist (or be `id` itself,
  // which is rejected). Friendships are mirrored onto the friends' profiles.
  void AddObject(ObjectId id, SocialProfile profile);

  // Adds a batch; friend references may point at other members of the batch.
  // Either the whole batch is applied or, on error, nothing is.
  void AddObjects(std::vector<std::pair<ObjectId, SocialProfile>> batch);

  // Makes a and b mutual friends.
  void AddFriendship(ObjectId a, ObjectId b);

  bool Contains(ObjectId id) const { return profiles_.contains(id); }
  std::size_t size() const { return roster_.size(); }
  const std::vector<ObjectId>& roster() const { return roster_; }

  // Position of `id` in roster(). Throws UnknownObject.
  std::size_t IndexOf(ObjectId id) const;

  const SocialProfile& Profile(ObjectId id) const;

  // The friend set of `i`, ascending. These are the objects a trustor asks
  // for recommendations.
  std::vector<ObjectId> NeighborsOf(ObjectId i) const;

  // Mean of the community, friendship and co-work similarities between i and
  // j, counting only metrics whose sets are non-empty on both sides. Absent
  // when no metric has data. Throws InvalidArgument for i == j and
  // UnknownObject for ids outside the network.
  std::optional<double> SimilarityFeatures(ObjectId i, ObjectId j) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  void RebuildRoster();

  std::map<ObjectId, SocialProfile> profiles_;
  std::vector<ObjectId> roster_;
};

}  // namespace siot

#endif  // SIOT_SOCIAL_GRAPH_H_
