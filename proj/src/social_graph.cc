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

#include <algorithm>
#include <string>

#include "siot/trust_core.h"

namespace siot {

void Network::AddObject(ObjectId id, SocialProfile profile) {
  std::vector<std::pair<ObjectId, SocialProfile>> batch;
  batch.emplace_back(id, std::move(profile));
  AddObjects(std::move(batch));
}

void Network::AddObjects(
    std::vector<std::pair<ObjectId, SocialProfile>> batch) {
  std::set<ObjectId> incoming;
  for (const auto& [id, profile] : batch) {
    if (profiles_.contains(id) || !incoming.insert(id).second) {
      throw InvalidArgument("duplicate object id " + ToString(id));
    }
  }
  for (const auto& [id, profile] : batch) {
    for (ObjectId f : profile.friends) {
      if (f == id) {
        throw InvalidArgument("object " + ToString(id) +
                              " lists itself as a friend");
      }
      if (!profiles_.contains(f) && !incoming.contains(f)) {
        throw InvalidArgument("object " + ToString(id) +
                              " references unknown friend " + ToString(f));
      }
    }
  }

  for (auto& [id, profile] : batch) {
    profiles_.emplace(id, std::move(profile));
  }
  for (const ObjectId id : incoming) {
    for (ObjectId f : profiles_.at(id).friends) {
      profiles_.at(f).friends.insert(id);
    }
  }
  RebuildRoster();
}

void Network::AddFriendship(ObjectId a, ObjectId b) {
  if (a == b) throw InvalidArgument("an object cannot befriend itself");
  auto ia = profiles_.find(a);
  if (ia == profiles_.end()) throw UnknownObject(a);
  auto ib = profiles_.find(b);
  if (ib == profiles_.end()) throw UnknownObject(b);
  ia->second.friends.insert(b);
  ib->second.friends.insert(a);
}

std::size_t Network::IndexOf(ObjectId id) const {
  const auto it = std::lower_bound(roster_.begin(), roster_.end(), id);
  if (it == roster_.end() || *it != id) throw UnknownObject(id);
  return static_cast<std::size_t>(it - roster_.begin());
}

const SocialProfile& Network::Profile(ObjectId id) const {
  const auto it = profiles_.find(id);
  if (it == profiles_.end()) throw UnknownObject(id);
  return it->second;
}

std::vector<ObjectId> Network::NeighborsOf(ObjectId i) const {
  const SocialProfile& p = Profile(i);
  return {p.friends.begin(), p.friends.end()};
}

std::optional<double> Network::SimilarityFeatures(ObjectId i,
                                                  ObjectId j) const {
  if (i == j) {
    throw InvalidArgument("similarity of object " + ToString(i) +
                          " with itself is undefined");
  }
  const SocialProfile& a = Profile(i);
  const SocialProfile& b = Profile(j);

  std::vector<double> measures;
  measures.reserve(3);
  if (!a.communities.empty() && !b.communities.empty()) {
    measures.push_back(CoiSimilarity(a.communities, b.communities));
  }
  if (!a.friends.empty() && !b.friends.empty()) {
    measures.push_back(FriendshipSimilarity(a.friends, b.friends));
  }
  if (!a.multicast_groups.empty() && !b.multicast_groups.empty()) {
    measures.push_back(CoworkSimilarity(a.multicast_groups, b.multicast_groups));
  }
  if (measures.empty()) return std::nullopt;
  return SocialSimilarity(measures);
}

void Network::RebuildRoster() {
  roster_.clear();
  roster_.reserve(profiles_.size());
  for (const auto& [id, profile] : profiles_) roster_.push_back(id);
}

}  // namespace siot
