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

// Trace replay. Each event asks the trustee's behavior model for a service
// outcome and records it in the (trustor, trustee) ledger. Trust is derived
// lazily from the ledgers when queried, so replay costs O(events).

#ifndef SIOT_ENGINE_H_
#define SIOT_ENGINE_H_

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "siot/behavior.h"
#include "siot/rng.h"
#include "siot/social_graph.h"
#include "siot/trace.h"
#include "siot/trust_core.h"

namespace siot {

struct EngineOptions {
  WeightScheme scheme = WeightScheme::Ws1();
  double theta = kDefaultTheta;
  // 0 keeps every outcome (cumulative ledgers). Otherwise ledgers only hold
  // the outcomes of the most recent `window` events.
  std::uint64_t window = 0;
  // Seeds the per-actor service streams.
  std::uint64_t seed = 0;
};

// Seed of the service-outcome stream of actor `id` under engine seed `seed`.
constexpr std::uint64_t ServiceStreamSeed(std::uint64_t seed, ObjectId id) {
  return DeriveSeed(seed, id.value);
}

// Dense (trustor, trustee) counters over a network's roster indices. A pair
// has a ledger iff at least one outcome is currently recorded for it.
class Ledger {
 public:
  explicit Ledger(std::size_t object_count = 0)
      : n_(object_count), counts_(object_count * object_count) {}

  std::optional<InteractionCounts> Find(std::size_t trustor,
                                        std::size_t trustee) const {
    const InteractionCounts& c = counts_[trustor * n_ + trustee];
    if (c.total() == 0) return std::nullopt;
    return c;
  }

  // Counters for the pair, (0, 0) when there is no ledger.
  const InteractionCounts& Counts(std::size_t trustor,
                                  std::size_t trustee) const {
    return counts_[trustor * n_ + trustee];
  }

  void Record(std::size_t trustor, std::size_t trustee, Outcome o);
  void Retract(std::size_t trustor, std::size_t trustee, Outcome o);

  // Sum of P + N over all pairs.
  std::uint64_t mass() const { return mass_; }
  std::size_t object_count() const { return n_; }

 private:
  std::size_t n_;
  std::vector<InteractionCounts> counts_;
  std::uint64_t mass_ = 0;
};

using PairKey = std::pair<ObjectId, ObjectId>;

struct TrustSnapshot {
  std::uint64_t at_event = 0;
  // Pair trust for every (trustor, trustee) pair that has a ledger.
  std::map<PairKey, double> scores;
  // Network-wide trust of every object; see TrustEngine::GlobalTrust.
  std::map<ObjectId, double> global_scores;
  std::map<ObjectId, Verdict> labels;
  std::uint64_t ledger_mass = 0;

  friend bool operator==(const TrustSnapshot&, const TrustSnapshot&) = default;
};

// Replays events against a network. The network, behaviors and policies are
// held by pointer and must outlive the engine; they are never modified, so
// several engines may share them across threads.
class TrustEngine {
 public:
  // `planned[k]` is how many events the k-th roster object serves in the
  // whole trace; behavior phases are scheduled against it.
  TrustEngine(const Network& network, const BehaviorMap& behaviors,
              const PolicyMap& policies, std::vector<std::uint64_t> planned,
              EngineOptions options);

  TrustEngine(const Trace& trace, const PolicyMap& policies,
              EngineOptions options);

  // Draws the trustee's service outcome for the event and records it.
  // Throws UnknownObject for ids outside the network.
  Outcome Apply(const TraceEvent& event);

  // Records an externally observed outcome, bypassing behavior models.
  void RecordOutcome(ObjectId trustor, ObjectId trustee, Outcome outcome);

  std::optional<InteractionCounts> LedgerFor(ObjectId trustor,
                                             ObjectId trustee) const;

  // Mean of the reported direct trust in j from i's friends k (k != j)
  // with DirectTrust(i, k) > theta and a ledger toward j. Absent when no
  // friend qualifies.
  std::optional<double> GatherRecommendations(ObjectId i, ObjectId j) const;

  TrustFeatures Features(ObjectId i, ObjectId j) const;

  // Weighted fusion of Features(i, j); 0.5 when no feature is available.
  double PairTrust(ObjectId i, ObjectId j) const;

  // Mean PairTrust(i, j) over trustors i holding a ledger toward j, in roster
  // order; 0.5 when nobody has interacted with j.
  double GlobalTrust(ObjectId j) const;

  TrustSnapshot Snapshot() const;

  std::uint64_t events_processed() const { return events_processed_; }
  const Ledger& ledger() const { return ledger_; }
  const EngineOptions& options() const { return options_; }
  const Network& network() const { return *network_; }

 private:
  void Record(std::size_t i, std::size_t j, Outcome o);
  double PairTrustAt(std::size_t i, std::size_t j) const;
  std::optional<double> GatherAt(std::size_t i, std::size_t j) const;

  const Network* network_;
  const BehaviorMap* behaviors_;
  const PolicyMap* policies_;
  std::vector<std::uint64_t> planned_;
  EngineOptions options_;

  Ledger ledger_;
  std::vector<Rng> streams_;
  std::vector<std::uint64_t> served_;
  std::vector<const BehaviorModel*> models_;
  std::vector<const RecommendationPolicy*> policy_of_;
  std::vector<std::vector<std::size_t>> friends_;
  std::deque<std::tuple<std::size_t, std::size_t, Outcome>> window_;
  std::uint64_t events_processed_ = 0;
};

// Replays `events` in order and snapshots after each checkpoint (validated
// with SplitCheckpoints). An empty checkpoint list yields one final
// snapshot.
std::vector<TrustSnapshot> Run(const Network& network,
                               std::span<const TraceEvent> events,
                               const BehaviorMap& behaviors,
                               const PolicyMap& policies,
                               const EngineOptions& options,
                               std::span<const std::uint64_t> checkpoints);

std::vector<TrustSnapshot> Run(const Trace& trace, const PolicyMap& policies,
                               const EngineOptions& options,
                               std::span<const std::uint64_t> checkpoints);

}  // namespace siot

#endif  // SIOT_ENGINE_H_
