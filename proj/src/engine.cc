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

#include "siot/engine.h"

#include <string>

namespace siot {

void Ledger::Record(std::size_t trustor, std::size_t trustee, Outcome o) {
  InteractionCounts& c = counts_[trustor * n_ + trustee];
  (o == Outcome::kPositive ? c.positive : c.negative) += 1;
  ++mass_;
}

void Ledger::Retract(std::size_t trustor, std::size_t trustee, Outcome o) {
  InteractionCounts& c = counts_[trustor * n_ + trustee];
  std::uint64_t& slot = o == Outcome::kPositive ? c.positive : c.negative;
  if (slot == 0) throw Error("ledger underflow");
  --slot;
  --mass_;
}

TrustEngine::TrustEngine(const Network& network, const BehaviorMap& behaviors,
                         const PolicyMap& policies,
                         std::vector<std::uint64_t> planned,
                         EngineOptions options)
    : network_(&network),
      behaviors_(&behaviors),
      policies_(&policies),
      planned_(std::move(planned)),
      options_(std::move(options)),
      ledger_(network.size()) {
  const std::size_t n = network.size();
  if (planned_.size() != n) {
    throw InvalidArgument("planned interaction counts do not match roster");
  }
  if (!(options_.theta >= 0.0 && options_.theta <= 1.0)) {
    throw InvalidArgument("theta must lie in [0, 1]");
  }
  static const BehaviorModel kDefaultModel{};
  static const RecommendationPolicy kHonest{};

  streams_.reserve(n);
  served_.assign(n, 0);
  models_.reserve(n);
  policy_of_.reserve(n);
  friends_.reserve(n);
  for (ObjectId id : network.roster()) {
    streams_.emplace_back(ServiceStreamSeed(options_.seed, id));
    const auto b = behaviors.find(id);
    models_.push_back(b == behaviors.end() ? &kDefaultModel : &b->second);
    const auto p = policies.find(id);
    policy_of_.push_back(p == policies.end() ? &kHonest : &p->second);
    std::vector<std::size_t> f;
    for (ObjectId k : network.Profile(id).friends) {
      f.push_back(network.IndexOf(k));
    }
    friends_.push_back(std::move(f));
  }
}

TrustEngine::TrustEngine(const Trace& trace, const PolicyMap& policies,
                         EngineOptions options)
    : TrustEngine(trace.network, trace.behaviors, policies,
                  PlannedInteractions(trace.network, trace.events),
                  std::move(options)) {}

Outcome TrustEngine::Apply(const TraceEvent& event) {
  const std::size_t i = network_->IndexOf(event.trustor);
  const std::size_t j = network_->IndexOf(event.trustee);
  if (i == j) {
    throw InvalidArgument("event " + std::to_string(event.seq) +
                          " has identical trustor and trustee");
  }
  const Outcome o =
      ServiceOutcome(*models_[j], served_[j], planned_[j], streams_[j]);
  ++served_[j];
  Record(i, j, o);
  return o;
}

void TrustEngine::RecordOutcome(ObjectId trustor, ObjectId trustee,
                                Outcome outcome) {
  const std::size_t i = network_->IndexOf(trustor);
  const std::size_t j = network_->IndexOf(trustee);
  if (i == j) throw InvalidArgument("trustor and trustee must differ");
  Record(i, j, outcome);
}

void TrustEngine::Record(std::size_t i, std::size_t j, Outcome o) {
  ledger_.Record(i, j, o);
  ++events_processed_;
  if (options_.window == 0) return;
  window_.emplace_back(i, j, o);
  if (window_.size() > options_.window) {
    const auto [oi, oj, oo] = window_.front();
    window_.pop_front();
    ledger_.Retract(oi, oj, oo);
  }
}

std::optional<InteractionCounts> TrustEngine::LedgerFor(
    ObjectId trustor, ObjectId trustee) const {
  return ledger_.Find(network_->IndexOf(trustor), network_->IndexOf(trustee));
}

std::optional<double> TrustEngine::GatherAt(std::size_t i,
                                            std::size_t j) const {
  const ObjectId about = network_->roster()[j];
  std::vector<double> reports;
  for (std::size_t k : friends_[i]) {
    if (k == j) continue;
    if (!(DirectTrust(ledger_.Counts(i, k)) > options_.theta)) continue;
    const auto kj = ledger_.Find(k, j);
    if (!kj) continue;
    reports.push_back(
        ReportedDirectTrust(*policy_of_[k], DirectTrust(*kj), about));
  }
  if (reports.empty()) return std::nullopt;
  return RecommendationTrust(reports);
}

std::optional<double> TrustEngine::GatherRecommendations(ObjectId i,
                                                         ObjectId j) const {
  if (i == j) throw InvalidArgument("trustor and trustee must differ");
  return GatherAt(network_->IndexOf(i), network_->IndexOf(j));
}

TrustFeatures TrustEngine::Features(ObjectId i, ObjectId j) const {
  if (i == j) throw InvalidArgument("trustor and trustee must differ");
  const std::size_t a = network_->IndexOf(i);
  const std::size_t b = network_->IndexOf(j);
  TrustFeatures f;
  if (const auto c = ledger_.Find(a, b)) f.direct = DirectTrust(*c);
  f.social = network_->SimilarityFeatures(i, j);
  f.recommendation = GatherAt(a, b);
  return f;
}

double TrustEngine::PairTrustAt(std::size_t i, std::size_t j) const {
  const auto& roster = network_->roster();
  const TrustFeatures f = Features(roster[i], roster[j]);
  if (f.empty()) return 0.5;
  return FinalTrust(f, options_.scheme);
}

double TrustEngine::PairTrust(ObjectId i, ObjectId j) const {
  if (i == j) throw InvalidArgument("trustor and trustee must differ");
  return PairTrustAt(network_->IndexOf(i), network_->IndexOf(j));
}

double TrustEngine::GlobalTrust(ObjectId j) const {
  const std::size_t b = network_->IndexOf(j);
  double sum = 0.0;
  std::size_t observers = 0;
  for (std::size_t a = 0; a < network_->size(); ++a) {
    if (a == b || !ledger_.Find(a, b)) continue;
    sum += PairTrustAt(a, b);
    ++observers;
  }
  if (observers == 0) return 0.5;
  return sum / static_cast<double>(observers);
}

TrustSnapshot TrustEngine::Snapshot() const {
  TrustSnapshot snap;
  snap.at_event = events_processed_;
  snap.ledger_mass = ledger_.mass();
  const auto& roster = network_->roster();
  for (std::size_t b = 0; b < roster.size(); ++b) {
    double sum = 0.0;
    std::size_t observers = 0;
    for (std::size_t a = 0; a < roster.size(); ++a) {
      if (a == b || !ledger_.Find(a, b)) continue;
      const double s = PairTrustAt(a, b);
      snap.scores.emplace(PairKey{roster[a], roster[b]}, s);
      sum += s;
      ++observers;
    }
    const double global =
        observers == 0 ? 0.5 : sum / static_cast<double>(observers);
    snap.global_scores.emplace(roster[b], global);
    snap.labels.emplace(roster[b], Classify(global, options_.theta));
  }
  return snap;
}

std::vector<TrustSnapshot> Run(const Network& network,
                               std::span<const TraceEvent> events,
                               const BehaviorMap& behaviors,
                               const PolicyMap& policies,
                               const EngineOptions& options,
                               std::span<const std::uint64_t> checkpoints) {
  const std::vector<std::size_t> cuts =
      SplitCheckpoints(events.size(), checkpoints);
  TrustEngine engine(network, behaviors, policies,
                     PlannedInteractions(network, events), options);
  std::vector<TrustSnapshot> snapshots;
  snapshots.reserve(cuts.size());
  std::size_t next = 0;
  for (std::size_t k = 0; k < events.size() && next < cuts.size(); ++k) {
    engine.Apply(events[k]);
    while (next < cuts.size() && cuts[next] == k + 1) {
      snapshots.push_back(engine.Snapshot());
      ++next;
    }
  }
  // A zero-event trace with no checkpoints still reports its initial state.
  if (snapshots.size() < cuts.size()) snapshots.push_back(engine.Snapshot());
  return snapshots;
}

std::vector<TrustSnapshot> Run(const Trace& trace, const PolicyMap& policies,
                               const EngineOptions& options,
                               std::span<const std::uint64_t> checkpoints) {
  return Run(trace.network, trace.events, trace.behaviors, policies, options,
             checkpoints);
}

}  // namespace siot
