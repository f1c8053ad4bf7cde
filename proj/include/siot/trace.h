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

// Interaction traces: the on-disk format, a validating loader, and a seeded
// generator for conference-style contact traces with social structure.
//
// File layout (line oriented, one record per line, sections in this order):
//
//   #siot-trace v1 objects=<n> events=<m> [seed=<s>]
//   P <id> F:<id,...> C:<community,...> M:<group,...>
//   B <id> <kind> p_good=<x> p_bad=<x> switch=<x> period=<k>
//   E <seq> <tick> <trustor> <trustee>
//
// Blank lines and lines starting with "//" are ignored. Lists may be empty
// ("F:"). Objects without a B record behave as the default good model.

#ifndef SIOT_TRACE_H_
#define SIOT_TRACE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "siot/behavior.h"
#include "siot/social_graph.h"
#include "siot/types.h"

namespace siot {

inline constexpr int kTraceFormatVersion = 1;

struct TraceEvent {
  // Strictly increasing within a trace.
  std::uint64_t seq = 0;
  // Non-decreasing within a trace.
  std::uint64_t tick = 0;
  ObjectId trustor;
  ObjectId trustee;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct TraceHeader {
  std::uint64_t object_count = 0;
  std::uint64_t event_count = 0;
  std::optional<std::uint64_t> generator_seed;
  int format_version = kTraceFormatVersion;

  friend bool operator==(const TraceHeader&, const TraceHeader&) = default;
};

struct Trace {
  TraceHeader header;
  Network network;
  std::vector<TraceEvent> events;
  BehaviorMap behaviors;

  friend bool operator==(const Trace&, const Trace&) = default;
};

// A malformed trace. line() is 1-based; 0 when the problem is not tied to a
// single line (e.g. a count mismatch detected at end of file).
class TraceParseError : public Error {
 public:
  TraceParseError(std::size_t line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct GeneratorConfig {
  std::uint32_t object_count = 150;
  std::uint64_t target_event_count = 20000;
  // round(malicious_fraction * object_count) objects get malicious-family
  // behaviors.
  double malicious_fraction = 0.10;

  std::uint32_t community_count = 4;
  double mean_communities_per_object = 3.0;
  double mean_friends_per_object = 10.0;
  std::uint32_t multicast_group_count = 8;
  double mean_multicast_groups = 4.0;
  // Probability that a new friendship is drawn from a shared community.
  double community_friend_bias = 0.8;
  // Probability that an interaction partner is drawn from the trustor's
  // friends rather than uniformly.
  double friend_bias = 0.7;

  // Drawn from the malicious-family budget; the remainder is kMalicious.
  std::uint32_t on_off_count = 0;
  std::uint32_t good_to_malicious_count = 0;
  // Drawn from the good budget.
  std::uint32_t malicious_to_good_count = 0;

  double p_good_service = 0.9;
  double p_bad_service = 0.2;
  double switch_point = 0.5;
  // On-off actors get period = max(1, planned interactions / on_off_phases).
  std::uint32_t on_off_phases = 6;

  // Events are spread over [0, span_ticks); the default is four days of
  // seconds.
  std::uint64_t span_ticks = 4ULL * 24 * 3600;
  std::uint64_t seed = 1;

  // Throws InvalidArgument on an infeasible or out-of-range configuration.
  void Validate() const;

  std::uint32_t malicious_count() const;
};

Trace GenerateTrace(const GeneratorConfig& config);

void WriteTrace(const Trace& trace, std::ostream& out);
void WriteTraceFile(const Trace& trace, const std::filesystem::path& path);

// Parses and fully validates a trace. Throws TraceParseError.
Trace ReadTrace(std::istream& in);
Trace LoadTrace(const std::filesystem::path& path);

// Number of events each object serves as trustee.
std::vector<std::uint64_t> PlannedInteractions(
    const Network& network, std::span<const TraceEvent> events);

// Validates snapshot points against a trace of `event_count` events and
// returns the prefix lengths after which to snapshot. Checkpoints must be
// positive and strictly increasing, the last no larger than event_count.
// An empty list means "final state only".
std::vector<std::size_t> SplitCheckpoints(
    std::size_t event_count, std::span<const std::uint64_t> checkpoints);

}  // namespace siot

#endif  // SIOT_TRACE_H_
