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

#include "siot/trace.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "siot/rng.h"
#include "siot/text.h"

namespace siot {
namespace {

constexpr std::string_view kMagic = "#siot-trace";

// Sub-streams of the generator seed.
constexpr std::uint64_t kStructureStream = 1;
constexpr std::uint64_t kRoleStream = 2;
constexpr std::uint64_t kEventStream = 3;

// Count drawn uniformly from [1, 2 * mean - 1] (mean preserved), capped.
std::uint32_t DrawCount(Rng& rng, double mean, std::uint32_t cap) {
  const auto hi = static_cast<std::uint64_t>(
      std::max<long long>(1, std::llround(2.0 * mean - 1.0)));
  const auto n = static_cast<std::uint32_t>(1 + rng.Below(hi));
  return std::min(n, cap);
}

// Picks `k` distinct values from `pool` (partial Fisher-Yates on a copy).
template <typename T>
std::set<T> Sample(Rng& rng, std::vector<T> pool, std::size_t k) {
  k = std::min(k, pool.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.Below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  return {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k)};
}

template <typename T>
std::string JoinIds(const std::set<T>& ids) {
  return text::Join(ids, ",", [](const T& v) {
    if constexpr (std::is_same_v<T, ObjectId>) {
      return ToString(v);
    } else {
      return std::to_string(v);
    }
  });
}

}  // namespace

void GeneratorConfig::Validate() const {
  auto fail = [](const std::string& msg) {
    throw InvalidArgument("infeasible generator config: " + msg);
  };
  if (object_count < 2) fail("object_count must be at least 2");
  if (target_event_count == 0) fail("target_event_count must be positive");
  if (!(malicious_fraction >= 0.0 && malicious_fraction <= 1.0)) {
    fail("malicious_fraction must lie in [0, 1]");
  }
  if (community_count == 0) fail("community_count must be positive");
  if (multicast_group_count == 0) fail("multicast_group_count must be positive");
  if (!(mean_communities_per_object >= 1.0) ||
      mean_communities_per_object > community_count) {
    fail("mean_communities_per_object must lie in [1, community_count]");
  }
  if (!(mean_multicast_groups >= 1.0) ||
      mean_multicast_groups > multicast_group_count) {
    fail("mean_multicast_groups must lie in [1, multicast_group_count]");
  }
  if (!(mean_friends_per_object >= 0.0) ||
      mean_friends_per_object >= object_count - 1) {
    fail("mean_friends_per_object must lie in [0, object_count - 1)");
  }
  if (!(friend_bias >= 0.0 && friend_bias <= 1.0) ||
      !(community_friend_bias >= 0.0 && community_friend_bias <= 1.0)) {
    fail("bias probabilities must lie in [0, 1]");
  }
  if (on_off_count + good_to_malicious_count > malicious_count()) {
    fail("on_off_count + good_to_malicious_count exceeds malicious count");
  }
  if (malicious_to_good_count > object_count - malicious_count()) {
    fail("malicious_to_good_count exceeds good count");
  }
  if (on_off_phases == 0) fail("on_off_phases must be positive");
  if (span_ticks == 0) fail("span_ticks must be positive");
  BehaviorModel probe;
  probe.p_good_service = p_good_service;
  probe.p_bad_service = p_bad_service;
  probe.switch_point = switch_point;
  probe.Validate();
}

std::uint32_t GeneratorConfig::malicious_count() const {
  return static_cast<std::uint32_t>(
      std::llround(malicious_fraction * static_cast<double>(object_count)));
}

Trace GenerateTrace(const GeneratorConfig& config) {
  config.Validate();
  const std::uint32_t n = config.object_count;

  std::vector<ObjectId> ids(n);
  for (std::uint32_t i = 0; i < n; ++i) ids[i] = ObjectId(i);

  // Social structure.
  Rng structure(DeriveSeed(config.seed, kStructureStream));
  std::vector<CommunityId> all_communities(config.community_count);
  std::iota(all_communities.begin(), all_communities.end(), 0u);

  std::vector<SocialProfile> profiles(n);
  std::vector<std::vector<std::uint32_t>> members(config.community_count);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t k = DrawCount(
        structure, config.mean_communities_per_object, config.community_count);
    profiles[i].communities = Sample(structure, all_communities, k);
    for (CommunityId c : profiles[i].communities) members[c].push_back(i);
  }

  // Multicast group g belongs to community g % community_count; objects mostly
  // join groups of their own communities.
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<GroupId> own;
    std::vector<GroupId> other;
    for (GroupId g = 0; g < config.multicast_group_count; ++g) {
      (profiles[i].communities.contains(g % config.community_count) ? own
                                                                     : other)
          .push_back(g);
    }
    const std::uint32_t k =
        DrawCount(structure, config.mean_multicast_groups,
                  config.multicast_group_count);
    std::set<GroupId> groups;
    while (groups.size() < k) {
      const auto& pool =
          (!own.empty() && (other.empty() || structure.Bernoulli(0.75))) ? own
                                                                          : other;
      groups.insert(pool[structure.Below(pool.size())]);
    }
    profiles[i].multicast_groups = std::move(groups);
  }

  const auto edge_target = static_cast<std::uint64_t>(std::llround(
      config.mean_friends_per_object * static_cast<double>(n) / 2.0));
  std::uint64_t edges = 0;
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 100 * edge_target + 1000;
  while (edges < edge_target && attempts++ < max_attempts) {
    const auto a = static_cast<std::uint32_t>(structure.Below(n));
    std::uint32_t b;
    if (structure.Bernoulli(config.community_friend_bias)) {
      const auto& comms = profiles[a].communities;
      auto it = comms.begin();
      std::advance(it, structure.Below(comms.size()));
      const auto& pool = members[*it];
      b = pool[structure.Below(pool.size())];
    } else {
      b = static_cast<std::uint32_t>(structure.Below(n));
    }
    if (a == b || profiles[a].friends.contains(ids[b])) continue;
    profiles[a].friends.insert(ids[b]);
    profiles[b].friends.insert(ids[a]);
    ++edges;
  }

  Trace trace;
  std::vector<std::pair<ObjectId, SocialProfile>> batch;
  batch.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    batch.emplace_back(ids[i], profiles[i]);
  }
  trace.network.AddObjects(std::move(batch));

  // Interactions.
  Rng event_rng(DeriveSeed(config.seed, kEventStream));
  const std::uint64_t m = config.target_event_count;
  std::vector<std::uint64_t> ticks(m);
  for (auto& t : ticks) t = event_rng.Below(config.span_ticks);
  std::sort(ticks.begin(), ticks.end());
  trace.events.reserve(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    const auto a = static_cast<std::uint32_t>(event_rng.Below(n));
    const auto& friends = profiles[a].friends;
    ObjectId partner;
    if (!friends.empty() && event_rng.Bernoulli(config.friend_bias)) {
      auto it = friends.begin();
      std::advance(it, event_rng.Below(friends.size()));
      partner = *it;
    } else {
      auto b = static_cast<std::uint32_t>(event_rng.Below(n - 1));
      if (b >= a) ++b;
      partner = ids[b];
    }
    trace.events.push_back(TraceEvent{k + 1, ticks[k], ids[a], partner});
  }

  // Roles.
  Rng role_rng(DeriveSeed(config.seed, kRoleStream));
  const std::uint32_t bad = config.malicious_count();
  std::vector<ObjectId> shuffled = ids;
  for (std::size_t i = 0; i + 1 < shuffled.size(); ++i) {
    std::swap(shuffled[i], shuffled[i + role_rng.Below(shuffled.size() - i)]);
  }
  const std::vector<std::uint64_t> planned =
      PlannedInteractions(trace.network, trace.events);
  for (std::uint32_t r = 0; r < n; ++r) {
    BehaviorModel model;
    model.p_good_service = config.p_good_service;
    model.p_bad_service = config.p_bad_service;
    model.switch_point = config.switch_point;
    if (r < config.on_off_count) {
      model.kind = BehaviorKind::kOnOff;
    } else if (r < config.on_off_count + config.good_to_malicious_count) {
      model.kind = BehaviorKind::kGoodToMalicious;
    } else if (r < bad) {
      model.kind = BehaviorKind::kMalicious;
    } else if (r < bad + config.malicious_to_good_count) {
      model.kind = BehaviorKind::kMaliciousToGood;
    } else {
      model.kind = BehaviorKind::kGood;
    }
    const ObjectId id = shuffled[r];
    if (model.kind == BehaviorKind::kOnOff) {
      model.on_off_period = std::max<std::uint64_t>(
          1, planned[trace.network.IndexOf(id)] / config.on_off_phases);
    }
    trace.behaviors.emplace(id, model);
  }

  trace.header.object_count = n;
  trace.header.event_count = trace.events.size();
  trace.header.generator_seed = config.seed;
  return trace;
}

std::vector<std::uint64_t> PlannedInteractions(
    const Network& network, std::span<const TraceEvent> events) {
  std::vector<std::uint64_t> planned(network.size(), 0);
  for (const TraceEvent& e : events) ++planned[network.IndexOf(e.trustee)];
  return planned;
}

void WriteTrace(const Trace& trace, std::ostream& out) {
  out << kMagic << " v" << trace.header.format_version
      << " objects=" << trace.network.size()
      << " events=" << trace.events.size();
  if (trace.header.generator_seed) {
    out << " seed=" << *trace.header.generator_seed;
  }
  out << '\n';
  for (ObjectId id : trace.network.roster()) {
    const SocialProfile& p = trace.network.Profile(id);
    out << "P " << id << " F:" << JoinIds(p.friends)
        << " C:" << JoinIds(p.communities)
        << " M:" << JoinIds(p.multicast_groups) << '\n';
  }
  for (const auto& [id, m] : trace.behaviors) {
    out << "B " << id << ' ' << BehaviorKindName(m.kind)
        << " p_good=" << text::FormatDouble(m.p_good_service)
        << " p_bad=" << text::FormatDouble(m.p_bad_service)
        << " switch=" << text::FormatDouble(m.switch_point)
        << " period=" << m.on_off_period << '\n';
  }
  for (const TraceEvent& e : trace.events) {
    out << "E " << e.seq << ' ' << e.tick << ' ' << e.trustor << ' '
        << e.trustee << '\n';
  }
}

void WriteTraceFile(const Trace& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  WriteTrace(trace, out);
  out.flush();
  if (!out) throw Error("failed writing " + path.string());
}

namespace {

class TraceParser {
 public:
  explicit TraceParser(std::istream& in) : in_(in) {}

  Trace Parse() {
    std::string raw;
    enum class Section { kHeader, kProfiles, kBehaviors, kEvents };
    Section section = Section::kHeader;
    std::vector<std::pair<ObjectId, SocialProfile>> profiles;
    std::set<ObjectId> profile_ids;
    std::vector<std::pair<std::size_t, std::pair<ObjectId, BehaviorModel>>>
        behaviors;

    while (std::getline(in_, raw)) {
      ++line_;
      const std::string_view line = text::Trim(raw);
      if (line.empty() || line.starts_with("//")) continue;
      if (section == Section::kHeader) {
        ParseHeader(line);
        section = Section::kProfiles;
        continue;
      }
      std::istringstream fields{std::string(line)};
      std::string tag;
      fields >> tag;
      if (tag == "P") {
        if (section != Section::kProfiles) Fail("P record after B/E records");
        auto record = ParseProfile(fields);
        if (!profile_ids.insert(record.first).second) {
          Fail("duplicate object id " + ToString(record.first));
        }
        profiles.push_back(std::move(record));
      } else if (tag == "B") {
        if (section == Section::kEvents) Fail("B record after E records");
        if (section == Section::kProfiles) BuildNetwork(profiles);
        section = Section::kBehaviors;
        behaviors.emplace_back(line_, ParseBehavior(fields));
      } else if (tag == "E") {
        if (section == Section::kProfiles) BuildNetwork(profiles);
        if (section != Section::kEvents) ApplyBehaviors(behaviors);
        section = Section::kEvents;
        ParseEvent(fields);
      } else {
        Fail("unknown record type '" + tag + "'");
      }
    }
    if (section == Section::kHeader) Fail0("empty trace: missing header");
    if (section == Section::kProfiles) BuildNetwork(profiles);
    if (section != Section::kEvents) ApplyBehaviors(behaviors);

    if (trace_.network.size() != trace_.header.object_count) {
      Fail0("header declares " + std::to_string(trace_.header.object_count) +
            " objects but file has " + std::to_string(trace_.network.size()));
    }
    if (trace_.events.size() != trace_.header.event_count) {
      Fail0("header declares " + std::to_string(trace_.header.event_count) +
            " events but file has " + std::to_string(trace_.events.size()));
    }
    return std::move(trace_);
  }

 private:
  [[noreturn]] void Fail(const std::string& msg) const {
    throw TraceParseError(line_, msg);
  }
  [[noreturn]] static void Fail0(const std::string& msg) {
    throw TraceParseError(0, msg);
  }

  template <typename Int>
  Int Number(std::string_view s, std::string_view what) const {
    try {
      return text::ParseInt<Int>(s);
    } catch (const InvalidArgument&) {
      Fail("bad " + std::string(what) + " '" + std::string(s) + "'");
    }
  }

  ObjectId Id(std::string_view s) const {
    return ObjectId(Number<std::uint32_t>(s, "object id"));
  }

  void ParseHeader(std::string_view line) {
    std::istringstream fields{std::string(line)};
    std::string magic, version;
    fields >> magic >> version;
    if (magic != kMagic) Fail("missing '#siot-trace' header");
    if (version != "v1") Fail("unsupported trace version '" + version + "'");
    trace_.header.format_version = 1;
    bool have_objects = false, have_events = false;
    std::string kv;
    while (fields >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) Fail("malformed header field '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      if (key == "objects") {
        trace_.header.object_count = Number<std::uint64_t>(value, "objects");
        have_objects = true;
      } else if (key == "events") {
        trace_.header.event_count = Number<std::uint64_t>(value, "events");
        have_events = true;
      } else if (key == "seed") {
        trace_.header.generator_seed = Number<std::uint64_t>(value, "seed");
      } else {
        Fail("unknown header field '" + key + "'");
      }
    }
    if (!have_objects || !have_events) {
      Fail("header must declare objects= and events=");
    }
    if (trace_.header.object_count == 0 || trace_.header.event_count == 0) {
      Fail("header counts must be positive");
    }
  }

  template <typename T, typename Conv>
  std::set<T> List(const std::string& field, std::string_view prefix,
                   Conv conv) const {
    if (!field.starts_with(prefix)) {
      Fail("expected '" + std::string(prefix) + "' list, got '" + field + "'");
    }
    std::set<T> out;
    for (const std::string& item :
         text::Split(std::string_view(field).substr(prefix.size()), ',')) {
      out.insert(conv(item));
    }
    return out;
  }

  std::pair<ObjectId, SocialProfile> ParseProfile(std::istringstream& fields) {
    std::string id, f, c, m, extra;
    if (!(fields >> id >> f >> c >> m) || (fields >> extra)) {
      Fail("P record needs: P <id> F:<ids> C:<ids> M:<ids>");
    }
    SocialProfile p;
    p.friends = List<ObjectId>(f, "F:", [&](const std::string& s) {
      return Id(s);
    });
    p.communities = List<CommunityId>(c, "C:", [&](const std::string& s) {
      return Number<CommunityId>(s, "community id");
    });
    p.multicast_groups = List<GroupId>(m, "M:", [&](const std::string& s) {
      return Number<GroupId>(s, "group id");
    });
    return {Id(id), std::move(p)};
  }

  std::pair<ObjectId, BehaviorModel> ParseBehavior(std::istringstream& fields) {
    std::string id, kind;
    if (!(fields >> id >> kind)) Fail("B record needs: B <id> <kind> ...");
    BehaviorModel model;
    try {
      model.kind = ParseBehaviorKind(kind);
    } catch (const InvalidArgument& e) {
      Fail(e.what());
    }
    std::string kv;
    while (fields >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) Fail("malformed behavior field '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      try {
        if (key == "p_good") {
          model.p_good_service = text::ParseDouble(value);
        } else if (key == "p_bad") {
          model.p_bad_service = text::ParseDouble(value);
        } else if (key == "switch") {
          model.switch_point = text::ParseDouble(value);
        } else if (key == "period") {
          model.on_off_period = text::ParseInt<std::uint64_t>(value);
        } else {
          Fail("unknown behavior field '" + key + "'");
        }
      } catch (const InvalidArgument& e) {
        Fail(e.what());
      }
    }
    try {
      model.Validate();
    } catch (const InvalidArgument& e) {
      Fail(e.what());
    }
    return {Id(id), model};
  }

  void BuildNetwork(std::vector<std::pair<ObjectId, SocialProfile>>& profiles) {
    try {
      trace_.network.AddObjects(std::move(profiles));
    } catch (const InvalidArgument& e) {
      Fail0(e.what());
    }
  }

  void ApplyBehaviors(
      const std::vector<std::pair<std::size_t,
                                  std::pair<ObjectId, BehaviorModel>>>& recs) {
    for (const auto& [line, rec] : recs) {
      if (!trace_.network.Contains(rec.first)) {
        throw TraceParseError(line, "behavior for unknown object " +
                                        ToString(rec.first));
      }
      if (!trace_.behaviors.emplace(rec.first, rec.second).second) {
        throw TraceParseError(line, "duplicate behavior for object " +
                                        ToString(rec.first));
      }
    }
    for (ObjectId id : trace_.network.roster()) {
      trace_.behaviors.try_emplace(id, BehaviorModel{});
    }
  }

  void ParseEvent(std::istringstream& fields) {
    std::string seq_s, tick_s, a, b, extra;
    if (!(fields >> seq_s >> tick_s >> a >> b) || (fields >> extra)) {
      Fail("E record needs: E <seq> <tick> <trustor> <trustee>");
    }
    TraceEvent e{Number<std::uint64_t>(seq_s, "seq"),
                 Number<std::uint64_t>(tick_s, "tick"), Id(a), Id(b)};
    if (!trace_.events.empty()) {
      const TraceEvent& prev = trace_.events.back();
      if (e.seq <= prev.seq) {
        Fail("event seq " + std::to_string(e.seq) + " is not increasing");
      }
      if (e.tick < prev.tick) {
        Fail("event seq " + std::to_string(e.seq) + " goes back in time");
      }
    }
    if (e.trustor == e.trustee) {
      Fail("event seq " + std::to_string(e.seq) +
           " has the same trustor and trustee " + ToString(e.trustor));
    }
    if (!trace_.network.Contains(e.trustor)) {
      Fail("event seq " + std::to_string(e.seq) + " names unknown object " +
           ToString(e.trustor));
    }
    if (!trace_.network.Contains(e.trustee)) {
      Fail("event seq " + std::to_string(e.seq) + " names unknown object " +
           ToString(e.trustee));
    }
    trace_.events.push_back(e);
  }

  std::istream& in_;
  std::size_t line_ = 0;
  Trace trace_;
};

}  // namespace

Trace ReadTrace(std::istream& in) { return TraceParser(in).Parse(); }

Trace LoadTrace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open trace " + path.string());
  return ReadTrace(in);
}

std::vector<std::size_t> SplitCheckpoints(
    std::size_t event_count, std::span<const std::uint64_t> checkpoints) {
  if (checkpoints.empty()) return {event_count};
  std::vector<std::size_t> cuts;
  cuts.reserve(checkpoints.size());
  std::uint64_t prev = 0;
  for (std::uint64_t c : checkpoints) {
    if (c == 0) throw InvalidArgument("checkpoints must be positive");
    if (c <= prev) {
      throw InvalidArgument("checkpoints must be strictly increasing");
    }
    if (c > event_count) {
      throw InvalidArgument("checkpoint " + std::to_string(c) +
                            " exceeds the " + std::to_string(event_count) +
                            " events in the trace");
    }
    cuts.push_back(static_cast<std::size_t>(c));
    prev = c;
  }
  return cuts;
}

}  // namespace siot
