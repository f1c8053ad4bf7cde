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

#include "siot/config.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "siot/text.h"

namespace siot {
namespace {

template <typename Int>
Int AsInt(const std::string& key, const std::string& value) {
  try {
    return text::ParseInt<Int>(value);
  } catch (const InvalidArgument&) {
    throw ConfigError("config key '" + key + "' expects an integer, got '" +
                      value + "'");
  }
}

double AsDouble(const std::string& key, const std::string& value) {
  try {
    return text::ParseDouble(value);
  } catch (const InvalidArgument&) {
    throw ConfigError("config key '" + key + "' expects a number, got '" +
                      value + "'");
  }
}

bool AsBool(const std::string& key, const std::string& value) {
  const std::string v = text::ToLower(text::Trim(value));
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config key '" + key + "' expects true/false, got '" +
                    value + "'");
}

std::string Bool(bool b) { return b ? "true" : "false"; }

}  // namespace

void ExperimentConfig::Set(const std::string& raw_key,
                           const std::string& raw_value) {
  const std::string key = text::ToLower(text::Trim(raw_key));
  const std::string value(text::Trim(raw_value));
  GeneratorConfig& g = generator;

  if (key == "trace") {
    trace_path = value.empty() ? std::nullopt
                               : std::optional<std::filesystem::path>(value);
  } else if (key == "objects") {
    g.object_count = AsInt<std::uint32_t>(key, value);
  } else if (key == "events") {
    g.target_event_count = AsInt<std::uint64_t>(key, value);
  } else if (key == "malicious_fraction") {
    g.malicious_fraction = AsDouble(key, value);
  } else if (key == "communities") {
    g.community_count = AsInt<std::uint32_t>(key, value);
  } else if (key == "mean_communities") {
    g.mean_communities_per_object = AsDouble(key, value);
  } else if (key == "mean_friends") {
    g.mean_friends_per_object = AsDouble(key, value);
  } else if (key == "multicast_groups") {
    g.multicast_group_count = AsInt<std::uint32_t>(key, value);
  } else if (key == "mean_multicast") {
    g.mean_multicast_groups = AsDouble(key, value);
  } else if (key == "community_friend_bias") {
    g.community_friend_bias = AsDouble(key, value);
  } else if (key == "friend_bias") {
    g.friend_bias = AsDouble(key, value);
  } else if (key == "on_off_count") {
    g.on_off_count = AsInt<std::uint32_t>(key, value);
  } else if (key == "good_to_malicious_count") {
    g.good_to_malicious_count = AsInt<std::uint32_t>(key, value);
  } else if (key == "malicious_to_good_count") {
    g.malicious_to_good_count = AsInt<std::uint32_t>(key, value);
  } else if (key == "p_good") {
    g.p_good_service = AsDouble(key, value);
  } else if (key == "p_bad") {
    g.p_bad_service = AsDouble(key, value);
  } else if (key == "switch_point") {
    g.switch_point = AsDouble(key, value);
  } else if (key == "on_off_phases") {
    g.on_off_phases = AsInt<std::uint32_t>(key, value);
  } else if (key == "span_ticks") {
    g.span_ticks = AsInt<std::uint64_t>(key, value);
  } else if (key == "scheme" || key == "schemes") {
    schemes.clear();
    for (const std::string& s : text::Split(value, ';')) {
      try {
        schemes.push_back(WeightScheme::Parse(s));
      } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
      }
    }
  } else if (key == "theta") {
    theta = AsDouble(key, value);
  } else if (key == "checkpoints") {
    checkpoints.clear();
    for (const std::string& s : text::Split(value, ',')) {
      checkpoints.push_back(AsInt<std::uint64_t>(key, s));
    }
  } else if (key == "sweep") {
    sweep_fractions.clear();
    for (const std::string& s : text::Split(value, ',')) {
      sweep_fractions.push_back(AsDouble(key, s));
    }
  } else if (key == "tracked") {
    tracked.clear();
    for (const std::string& s : text::Split(value, ',')) {
      tracked.emplace_back(AsInt<std::uint32_t>(key, s));
    }
  } else if (key == "window") {
    window = AsInt<std::uint64_t>(key, value);
  } else if (key == "malicious_kinds") {
    malicious_kinds.clear();
    for (const std::string& s : text::Split(value, ',')) {
      try {
        malicious_kinds.insert(ParseBehaviorKind(s));
      } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
      }
    }
  } else if (key == "bad_mouthing") {
    attacks.bad_mouthing = AsBool(key, value);
  } else if (key == "ballot_stuffing") {
    attacks.ballot_stuffing = AsBool(key, value);
  } else if (key == "out") {
    out_dir = value;
  } else if (key == "seed") {
    seed = AsInt<std::uint64_t>(key, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

ExperimentConfig ExperimentConfig::FromKeyValues(
    const std::map<std::string, std::string>& values) {
  ExperimentConfig config;
  for (const auto& [k, v] : values) config.Set(k, v);
  return config;
}

std::map<std::string, std::string> ExperimentConfig::ToKeyValues() const {
  const GeneratorConfig& g = generator;
  auto num = [](double d) { return text::FormatDouble(d); };
  std::map<std::string, std::string> kv;
  kv["trace"] = trace_path ? trace_path->string() : "";
  kv["objects"] = std::to_string(g.object_count);
  kv["events"] = std::to_string(g.target_event_count);
  kv["malicious_fraction"] = num(g.malicious_fraction);
  kv["communities"] = std::to_string(g.community_count);
  kv["mean_communities"] = num(g.mean_communities_per_object);
  kv["mean_friends"] = num(g.mean_friends_per_object);
  kv["multicast_groups"] = std::to_string(g.multicast_group_count);
  kv["mean_multicast"] = num(g.mean_multicast_groups);
  kv["community_friend_bias"] = num(g.community_friend_bias);
  kv["friend_bias"] = num(g.friend_bias);
  kv["on_off_count"] = std::to_string(g.on_off_count);
  kv["good_to_malicious_count"] = std::to_string(g.good_to_malicious_count);
  kv["malicious_to_good_count"] = std::to_string(g.malicious_to_good_count);
  kv["p_good"] = num(g.p_good_service);
  kv["p_bad"] = num(g.p_bad_service);
  kv["switch_point"] = num(g.switch_point);
  kv["on_off_phases"] = std::to_string(g.on_off_phases);
  kv["span_ticks"] = std::to_string(g.span_ticks);
  kv["schemes"] = text::Join(schemes, ";", [](const WeightScheme& s) {
    return s.ToString();
  });
  kv["theta"] = num(theta);
  kv["checkpoints"] = text::Join(checkpoints, ",", [](std::uint64_t c) {
    return std::to_string(c);
  });
  kv["sweep"] = text::Join(sweep_fractions, ",", num);
  kv["tracked"] = text::Join(tracked, ",", [](ObjectId id) {
    return ToString(id);
  });
  kv["window"] = std::to_string(window);
  kv["malicious_kinds"] = text::Join(malicious_kinds, ",", [](BehaviorKind k) {
    return std::string(BehaviorKindName(k));
  });
  kv["bad_mouthing"] = Bool(attacks.bad_mouthing);
  kv["ballot_stuffing"] = Bool(attacks.ballot_stuffing);
  kv["out"] = out_dir.string();
  kv["seed"] = std::to_string(seed);
  return kv;
}

void ExperimentConfig::Validate() const {
  if (schemes.empty()) throw ConfigError("at least one scheme is required");
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw ConfigError("theta must lie in [0, 1]");
  }
  for (double f : sweep_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw ConfigError("sweep fractions must lie in [0, 1]");
    }
  }
  if (!trace_path) {
    try {
      generator.Validate();
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
  }
}

std::map<std::string, std::string> ParseKeyValueText(const std::string& body) {
  std::map<std::string, std::string> kv;
  std::istringstream in(body);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) {
      s = s.substr(0, hash);
    }
    s = text::Trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line) +
                        ": expected key = value");
    }
    kv[text::ToLower(text::Trim(s.substr(0, eq)))] =
        std::string(text::Trim(s.substr(eq + 1)));
  }
  return kv;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string body = buf.str();

  const std::string_view trimmed = text::Trim(body);
  if (!trimmed.empty() && trimmed.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("malformed manifest " + path.string() + ": " +
                        e.what());
    }
    if (!doc.contains("config") || !doc["config"].is_object()) {
      throw ConfigError("manifest " + path.string() +
                        " has no \"config\" object");
    }
    std::map<std::string, std::string> kv;
    for (const auto& [k, v] : doc["config"].items()) {
      if (!v.is_string()) {
        throw ConfigError("manifest config value for '" + k +
                          "' must be a string");
      }
      kv[k] = v.get<std::string>();
    }
    return ExperimentConfig::FromKeyValues(kv);
  }
  return ExperimentConfig::FromKeyValues(ParseKeyValueText(body));
}

std::vector<std::uint64_t> EffectiveCheckpoints(const ExperimentConfig& config,
                                                std::uint64_t event_count) {
  if (!config.checkpoints.empty()) return config.checkpoints;
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= 5; ++k) {
    const std::uint64_t c = event_count * k / 5;
    if (c > 0 && (out.empty() || c > out.back())) out.push_back(c);
  }
  return out;
}

}  // namespace siot
