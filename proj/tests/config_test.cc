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

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

namespace siot {
namespace {

namespace fs = std::filesystem;

fs::path TempFile(const std::string& name, const std::string& body) {
  const fs::path dir = fs::temp_directory_path() / "siot_config_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p, std::ios::binary) << body;
  return p;
}

TEST(ConfigTest, Defaults) {
  const ExperimentConfig c;
  EXPECT_NO_THROW(c.Validate());
  EXPECT_EQ(c.generator.object_count, 150u);
  EXPECT_EQ(c.generator.target_event_count, 20000u);
  EXPECT_EQ(c.theta, 0.5);
  ASSERT_EQ(c.schemes.size(), 3u);
  EXPECT_EQ(c.schemes[0].name(), "ws1");
  EXPECT_EQ(c.sweep_fractions.size(), 6u);
}

TEST(ConfigTest, KeyValuesRoundTrip) {
  ExperimentConfig c;
  c.Set("scheme", "ws2;0.6,0.2,0.2");
  c.Set("theta", "0.55");
  c.Set("checkpoints", "100,200");
  c.Set("tracked", "3,1");
  c.Set("window", "50");
  c.Set("malicious_kinds", "malicious,on_off");
  c.Set("bad_mouthing", "false");
  c.Set("p_good", "0.95");
  c.Set("out", "elsewhere");
  c.Set("seed", "77");
  const ExperimentConfig back = ExperimentConfig::FromKeyValues(c.ToKeyValues());
  EXPECT_EQ(back.ToKeyValues(), c.ToKeyValues());
  EXPECT_EQ(back.schemes[1].direct(), 0.6);
  EXPECT_EQ(back.checkpoints, (std::vector<std::uint64_t>{100, 200}));
  EXPECT_EQ(back.tracked, (std::vector<ObjectId>{ObjectId(3), ObjectId(1)}));
  EXPECT_FALSE(back.attacks.bad_mouthing);
  EXPECT_TRUE(back.attacks.ballot_stuffing);
  EXPECT_EQ(back.malicious_kinds.size(), 2u);
  EXPECT_EQ(back.generator.p_good_service, 0.95);
  EXPECT_EQ(back.seed, 77u);
}

TEST(ConfigTest, BadValuesAreConfigErrors) {
  ExperimentConfig c;
  EXPECT_THROW(c.Set("colour", "red"), ConfigError);
  EXPECT_THROW(c.Set("objects", "many"), ConfigError);
  EXPECT_THROW(c.Set("theta", "high"), ConfigError);
  EXPECT_THROW(c.Set("scheme", "ws9"), ConfigError);
  EXPECT_THROW(c.Set("malicious_kinds", "evil"), ConfigError);
  EXPECT_THROW(c.Set("bad_mouthing", "maybe"), ConfigError);
}

TEST(ConfigTest, ValidateRanges) {
  ExperimentConfig c;
  c.theta = 1.5;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = {};
  c.sweep_fractions = {0.5, 1.1};
  EXPECT_THROW(c.Validate(), ConfigError);
  c = {};
  c.schemes.clear();
  EXPECT_THROW(c.Validate(), ConfigError);
  c = {};
  c.generator.mean_friends_per_object = 500;
  EXPECT_THROW(c.Validate(), ConfigError);
  c.trace_path = "some.siot";
  EXPECT_NO_THROW(c.Validate());
}

TEST(ConfigTest, ParsesFlatText) {
  const auto kv = ParseKeyValueText(
      "# experiment\n"
      "objects = 60   # small\n"
      "\n"
      "Scheme=mean\n");
  EXPECT_EQ(kv.at("objects"), "60");
  EXPECT_EQ(kv.at("scheme"), "mean");
  EXPECT_THROW(ParseKeyValueText("objects 60\n"), ConfigError);
}

TEST(ConfigTest, LoadsFlatFileAndManifest) {
  const ExperimentConfig flat =
      LoadExperimentConfig(TempFile("a.conf", "objects = 60\nseed = 5\n"));
  EXPECT_EQ(flat.generator.object_count, 60u);
  EXPECT_EQ(flat.seed, 5u);

  const ExperimentConfig m = LoadExperimentConfig(TempFile(
      "manifest.json",
      R"({"tool": "siot-trust", "config": {"objects": "70", "theta": "0.6"}})"));
  EXPECT_EQ(m.generator.object_count, 70u);
  EXPECT_EQ(m.theta, 0.6);

  EXPECT_THROW(LoadExperimentConfig(TempFile("b.json", "{\"config\": 3}")),
               ConfigError);
  EXPECT_THROW(LoadExperimentConfig(TempFile("c.json", "{not json")),
               ConfigError);
  EXPECT_THROW(
      LoadExperimentConfig(TempFile("d.json", R"({"config": {"seed": 4}})")),
      ConfigError);
  EXPECT_THROW(LoadExperimentConfig("/nonexistent.conf"), ConfigError);
}

TEST(ConfigTest, EffectiveCheckpoints) {
  ExperimentConfig c;
  EXPECT_EQ(EffectiveCheckpoints(c, 20000),
            (std::vector<std::uint64_t>{4000, 8000, 12000, 16000, 20000}));
  EXPECT_EQ(EffectiveCheckpoints(c, 3), (std::vector<std::uint64_t>{1, 2, 3}));
  c.checkpoints = {5};
  EXPECT_EQ(EffectiveCheckpoints(c, 20000), (std::vector<std::uint64_t>{5}));
}

}  // namespace
}  // namespace siot
