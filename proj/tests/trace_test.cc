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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace siot {
namespace {

GeneratorConfig Small(std::uint64_t seed = 3) {
  GeneratorConfig c;
  c.object_count = 40;
  c.target_event_count = 1500;
  c.seed = seed;
  return c;
}

std::string Serialize(const Trace& t) {
  std::ostringstream out;
  WriteTrace(t, out);
  return out.str();
}

Trace Parse(const std::string& text) {
  std::istringstream in(text);
  return ReadTrace(in);
}

constexpr char kTiny[] =
    "#siot-trace v1 objects=3 events=2\n"
    "P 0 F:1 C:1 M:\n"
    "P 1 F:0 C:1,2 M:4\n"
    "P 2 F: C: M:\n"
    "B 1 malicious p_good=0.9 p_bad=0.2 switch=0.5 period=1\n"
    "E 1 10 0 1\n"
    "E 2 10 1 2\n";

TEST(GeneratorTest, DefaultShape) {
  GeneratorConfig c;
  const Trace t = GenerateTrace(c);
  EXPECT_EQ(t.network.size(), 150u);
  EXPECT_EQ(c.malicious_count(), 15u);
  std::size_t malicious = 0;
  for (const auto& [id, m] : t.behaviors) {
    malicious += m.kind != BehaviorKind::kGood;
  }
  EXPECT_EQ(malicious, 15u);
  EXPECT_NEAR(static_cast<double>(t.events.size()), 20000.0, 200.0);
  EXPECT_EQ(t.header.object_count, 150u);
  EXPECT_EQ(t.header.event_count, t.events.size());
}

TEST(GeneratorTest, ZeroFractionMeansAllGood) {
  GeneratorConfig c = Small();
  c.malicious_fraction = 0.0;
  for (const auto& [id, m] : GenerateTrace(c).behaviors) {
    EXPECT_EQ(m.kind, BehaviorKind::kGood);
  }
}

TEST(GeneratorTest, DynamicKindsAreAssigned) {
  GeneratorConfig c = Small();
  c.malicious_fraction = 0.25;
  c.on_off_count = 2;
  c.good_to_malicious_count = 3;
  c.malicious_to_good_count = 4;
  std::map<BehaviorKind, int> counts;
  const Trace t = GenerateTrace(c);
  for (const auto& [id, m] : t.behaviors) ++counts[m.kind];
  EXPECT_EQ(counts[BehaviorKind::kOnOff], 2);
  EXPECT_EQ(counts[BehaviorKind::kGoodToMalicious], 3);
  EXPECT_EQ(counts[BehaviorKind::kMalicious], 10 - 5);
  EXPECT_EQ(counts[BehaviorKind::kMaliciousToGood], 4);
  EXPECT_EQ(counts[BehaviorKind::kGood], 40 - 10 - 4);
  const auto planned = PlannedInteractions(t.network, t.events);
  for (const auto& [id, m] : t.behaviors) {
    if (m.kind != BehaviorKind::kOnOff) continue;
    EXPECT_EQ(m.on_off_period,
              std::max<std::uint64_t>(1, planned[t.network.IndexOf(id)] / 6));
  }
}

TEST(GeneratorTest, SameSeedGivesByteIdenticalFiles) {
  EXPECT_EQ(Serialize(GenerateTrace(Small(9))),
            Serialize(GenerateTrace(Small(9))));
  EXPECT_NE(Serialize(GenerateTrace(Small(9))),
            Serialize(GenerateTrace(Small(10))));
}

TEST(GeneratorTest, RejectsInfeasibleConfigs) {
  GeneratorConfig c = Small();
  c.mean_friends_per_object = 40;
  EXPECT_THROW(GenerateTrace(c), InvalidArgument);
  c = Small();
  c.malicious_fraction = 1.5;
  EXPECT_THROW(GenerateTrace(c), InvalidArgument);
  c = Small();
  c.object_count = 0;
  EXPECT_THROW(GenerateTrace(c), InvalidArgument);
  c = Small();
  c.community_count = 0;
  EXPECT_THROW(GenerateTrace(c), InvalidArgument);
  c = Small();
  c.friend_bias = -0.1;
  EXPECT_THROW(GenerateTrace(c), InvalidArgument);
}

TEST(GeneratorTest, EventsAreWellFormed) {
  const Trace t = GenerateTrace(Small());
  for (std::size_t k = 0; k < t.events.size(); ++k) {
    const TraceEvent& e = t.events[k];
    EXPECT_EQ(e.seq, k + 1);
    EXPECT_NE(e.trustor, e.trustee);
    EXPECT_LT(e.tick, Small().span_ticks);
    if (k > 0) {
      EXPECT_GE(e.tick, t.events[k - 1].tick);
    }
  }
}

TEST(GeneratorTest, InteractionsFavourFriends) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    GeneratorConfig c;
    c.seed = seed;
    c.target_event_count = 5000;
    const Trace t = GenerateTrace(c);
    std::size_t friend_events = 0;
    for (const TraceEvent& e : t.events) {
      friend_events += t.network.Profile(e.trustor).friends.contains(e.trustee);
    }
    double uniform_expectation = 0.0;
    for (ObjectId id : t.network.roster()) {
      uniform_expectation +=
          static_cast<double>(t.network.Profile(id).friends.size()) /
          static_cast<double>(t.network.size() - 1);
    }
    uniform_expectation /= static_cast<double>(t.network.size());
    const double observed =
        static_cast<double>(friend_events) / static_cast<double>(t.events.size());
    EXPECT_GT(observed, 3.0 * uniform_expectation) << "seed " << seed;
  }
}

TEST(TraceFileTest, RoundTripIsIdentity) {
  GeneratorConfig c = Small();
  c.on_off_count = 1;
  c.malicious_to_good_count = 1;
  const Trace t = GenerateTrace(c);
  const std::string text = Serialize(t);
  const Trace back = Parse(text);
  EXPECT_EQ(back, t);
  EXPECT_EQ(Serialize(back), text);
}

TEST(TraceFileTest, ParsesHandWrittenFile) {
  const Trace t = Parse(kTiny);
  EXPECT_EQ(t.network.size(), 3u);
  EXPECT_EQ(t.events.size(), 2u);
  EXPECT_FALSE(t.header.generator_seed.has_value());
  EXPECT_EQ(t.behaviors.at(ObjectId(1)).kind, BehaviorKind::kMalicious);
  EXPECT_EQ(t.behaviors.at(ObjectId(0)).kind, BehaviorKind::kGood);
  EXPECT_EQ(t.network.Profile(ObjectId(1)).communities,
            (std::set<CommunityId>{1, 2}));
  EXPECT_TRUE(t.network.Profile(ObjectId(2)).friends.empty());
}

std::size_t ErrorLine(const std::string& text) {
  try {
    Parse(text);
  } catch (const TraceParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 999;
}

std::string ErrorMessage(const std::string& text) {
  try {
    Parse(text);
  } catch (const TraceParseError& e) {
    return e.what();
  }
  return "";
}

TEST(TraceFileTest, SelfInteractionNamesSeq) {
  const std::string bad =
      "#siot-trace v1 objects=2 events=1\nP 0 F: C: M:\nP 1 F: C: M:\n"
      "E 7 0 1 1\n";
  EXPECT_NE(ErrorMessage(bad).find("seq 7"), std::string::npos);
  EXPECT_EQ(ErrorLine(bad), 4u);
}

TEST(TraceFileTest, TruncatedFileIsCountMismatch) {
  std::string text = kTiny;
  text.resize(text.rfind("E 2"));
  EXPECT_EQ(ErrorLine(text), 0u);
  EXPECT_NE(ErrorMessage(text).find("events"), std::string::npos);
}

TEST(TraceFileTest, MalformedInputsCarryLineNumbers) {
  const std::string header = "#siot-trace v1 objects=2 events=1\n";
  const std::string profiles = "P 0 F: C: M:\nP 1 F: C: M:\n";
  EXPECT_EQ(ErrorLine("garbage\n"), 1u);
  EXPECT_EQ(ErrorLine("#siot-trace v2 objects=1 events=1\n"), 1u);
  EXPECT_EQ(ErrorLine(header + "P 0 F: C:\n"), 2u);
  EXPECT_EQ(ErrorLine(header + "P x F: C: M:\n"), 2u);
  EXPECT_EQ(ErrorLine(header + profiles + "E 1 0 0 9\n"), 4u);
  EXPECT_EQ(ErrorLine(header + profiles + "E 1 0 0 1 5\n"), 4u);
  EXPECT_EQ(ErrorLine(header + profiles + "B 0 sneaky\n"), 4u);
  EXPECT_EQ(ErrorLine(header + profiles + "B 0 good p_good=0.1 p_bad=0.5\n"),
            4u);
  EXPECT_EQ(ErrorLine(header + profiles + "B 5 good\nE 1 0 0 1\n"), 4u);
  EXPECT_EQ(ErrorLine(header + profiles + "X 1\n"), 4u);
  EXPECT_EQ(ErrorLine(header + "P 0 F: C: M:\nP 0 F: C: M:\n"), 3u);
  EXPECT_EQ(ErrorLine(header + profiles + "E 1 0 0 1\nP 2 F: C: M:\n"), 5u);
}

TEST(TraceFileTest, OrderingViolations) {
  const std::string head =
      "#siot-trace v1 objects=2 events=2\nP 0 F: C: M:\nP 1 F: C: M:\n";
  EXPECT_EQ(ErrorLine(head + "E 2 0 0 1\nE 2 0 1 0\n"), 5u);
  EXPECT_EQ(ErrorLine(head + "E 1 5 0 1\nE 2 4 1 0\n"), 5u);
  EXPECT_NO_THROW(Parse(head + "E 1 5 0 1\nE 9 5 1 0\n"));
}

TEST(TraceFileTest, DanglingFriendIsRejected) {
  EXPECT_THROW(Parse("#siot-trace v1 objects=1 events=1\nP 0 F:3 C: M:\n"
                     "E 1 0 0 0\n"),
               TraceParseError);
}

TEST(TraceFileTest, ObjectCountMismatch) {
  EXPECT_EQ(ErrorLine("#siot-trace v1 objects=3 events=1\nP 0 F: C: M:\n"
                      "P 1 F: C: M:\nE 1 0 0 1\n"),
            0u);
}

TEST(TraceFileTest, MissingFileThrows) {
  EXPECT_THROW(LoadTrace("/nonexistent/trace.siot"), Error);
}

TEST(SplitCheckpointsTest, Cases) {
  const std::vector<std::uint64_t> five = {4000, 8000, 12000, 16000, 20000};
  EXPECT_EQ(SplitCheckpoints(20000, five).size(), 5u);
  const std::vector<std::uint64_t> last = {20000};
  EXPECT_EQ(SplitCheckpoints(20000, last), std::vector<std::size_t>{20000});
  EXPECT_EQ(SplitCheckpoints(20000, {}), std::vector<std::size_t>{20000});
  const std::vector<std::uint64_t> over = {25000};
  EXPECT_THROW(SplitCheckpoints(20000, over), InvalidArgument);
  const std::vector<std::uint64_t> zero = {0, 10};
  EXPECT_THROW(SplitCheckpoints(20000, zero), InvalidArgument);
  const std::vector<std::uint64_t> unsorted = {10, 10};
  EXPECT_THROW(SplitCheckpoints(20000, unsorted), InvalidArgument);
}

TEST(PlannedInteractionsTest, CountsTrusteeAppearances) {
  const Trace t = Parse(kTiny);
  EXPECT_EQ(PlannedInteractions(t.network, t.events),
            (std::vector<std::uint64_t>{0, 1, 1}));
}

}  // namespace
}  // namespace siot
