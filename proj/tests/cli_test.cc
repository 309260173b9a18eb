// Copyright 2026 The padlcheck Authors
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

#include "padl/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "padl/aut.h"
#include "padl/equivalence.h"
#include "padl/operators.h"
#include "test_util.h"

namespace padl {
namespace {

namespace fs = std::filesystem;
using ::padl::testing::FixturePath;
using Json = nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("padlcheck_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string Write(const std::string& name, const std::string& content) const {
    std::string p = (path_ / name).string();
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }
  std::string Path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Check, CruiseControlBothRoutesAgree) {
  Outcome r = Cli({"check", FixturePath("cruise.padl"), "--mode", "both", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["reduction"]["conclusion"], "deadlock_free");
  EXPECT_EQ(j["direct"]["verdict"], "holds");
  EXPECT_EQ(j["agreement"], true);
  ASSERT_EQ(j["reduction"]["conditions"].size(), 2u);
  EXPECT_EQ(j["reduction"]["conditions"][0]["id"], "1");
  EXPECT_EQ(j["reduction"]["conditions"][1]["id"], "2b");
}

TEST(Check, MutatedServerExitsWithFormula) {
  Outcome r = Cli({"check", FixturePath("mutants/server_no_response.padl"), "--format", "json"});
  EXPECT_EQ(r.code, kExitFailed);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["reduction"]["conclusion"], "conditions_failed");
  for (const Json& c : j["reduction"]["checks"]) {
    EXPECT_EQ(c["verdict"], "fails");
    EXPECT_TRUE(c["formula"].is_string());
  }
  Outcome text = Cli({"check", FixturePath("mutants/server_no_response.padl")});
  EXPECT_NE(text.out.find("distinguishing formula: "), std::string::npos);
}

TEST(Check, DeadlockExitsOne) {
  Outcome r = Cli({"check", FixturePath("cyclic_wait.padl"), "--mode", "direct"});
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_NE(r.out.find("trace to deadlock: (empty)"), std::string::npos);
}

TEST(Check, MissingFileIsUsageError) {
  Outcome r = Cli({"check", "/nonexistent/arch.padl"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("cannot read"), std::string::npos);
}

TEST(Check, ParseErrorIsReportedWithLocation) {
  TempDir dir;
  std::string path = dir.Write("broken.padl", "ARCHI_TYPE Broken(void)\n  ARCHI_ELEM_TYPES\n");
  Outcome r = Cli({"check", path});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find(path + ":"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Check, StateLimitIsInconclusive) {
  Outcome r = Cli({"check", FixturePath("cruise.padl"), "--mode", "both", "--state-limit", "20"});
  EXPECT_EQ(r.code, kExitInconclusive);
}

TEST(Check, InvalidOptionsAreUsageErrors) {
  EXPECT_EQ(Cli({"check", FixturePath("cs_sync.padl"), "--queue-capacity", "0"}).code, kExitUsage);
  EXPECT_EQ(Cli({"check", FixturePath("cs_sync.padl"), "--state-limit", "0"}).code, kExitUsage);
  EXPECT_EQ(Cli({"check", FixturePath("cs_sync.padl"), "--mode", "fast"}).code, kExitUsage);
  EXPECT_EQ(Cli({"check", FixturePath("cs_sync.padl"), "--deadlock", "soft"}).code, kExitUsage);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(Check, StrictNotionIsAccepted) {
  Outcome r = Cli({"check", FixturePath("cs_sync.padl"), "--mode", "direct", "--deadlock", "strict",
               "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(Json::parse(r.out)["config"]["deadlock"], "strict");
}

TEST(Check, JsonWithoutTimingsIsReproducible) {
  std::vector<std::string> args = {"check",    FixturePath("cruise.padl"), "--mode", "both",
                                   "--format", "json",                     "--no-timings"};
  Outcome a = Cli(args);
  Outcome b = Cli(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("seconds"), std::string::npos);
  EXPECT_NE(Cli({"check", FixturePath("cruise.padl"), "--format", "json"}).out.find("seconds"),
            std::string::npos);
}

TEST(Check, TextAndJsonCarryTheSameVerdicts) {
  for (const char* fixture : {"cruise.padl", "cs_sync.padl", "single.padl", "cyclic_wait.padl"}) {
    Outcome json = Cli({"check", FixturePath(fixture), "--mode", "both", "--format", "json"});
    Outcome text = Cli({"check", FixturePath(fixture), "--mode", "both"});
    EXPECT_EQ(json.code, text.code) << fixture;
    Json j = Json::parse(json.out);
    EXPECT_NE(text.out.find("conclusion: " + j["reduction"]["conclusion"].get<std::string>()),
              std::string::npos)
        << fixture;
    EXPECT_NE(text.out.find("deadlock freedom " + j["direct"]["verdict"].get<std::string>() +
                            " ("),
              std::string::npos)
        << fixture;
  }
}

TEST(Check, OutputAndDotFiles) {
  TempDir dir;
  Outcome r = Cli({"check", FixturePath("cruise.padl"), "--out", dir.Path("report.txt"), "--dot",
               dir.Path("graph.dot")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(Slurp(dir.Path("report.txt")).find("conclusion: deadlock_free"), std::string::npos);
  EXPECT_NE(Slurp(dir.Path("graph.dot")).find("subgraph cluster_0"), std::string::npos);
  EXPECT_EQ(Cli({"check", FixturePath("cruise.padl"), "--out", "/nonexistent/dir/r.txt"}).code,
            kExitUsage);
}

TEST(Check, SaturatedQueuesAreFlagged) {
  Outcome r = Cli({"check", FixturePath("cs_async.padl"), "--mode", "direct", "--queue-capacity", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("some queue reached capacity 1"), std::string::npos);
  Outcome wide = Cli({"check", FixturePath("cs_async.padl"), "--mode", "direct"});
  EXPECT_EQ(wide.out.find("some queue reached capacity"), std::string::npos);
}

TEST(Lts, PartiallyClosedServerShowsOnlyLinkNames) {
  Outcome r = Cli({"lts", FixturePath("cs_sync.padl"), "--aei", "S", "--variant", "pc-wob"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Lts lts = ReadAut(r.out);
  EXPECT_EQ(VisibleLabels(lts), (std::vector<std::string>{
                                    "C_1.send_request#S.receive_request_1",
                                    "C_2.send_request#S.receive_request_2",
                                    "S.send_response_1#C_1.receive_response",
                                    "S.send_response_2#C_2.receive_response",
                                }));
}

TEST(Lts, OpenVariantDiffersOnlyInTau) {
  Outcome open = Cli({"lts", FixturePath("cs_sync.padl"), "--aei", "S", "--variant", "open"});
  Outcome pc = Cli({"lts", FixturePath("cs_sync.padl"), "--aei", "S", "--variant", "pc-wob"});
  ASSERT_EQ(open.code, kExitOk);
  ASSERT_EQ(pc.code, kExitOk);
  Lts a = ReadAut(open.out);
  Lts b = ReadAut(pc.out);
  std::vector<std::string> keep = VisibleLabels(b);
  LabelSet internal;
  for (const std::string& l : VisibleLabels(a)) {
    if (std::find(keep.begin(), keep.end(), l) == keep.end()) internal.insert(l);
  }
  EXPECT_FALSE(internal.empty());
  EXPECT_TRUE(StrongBisimCheck(Hide(a, internal), b).equivalent);
  EXPECT_EQ(a.num_states(), b.num_states());
}

TEST(Lts, DotFormatAndWholeArchitecture) {
  Outcome dot = Cli({"lts", FixturePath("cs_sync.padl"), "--aei", "C_1", "--format", "dot"});
  EXPECT_EQ(dot.code, kExitOk);
  EXPECT_EQ(dot.out.rfind("digraph \"C_1\" {", 0), 0u);
  Outcome all = Cli({"lts", FixturePath("cs_async.padl"), "--variant", "pc"});
  EXPECT_EQ(all.code, kExitOk);
  EXPECT_EQ(ReadAut(all.out).num_states(), 32u);
}

TEST(Lts, BadRequestsAreUsageErrors) {
  EXPECT_EQ(Cli({"lts", FixturePath("cs_sync.padl"), "--aei", "S", "--variant", "pcwob"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"lts", FixturePath("cs_sync.padl"), "--aei", "X"}).code, kExitUsage);
  EXPECT_EQ(Cli({"lts", FixturePath("cs_sync.padl"), "--context", "S,Y"}).code, kExitUsage);
  EXPECT_EQ(Cli({"lts", FixturePath("cs_async.padl"), "--variant", "pc-wob", "--buffers", "S"})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"lts", FixturePath("cruise.padl"), "--state-limit", "5"}).code,
            kExitInconclusive);
}

TEST(Graph, CruiseControlHasOneCluster) {
  Outcome r = Cli({"graph", FixturePath("cruise.padl")});
  ASSERT_EQ(r.code, kExitOk);
  std::size_t clusters = 0;
  for (std::size_t at = r.out.find("subgraph cluster_"); at != std::string::npos;
       at = r.out.find("subgraph cluster_", at + 1)) {
    ++clusters;
  }
  EXPECT_EQ(clusters, 1u);
  for (const char* node : {"\"P\"", "\"S\"", "\"C\"", "\"D\"", "\"A\""}) {
    EXPECT_NE(r.out.find(node), std::string::npos) << node;
  }
}

TEST(Graph, SingleAndDisconnected) {
  Outcome single = Cli({"graph", FixturePath("single.padl")});
  EXPECT_EQ(single.code, kExitOk);
  EXPECT_EQ(single.out.find("--"), std::string::npos);
  Outcome split = Cli({"graph", FixturePath("disconnected.padl")});
  EXPECT_NE(split.out.find("\"P_1\" -- \"Q_1\";"), std::string::npos);
  EXPECT_NE(split.out.find("\"P_2\" -- \"Q_2\";"), std::string::npos);
  EXPECT_EQ(Cli({"graph", FixturePath("cruise.padl"), "--out", "/nonexistent/dir/g.dot"}).code,
            kExitUsage);
}

TEST(Equiv, TauIsInvisibleOnlyWeakly) {
  TempDir dir;
  std::string a = dir.Write("a.aut", "des (0, 2, 3)\n(0, \"a\", 1)\n(1, i, 2)\n");
  std::string b = dir.Write("b.aut", "des (0, 1, 2)\n(0, \"a\", 1)\n");
  EXPECT_EQ(Cli({"equiv", a, a}).code, kExitOk);
  Outcome weak = Cli({"equiv", a, b});
  EXPECT_EQ(weak.code, kExitOk);
  EXPECT_EQ(weak.out, "equivalent (weak bisimilarity)\n");
  Outcome strong = Cli({"equiv", a, b, "--strong", "--format", "json"});
  EXPECT_EQ(strong.code, kExitFailed);
  Json j = Json::parse(strong.out);
  EXPECT_EQ(j["equivalent"], false);
  EXPECT_EQ(j["relation"], "strong");
  EXPECT_EQ(j["formula"], "<a><tau>tt");
}

TEST(Equiv, MalformedInputIsUsageError) {
  TempDir dir;
  std::string a = dir.Write("a.aut", "des (0, 2, 3)\n(0, \"a\", 1)\n");
  std::string b = dir.Write("b.aut", "des (0, 0, 1)\n");
  Outcome r = Cli({"equiv", a, b});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("a.aut"), std::string::npos);
  EXPECT_EQ(Cli({"equiv", a}).code, kExitUsage);
  EXPECT_EQ(Cli({"equiv", b, dir.Path("missing.aut")}).code, kExitUsage);
}

}  // namespace
}  // namespace padl
