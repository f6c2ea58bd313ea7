// Copyright 2026 The bnlive Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

#include "bnlive/textio.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BNLIVE_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(BNLIVE_TEST_DATA) + "/" + name; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bnlive_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Checks the documented report layout; returns an empty string when valid.
std::string report_schema_error(const nlohmann::json& j) {
  const std::set<std::string> keys{"problem", "verdict", "timings_ms", "iterations", "seeds", "concretization",
                                   "witness_path"};
  if (!j.is_object()) return "not an object";
  for (const auto& [k, v] : j.items()) {
    if (!keys.count(k)) return "unexpected key " + k;
  }
  for (const auto& k : keys) {
    if (!j.contains(k)) return "missing key " + k;
  }
  if (j["problem"] != "liveness" && j["problem"] != "fair") return "bad problem";
  if (j["verdict"] != "YES" && j["verdict"] != "NO") return "bad verdict";
  if (!j["iterations"].is_number_unsigned() || !j["seeds"].is_number_unsigned()) return "bad counters";
  const auto& c = j["concretization"];
  if (c != "skipped" && c != "ok" && c != "capped") return "bad concretization";
  if (!j["witness_path"].is_null() && !j["witness_path"].is_string()) return "bad witness_path";
  const auto& t = j["timings_ms"];
  for (const char* k : {"parse", "coverability", "fixed_point", "witness", "total"}) {
    if (!t.contains(k) || !t[k].is_number() || t[k].get<double>() < 0) return std::string("bad timing ") + k;
  }
  if (t.size() != 5) return "extra timings";
  return "";
}

TEST_F(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check " + data("net1.bn")).code, 0);
  EXPECT_EQ(run("check " + data("net2.bn")).code, 1);
  EXPECT_EQ(run("check --fair " + data("net3.bn")).code, 1);
  EXPECT_EQ(run("check-fair " + data("net3.bn")).code, 1);
  EXPECT_EQ(run("check-fair " + data("net4.bn")).code, 0);
  EXPECT_EQ(run("check " + tmp("missing.bn")).code, 2);
  EXPECT_EQ(run("check").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, ParseErrorsCarryLines) {
  std::ofstream(tmp("bad.bn")) << "messages a\nstates q0\ninitial q0\ntrans q0 !zz q0\n";
  const auto r = run("check " + tmp("bad.bn"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 4"), std::string::npos) << r.out;
  std::ofstream(tmp("syntax.bn")) << "states q0\ninitial q0\nwhat\n";
  const auto s = run("check " + tmp("syntax.bn"));
  EXPECT_EQ(s.code, 2);
  EXPECT_NE(s.out.find("line 3"), std::string::npos) << s.out;
}

TEST_F(Cli, OracleExitCodes) {
  EXPECT_EQ(run("oracle " + data("net3.bn") + " --clients 2").code, 0);
  EXPECT_EQ(run("oracle " + data("net3.bn") + " --clients 1").code, 1);
  EXPECT_EQ(run("oracle " + data("net1.bn") + " --clients 1 --fair").code, 0);
  EXPECT_EQ(run("oracle " + data("net4.bn") + " -k 1 --fair").code, 0);
  EXPECT_EQ(run("oracle " + data("net3.bn") + " --clients 0").code, 2);
  EXPECT_EQ(run("oracle " + data("net3.bn") + " --clients 3 --cap 2").code, 2);
}

TEST_F(Cli, JsonReportSchema) {
  for (const char* args : {"check --json ", "check --json --fair ", "check-fair --json "}) {
    for (const char* net : {"net1.bn", "net2.bn", "net3.bn", "net4.bn"}) {
      const auto r = run(std::string(args) + data(net));
      ASSERT_LE(r.code, 1) << r.out;
      const auto j = nlohmann::json::parse(r.out);
      EXPECT_EQ(report_schema_error(j), "") << r.out;
      EXPECT_EQ(j["verdict"] == "YES", r.code == 0);
      const auto& t = j["timings_ms"];
      const double phases = t["parse"].get<double>() + t["coverability"].get<double>() +
                            t["fixed_point"].get<double>() + t["witness"].get<double>();
      EXPECT_LE(phases, t["total"].get<double>() + 1e-3);
    }
  }
  const auto j = nlohmann::json::parse(run("check --json --fair " + data("net3.bn")).out);
  EXPECT_EQ(j["problem"], "fair");
  EXPECT_EQ(j["verdict"], "NO");
}

TEST_F(Cli, WitnessRoundTrip) {
  const auto w = tmp("w1.json");
  const auto r = run("check --json --concretize --witness " + w + " " + data("net3.bn"));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["witness_path"], w);
  EXPECT_EQ(report["concretization"], "ok");
  const auto doc = nlohmann::json::parse(slurp(w));
  for (const char* k : {"seeds", "apex", "increasing", "decreasing", "concrete"}) EXPECT_TRUE(doc.contains(k)) << k;
  for (const auto& step : doc["concrete"]["steps"]) {
    EXPECT_TRUE(step.contains("msg"));
    EXPECT_TRUE(step.contains("sender"));
    EXPECT_TRUE(step["receivers"].is_object());
  }
  EXPECT_EQ(run("validate-witness " + data("net3.bn") + " " + w).code, 0);
  // The same document does not fit another network.
  EXPECT_EQ(run("validate-witness " + data("net4.bn") + " " + w).code, 2);

  // Breaking the cycle is detected.
  auto broken = doc;
  auto stray = broken["increasing"].back();
  stray["sender_from"] = "qf";  // qf has no send
  broken["decreasing"].push_back(stray);
  std::ofstream(tmp("broken.json")) << broken.dump();
  EXPECT_EQ(run("validate-witness " + data("net3.bn") + " " + tmp("broken.json")).code, 1);
  auto moved = doc;
  moved["concrete"]["steps"][0]["sender"] = 99;
  std::ofstream(tmp("moved.json")) << moved.dump();
  EXPECT_EQ(run("validate-witness " + data("net3.bn") + " " + tmp("moved.json")).code, 1);

  std::ofstream(tmp("junk.json")) << "{not json";
  EXPECT_EQ(run("validate-witness " + data("net3.bn") + " " + tmp("junk.json")).code, 2);
}

TEST_F(Cli, FairWitness) {
  const auto w = tmp("w4.json");
  ASSERT_EQ(run("check --fair --witness " + w + " " + data("net4.bn")).code, 0);
  EXPECT_EQ(run("validate-witness --fair " + data("net4.bn") + " " + w).code, 0);
  EXPECT_EQ(run("validate-witness " + data("net4.bn") + " " + w).code, 2);
}

TEST_F(Cli, NoWitnessOnNo) {
  const auto w = tmp("none.json");
  EXPECT_EQ(run("check --witness " + w + " " + data("net2.bn")).code, 1);
  EXPECT_FALSE(fs::exists(w));
}

TEST_F(Cli, Instrument) {
  const auto r = run("instrument " + data("net4.bn"));
  ASSERT_EQ(r.code, 0);
  const auto net = bnlive::parse_network(r.out);
  EXPECT_EQ(net.num_states(), 6U);
  EXPECT_EQ(net.transitions().size(), 9U);
  EXPECT_TRUE(net.find_state("q1__hat").has_value());
  EXPECT_TRUE(net.find_message("__n").has_value());
}

TEST_F(Cli, GenIsDeterministic) {
  const auto a = run("gen --states 3 --messages 2 --trans 6 --seed 7");
  const auto b = run("gen --states 3 --messages 2 --trans 6 --seed 7");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto net = bnlive::parse_network(a.out);
  EXPECT_TRUE(net.initials().contains(*net.find_state("q0")));
  EXPECT_TRUE(net.finals().contains(*net.find_state("q2")));
  const auto single = run("gen --states 1 --trans 0");
  ASSERT_EQ(single.code, 0);
  EXPECT_EQ(bnlive::parse_network(single.out).num_states(), 1U);
  int differ = 0;
  for (int s = 1; s <= 5; ++s) {
    const auto x = run("gen --states 5 --messages 2 --trans 12 --seed " + std::to_string(s));
    const auto y = run("gen --states 5 --messages 2 --trans 12 --seed " + std::to_string(s + 100));
    differ += x.out != y.out ? 1 : 0;
  }
  EXPECT_EQ(differ, 5);
  EXPECT_EQ(run("gen --states 0").code, 2);
}

TEST_F(Cli, BenchShape) {
  const auto r = run("bench --sizes 100,200,400 --per-size 2 --seed 3");
  ASSERT_EQ(r.code, 0) << r.out;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "states,transitions,millis,iterations");
  std::vector<std::string> shape;
  while (std::getline(in, line)) shape.push_back(line.substr(0, line.find(',', line.find(',') + 1)));
  ASSERT_EQ(shape.size(), 6U);
  EXPECT_EQ(shape[0].substr(0, 4), "100,");
  EXPECT_EQ(shape[5].substr(0, 4), "400,");
  // Same seed, same instances.
  const auto again = run("bench --sizes 100,200,400 --per-size 2 --seed 3");
  std::istringstream in2(again.out);
  std::getline(in2, line);
  for (const auto& s : shape) {
    std::getline(in2, line);
    EXPECT_EQ(line.substr(0, s.size()), s);
  }
}

}  // namespace
