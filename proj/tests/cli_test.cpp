// Copyright 2026 The Ergo Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ergo/io.hpp"

namespace {

using ergo::io::Json;

const std::string kFixtures = ERGO_FIXTURES;
const std::string kGolden = ERGO_GOLDEN;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
  Json error() const { return Json::parse(err); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ergo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

void expect_golden(const std::vector<std::string>& args, const std::string& golden) {
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(kGolden + "/" + golden)) << golden;
}

TEST(Golden, EnergyExample) {
  expect_golden({"ergotropy", "--input", fixture("example1_rho.json"), "--hamiltonian", fixture("example1_hamiltonian.json")},
                "ergotropy_example1.json");
  expect_golden({"diagram", "--input", fixture("example1_rho.json"), "--hamiltonian", fixture("example1_hamiltonian.json")},
                "diagram_example1.json");
}

TEST(Golden, SingleShotExample) {
  expect_golden({"majorize", "--input", fixture("example2_rho.json"), "--input", fixture("example2_sigma.json")},
                "majorize_example2.json");
  expect_golden({"wsingle", "--input", fixture("example2_sigma.json"), "--hamiltonian", fixture("example2_hamiltonian.json"),
                 "--beta", "1"},
                "wsingle_example2_sigma.json");
}

TEST(Golden, Entanglement) {
  expect_golden({"classify3", "--input", fixture("w_symmetric.json")}, "classify3_w.json");
  expect_golden({"classify3", "--input", fixture("ghz_two_thirds.json")}, "classify3_ghz.json");
  expect_golden({"measure", "--input", fixture("bell.json"), "--hamiltonian", fixture("qubit_hamiltonian.json")},
                "measure_bell.json");
}

TEST(Golden, SampledChannel) {
  expect_golden({"epo-sample", "--hamiltonian", "diag:0,1,1,2", "--seed", "7"}, "epo_sample_seed7.json");
}

TEST(Values, Ergotropy) {
  const auto r = run({"ergotropy", "-i", fixture("example1_sigma.json"), "-H", fixture("example1_hamiltonian.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(r.json()["W_e"].get<double>(), 0.47, 1e-12);
  const auto s = run({"ergotropy", "-i", fixture("example1_rho.json"), "-H", "diag:-1,0,1"});
  EXPECT_NEAR(s.json()["W_e"].get<double>(), 0.55, 1e-12);
}

TEST(Values, MajorizeIdenticalSpectra) {
  const auto r = run({"majorize", "-i", fixture("example1_rho.json"), "-i", fixture("example1_rho.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["relation"], "Equal");
}

TEST(Values, DiagramPoints) {
  const auto j = run({"diagram", "-i", fixture("example1_rho.json"), "-H", fixture("example1_hamiltonian.json")}).json();
  ASSERT_EQ(j["points"].size(), 4u);
  EXPECT_NEAR(j["points"][0]["E"].get<double>(), 0.0, 1e-15);
  EXPECT_NEAR(j["points"][1]["E"].get<double>(), -0.55, 1e-12);
  for (const auto& p : j["points"]) {
    for (const char* k : {"label", "S_nats", "S_bits", "E"}) EXPECT_TRUE(p.contains(k));
  }
}

TEST(Values, InfiniteBetaIsSpelledOut) {
  const auto r = run({"gibbs", "-H", "diag:0,1,1,2", "--beta", "inf"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["beta"], "inf");
  EXPECT_EQ(r.json()["populations"][0], 1.0);
  const auto a = run({"asymptotic", "-i", fixture("ghz_two_thirds.json"), "-H", "ladder:2"});
  EXPECT_EQ(a.code, 2);  // three parties
}

TEST(Smoke, EverySubcommandSucceeds) {
  const std::string rho = fixture("example1_rho.json"), sigma = fixture("example1_sigma.json"),
                    h = fixture("example1_hamiltonian.json"), bell = fixture("bell.json"),
                    w = fixture("w_symmetric.json");
  const std::string channel = ::testing::TempDir() + "channel.json";
  ASSERT_EQ(run({"epo-sample", "-H", h, "--seed", "1", "--output", channel}).code, 0);
  const std::vector<std::vector<std::string>> cases = {
      {"passive", "-i", rho, "-H", h},
      {"ergotropy", "-i", rho, "-H", h},
      {"gibbs", "-H", h, "--beta", "-0.5"},
      {"wth", "-i", rho, "-H", h},
      {"renyi", "-i", rho, "--alpha", "inf"},
      {"divergence", "-i", rho, "-i", sigma, "--alpha", "0.5"},
      {"divergence", "-i", rho, "-H", h, "--beta", "1", "--alpha", "1"},
      {"wsingle", "-i", rho, "-H", h, "--beta", "2"},
      {"majorize", "-i", rho, "-i", sigma},
      {"epo-verify", "-i", channel},
      {"epo-verify", "-i", channel, "-i", rho, "--beta", "1"},
      {"measure", "-i", bell, "-H", "ladder:2"},
      {"vidal", "-i", bell},
      {"vidal", "-i", bell, "--k", "2"},
      {"convert-prob", "-i", bell, "-i", bell},
      {"egap", "-i", bell},
      {"percopy", "-i", bell, "-H", "ladder:2", "--copies", "3"},
      {"asymptotic", "-i", bell, "-H", "ladder:2"},
      {"cut-gaps", "-i", w},
      {"monogamy", "-i", w},
      {"dephased-gap", "-i", w},
      {"classify3", "-i", w, "--tol", "1e-9"},
      {"diagram", "-i", rho, "-H", h},
  };
  for (const auto& args : cases) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_NO_THROW(r.json()) << args[0];
  }
  const auto verify = run({"epo-verify", "-i", channel, "-i", rho, "--beta", "1"}).json();
  EXPECT_EQ(verify["pass"], true);
  for (const auto& c : verify["monotones"]) EXPECT_EQ(c["pass"], true) << c["name"];
  std::remove(channel.c_str());
}

TEST(Values, SubcommandNumbers) {
  const auto bell = fixture("bell.json"), w = fixture("w_symmetric.json");
  EXPECT_NEAR(run({"egap", "-i", bell}).json()["gap"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(run({"dephased-gap", "-i", w}).json()["gap"].get<double>(), 1.0 / 3, 1e-12);
  EXPECT_NEAR(run({"asymptotic", "-i", bell, "-H", "ladder:2"}).json()["value"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(run({"convert-prob", "-i", bell, "-i", bell}).json()["p"].get<double>(), 1.0, 1e-12);
  const auto m = run({"monogamy", "-i", w}).json();
  EXPECT_NEAR(m["slack"].get<double>(), 0.0, 1e-9);
  const auto renyi = run({"renyi", "-i", fixture("example2_sigma.json")}).json();
  EXPECT_NEAR(renyi["S_bits"].get<double>(), 1.58129, 5e-6);
}

TEST(Determinism, SameSeedSameBytes) {
  const auto a = run({"epo-sample", "-H", "diag:0,1,1,2", "--seed", "3"});
  const auto b = run({"epo-sample", "-H", "diag:0,1,1,2", "--seed", "3"});
  const auto c = run({"epo-sample", "-H", "diag:0,1,1,2", "--seed", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(Output, WritesFile) {
  const std::string path = ::testing::TempDir() + "out.json";
  const auto r = run({"ergotropy", "-i", fixture("example1_rho.json"), "-H", "diag:-1,0,1", "--output", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NEAR(Json::parse(slurp(path))["W_e"].get<double>(), 0.55, 1e-12);
  std::remove(path.c_str());
}

TEST(Errors, ValidationExitsTwo) {
  auto r = run({"ergotropy", "-i", "/no/such/file.json", "-H", "diag:0,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.error()["code"], 2);
  EXPECT_EQ(r.error()["path"], "/no/such/file.json");
  EXPECT_TRUE(r.error().contains("message"));

  const std::string bad = ::testing::TempDir() + "bad.json";
  {
    std::ofstream f(bad);
    f << "[1, 2";
  }
  r = run({"renyi", "-i", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.error()["path"], bad);
  std::remove(bad.c_str());

  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"ergotropy", "--no-such-flag"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"gibbs", "-H", "diag:0,1", "--beta", "warm"}).code, 2);
  EXPECT_EQ(run({"gibbs", "-H", "diag:0,1"}).code, 2);
  EXPECT_EQ(run({"ergotropy", "-i", fixture("example1_rho.json"), "-H", "diag:0,1"}).code, 2);
  EXPECT_EQ(run({"majorize", "-i", fixture("example1_rho.json")}).code, 2);
  EXPECT_EQ(run({"measure", "-i", fixture("example1_rho.json"), "-H", "ladder:3"}).code, 2);
}

TEST(Errors, DomainExitsThree) {
  auto r = run({"wsingle", "-i", fixture("example1_rho.json"), "-H", fixture("example1_hamiltonian.json"), "--beta", "-1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.error()["code"], 3);
  EXPECT_EQ(run({"renyi", "-i", fixture("example1_rho.json"), "--alpha", "-2"}).code, 3);
  EXPECT_EQ(run({"divergence", "-i", fixture("example1_rho.json"), "-i", fixture("example1_rho.json"), "--alpha", "3"}).code,
            3);
  EXPECT_EQ(run({"percopy", "-i", fixture("bell.json"), "-H", "ladder:2", "--copies", "0"}).code, 2);
}

TEST(Help, ExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("classify3"), std::string::npos);
}

}  // namespace
