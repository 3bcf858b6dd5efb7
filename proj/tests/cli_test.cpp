// Copyright 2026 The fluxwire Authors
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
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const std::string kCli = FLUXWIRE_CLI;
const fs::path kData = FLUXWIRE_TEST_DATA;
const fs::path kGolden = FLUXWIRE_GOLDEN;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("fluxwire_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Result run(const std::string& args) {
  const fs::path err = scratch() / "stderr.txt";
  const std::string command = "'" + kCli + "' " + args + " 2>'" + err.string() + "'";
  Result r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::string data(const char* name) { return "'" + (kData / name).string() + "'"; }

TEST(Cli, EmitHalfAdderToFile) {
  const fs::path out = scratch() / "ha.sp";
  Result r = run("emit half-adder --format spice --out '" + out.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(out),
            ".subckt HalfAdder a b clk c s\n"
            "XSPLIT1 clk _clk_0 _clk_1 THmitll_SPLIT\n"
            "XSPLIT2 a _a_0 _a_1 THmitll_SPLIT\n"
            "XSPLIT3 b _b_0 _b_1 THmitll_SPLIT\n"
            "XAND4 _a_0 _b_0 _clk_0 c THmitll_AND2\n"
            "XXOR5 _a_1 _b_1 _clk_1 s THmitll_XOR\n"
            ".ends\n");
  EXPECT_NE(r.err.find(out.string()), std::string::npos);
  EXPECT_NE(r.err.find("5 gates, 11 nets"), std::string::npos) << r.err;
}

TEST(Cli, EmitDelayChain) {
  Result r = run("emit delay:5");
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t buffs = 0;
  for (std::size_t p = 0; (p = r.out.find("THmitll_BUFF", p)) != std::string::npos; ++p) ++buffs;
  EXPECT_EQ(buffs, 5u);
}

TEST(Cli, EmitEncoderBothFormats) {
  const fs::path prefix = scratch() / "enc";
  Result r = run("emit rs-encoder --clocking counterflow --format both --out '" +
                 prefix.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  std::string sp = slurp(prefix.string() + ".sp");
  std::string v = slurp(prefix.string() + ".v");
  for (const char* sub : {"gfmul_a3", "gfmul_a6", "gfmul_a10", "gfmul_a13"}) {
    EXPECT_NE(sp.find(std::string(".subckt ") + sub + " "), std::string::npos) << sub;
    EXPECT_NE(v.find(std::string("module ") + sub + "("), std::string::npos) << sub;
  }
  EXPECT_NE(sp.find(".subckt rs12_8_encoder "), std::string::npos);
}

TEST(Cli, EmitWithCellMap) {
  const fs::path map = scratch() / "cells.txt";
  std::ofstream(map) << "AND2=my_and\n";
  Result r = run("emit half-adder --cells '" + map.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("XAND4 _a_0 _b_0 _clk_0 c my_and"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("emit nonsense").code, 2);
  EXPECT_EQ(run("emit half-adder --format pdf").code, 2);
  EXPECT_EQ(run("emit half-adder --bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("rs-encode " + data("bad_words.txt")).code, 2);
  EXPECT_EQ(run("rs-encode /nonexistent/file").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, SimHalfAdder) {
  Result r = run("sim half-adder --stimulus " + data("half_adder.stim"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "60\tc\n");
  EXPECT_NE(r.err.find("1 pulses"), std::string::npos) << r.err;
}

TEST(Cli, SimEmptyStimulus) {
  Result r = run("sim half-adder --stimulus " + data("empty.stim"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "");
}

TEST(Cli, SimUnknownNetNamesIt) {
  Result r = run("sim half-adder --watch c,zz --stimulus " + data("empty.stim"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("zz"), std::string::npos) << r.err;
}

TEST(Cli, SimCounterflowDemoGolden) {
  const fs::path out = scratch() / "cf.trace";
  Result r = run("sim counterflow-demo --stimulus '" + (kGolden / "counterflow_demo.stim").string() +
                 "' --watch dout,loop0,clkout --horizon 700 --out '" + out.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(out), slurp(kGolden / "counterflow_demo.trace"));
}

TEST(Cli, GfTable) {
  Result r = run("gf-table");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("α^4 | 1+α | 1100\n"), std::string::npos);
  std::size_t rows = 0;
  for (char ch : r.out) rows += ch == '\n';
  EXPECT_EQ(rows, 16u);
  EXPECT_EQ(run("gf-table").out, r.out);
}

TEST(Cli, RsEncode) {
  Result r = run("rs-encode " + data("message2.txt"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1010 1010 0001 0001\n");
}

TEST(Cli, RsRunZeros) {
  Result r = run("rs-run " + data("zeros.txt"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0000 0000 0000 0000\nMATCH\n");
}

TEST(Cli, RsRunReferenceMessages) {
  for (const char* clocking : {"concurrent", "counterflow"}) {
    Result r = run("rs-run " + data("reference_messages.txt") + " --clocking " + clocking);
    ASSERT_EQ(r.code, 0) << clocking << ": " << r.err;
    EXPECT_EQ(r.out,
              "1000 0011 0011 1101\n"
              "1010 1010 0001 0001\n"
              "0101 0001 0110 0010\n"
              "0000 0010 0100 0111\n"
              "MATCH\n")
        << clocking;
  }
}

TEST(Cli, RsRunMismatchExitsOne) {
  Result r = run("rs-run " + data("reference_messages.txt") +
                 " --clocking counterflow --feedback-buffs 0");
  EXPECT_EQ(r.code, 1) << r.err;
  EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
}

TEST(Cli, RsRunRandomIsSeeded) {
  Result a = run("--seed 5 rs-run --random 3");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("MATCH"), std::string::npos);
  EXPECT_EQ(run("--seed 5 rs-run --random 3").out, a.out);
}

}  // namespace
