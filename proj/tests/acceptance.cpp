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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fluxwire/analysis.hpp"
#include "fluxwire/builtin.hpp"
#include "fluxwire/circuit.hpp"
#include "fluxwire/gf.hpp"
#include "fluxwire/netlist.hpp"
#include "fluxwire/pulse_sim.hpp"
#include "fluxwire/rs.hpp"
#include "fluxwire/rs_circuit.hpp"
#include "mutation_harness.hpp"

namespace fluxwire {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

const FieldContext& gf16() {
  static const FieldContext f = FieldContext::gf16();
  return f;
}

WordPoly words(const std::vector<std::string>& bits) {
  WordPoly out;
  for (const auto& b : bits) out.push_back(gf16().parse(b));
  return out;
}

std::string inline_words(const WordPoly& w) { return format_words_inline(gf16(), w); }

const std::vector<WordPoly>& reference_messages() {
  static const std::vector<WordPoly> m = {
      words({"0100", "1110", "0111", "1111", "0100", "0010", "0001", "1100"}),
      words({"0001", "0010", "0011", "0100", "0101", "0110", "0111", "1000"}),
      words({"1000", "1000", "1000", "1000", "1000", "1000", "1000", "1000"}),
      words({"0010", "0101", "0011", "0101", "0110", "0100", "0001", "0101"})};
  return m;
}

const std::vector<WordPoly>& reference_parities() {
  static const std::vector<WordPoly> p = {words({"1000", "0011", "0011", "1101"}),
                                          words({"1010", "1010", "0001", "0001"}),
                                          words({"0101", "0001", "0110", "0010"}),
                                          words({"0000", "0010", "0100", "0111"})};
  return p;
}

Outcome golden_netlist() {
  auto [c, in, loops, co] = Circuit<3, 2>::create("HalfAdder", {"a", "b", "clk"}, {"c", "s"});
  auto [clk1, clk2] = c.split(std::move(in[2]));
  auto [a1, a2] = c.split(std::move(in[0]));
  auto [b1, b2] = c.split(std::move(in[1]));
  Wire cw = c.and_(std::move(a1), std::move(b1), std::move(clk1), "c");
  Wire sw = c.xor_(std::move(a2), std::move(b2), std::move(clk2), "s");
  c.set_outputs({std::move(cw), std::move(sw)});
  auto sealed = std::move(c).finalize();
  const std::string expected =
      ".subckt HalfAdder a b clk c s\n"
      "XSPLIT1 clk _clk_0 _clk_1 THmitll_SPLIT\n"
      "XSPLIT2 a _a_0 _a_1 THmitll_SPLIT\n"
      "XSPLIT3 b _b_0 _b_1 THmitll_SPLIT\n"
      "XAND4 _a_0 _b_0 _clk_0 c THmitll_AND2\n"
      "XXOR5 _a_1 _b_1 _clk_1 s THmitll_XOR\n"
      ".ends\n";
  auto lines = to_spice(*sealed);
  const bool builtin_same = join_lines(to_spice(*half_adder())) == expected;
  return {join_lines(lines) == expected && lines.size() == 7 && builtin_same,
          std::to_string(lines.size()) + " lines, byte-exact"};
}

Outcome gf_table() {
  const char* expected[16][3] = {
      {"0", "0", "0000"},          {"1", "1", "1000"},
      {"α", "α", "0100"},          {"α^2", "α^2", "0010"},
      {"α^3", "α^3", "0001"},      {"α^4", "1+α", "1100"},
      {"α^5", "α+α^2", "0110"},    {"α^6", "α^2+α^3", "0011"},
      {"α^7", "1+α+α^3", "1101"},  {"α^8", "1+α^2", "1010"},
      {"α^9", "α+α^3", "0101"},    {"α^10", "1+α+α^2", "1110"},
      {"α^11", "α+α^2+α^3", "0111"}, {"α^12", "1+α+α^2+α^3", "1111"},
      {"α^13", "1+α^2+α^3", "1011"}, {"α^14", "1+α^3", "1001"}};
  auto rows = gf16().table_rows();
  int good = 0;
  for (std::size_t i = 0; i < rows.size() && i < 16; ++i) {
    good += rows[i].power == expected[i][0] && rows[i].polynomial == expected[i][1] &&
            rows[i].binary == expected[i][2];
  }
  return {rows.size() == 16 && good == 16, std::to_string(good) + "/16 rows exact"};
}

Outcome generator() {
  WordPoly g = generator_poly(gf16(), 4);
  std::string text;
  for (auto w : g) text += (text.empty() ? "" : ", ") + ("α^" + std::to_string(gf16().log(w)));
  WordPoly expected = {gf16().alpha_pow(10), gf16().alpha_pow(3), gf16().alpha_pow(6),
                       gf16().alpha_pow(13), gf16().alpha_pow(0)};
  return {g == expected, "(" + text + ")"};
}

Outcome worked_example() {
  WordPoly p = rs_encode(RSParams::rs12_8(), reference_messages()[3]);
  return {inline_words(p) == "0000 0010 0100 0111", "(" + inline_words(p) + ")"};
}

Outcome reference_vectors() {
  auto params = RSParams::rs12_8();
  bool ok = true;
  for (std::size_t i = 0; i < 4; ++i) {
    ok = ok && rs_encode(params, reference_messages()[i]) == reference_parities()[i];
  }
  int simulated = 0;
  for (Clocking clocking : {Clocking::kConcurrent, Clocking::kCounterflow}) {
    EncoderConfig cfg;
    cfg.clocking = clocking;
    EncoderRun run = run_encoder_detailed(cfg, reference_messages());
    ok = ok && run.parities == reference_parities() && run.diagnostics.empty();
    ++simulated;
  }
  return {ok, "rs_encode and " + std::to_string(simulated) +
                  " simulated encoders (concurrent, counterflow) agree on 4/4"};
}

Outcome defect_detection() {
  std::string reused_net;
  {
    auto [c, in, loops, co] = Circuit<3, 2>::create("HalfAdder", {"a", "b", "clk"}, {"c", "s"});
    auto [clk1, clk2] = c.split(std::move(in[2]));
    auto [b1, b2] = c.split(std::move(in[1]));
    Wire a = std::move(in[0]);
    Wire cw = c.and_(std::move(a), std::move(b1), std::move(clk1), "c");
    try {
      c.xor_(std::move(a), std::move(b2), std::move(clk2), "s");  // NOLINT(bugprone-use-after-move)
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kAlreadyConsumed) reused_net = e.net();
    }
  }
  std::string dangling_net;
  {
    auto [c, in, loops, co] = Circuit<3, 2>::create("HalfAdder", {"a", "b", "clk"}, {"c", "s"});
    auto [clk1, clk2] = c.split(std::move(in[2]));
    auto [b1, b2] = c.split(std::move(in[1]));
    auto [a1, a2] = c.split(std::move(in[0]));
    auto [a2b, a3] = c.split(std::move(a2));
    Wire cw = c.and_(std::move(a1), std::move(b1), std::move(clk1), "c");
    Wire sw = c.xor_(std::move(a2b), std::move(b2), std::move(clk2), "s");
    c.set_outputs({std::move(cw), std::move(sw)});
    try {
      std::move(c).finalize();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDanglingWire && e.net() == a3.net()) dangling_net = e.net();
    }
  }
  testing::MutantReport report = testing::run_mutants(20260417, 100);
  const int rejected = report.total - static_cast<int>(report.failures.size());
  for (const auto& f : report.failures) std::printf("  %s\n", f.c_str());
  return {reused_net == "a" && !dangling_net.empty() && rejected == 100,
          "reuse of '" + reused_net + "' rejected, dangling '" + dangling_net + "' at finalize, " +
              std::to_string(rejected) + "/100 mutants rejected (" +
              std::to_string(report.drops) + " drop, " + std::to_string(report.duplicates) +
              " duplicate)"};
}

Outcome field_axioms() {
  const FieldContext& f = gf16();
  long checked = 0;
  bool ok = true;
  for (std::uint8_t a = 0; a < 16; ++a) {
    for (std::uint8_t b = 0; b < 16; ++b) {
      for (std::uint8_t c = 0; c < 16; ++c) {
        FieldElement x{a}, y{b}, z{c};
        ok = ok && f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)) &&
             (x + y) + z == x + (y + z) && f.mul(x, y) == f.mul(y, x) && x + y == y + x &&
             f.mul(x, y + z) == f.mul(x, y) + f.mul(x, z);
        ++checked;
      }
    }
  }
  return {ok, std::to_string(checked) + " triples"};
}

Outcome multipliers() {
  int good = 0;
  int total = 0;
  std::vector<int> depths;
  for (int e : {10, 3, 6, 13}) {
    MultiplierPlan plan = plan_const_multiplier(gf16(), gf16().alpha_pow(e));
    Sealed circuit = build_multiplier_circuit(plan);
    FlatGraph g = flatten(*circuit);
    auto depth = clocked_path_depth(g);
    depths.push_back(depth && depth->min == depth->max ? depth->max : -1);
    for (std::uint8_t x = 0; x < 16; ++x) {
      std::vector<PulseEvent> stim;
      for (int b = 0; b < 4; ++b) {
        if ((x >> b) & 1) stim.push_back({10, "x" + std::to_string(b)});
      }
      for (int s = 0; s <= plan.depth(); ++s) stim.push_back({100 + 100 * s, "clk"});
      SimTrace t = simulate(g, stim, {}, 1000, {"y0", "y1", "y2", "y3"});
      std::uint32_t y = 0;
      for (int b = 0; b < 4; ++b) {
        if (t.count("y" + std::to_string(b)) == 1) y |= 1u << b;
      }
      good += y == gf16().mul(gf16().alpha_pow(e), FieldElement{x}).bits ? 1 : 0;
      ++total;
    }
  }
  const bool equal = depths[0] == 2 && depths[1] == 2 && depths[2] == 2 && depths[3] == 2;
  return {good == 64 && total == 64 && equal,
          std::to_string(good) + "/" + std::to_string(total) +
              " products correct, clocked depth " + std::to_string(depths[0]) + "/" +
              std::to_string(depths[1]) + "/" + std::to_string(depths[2]) + "/" +
              std::to_string(depths[3])};
}

Outcome random_batches() {
  constexpr int kBatches = 100;
  auto params = RSParams::rs12_8();
  std::mt19937_64 rng(20261017);
  int mismatched = 0;
  int runs = 0;
  for (Clocking clocking : {Clocking::kConcurrent, Clocking::kCounterflow}) {
    EncoderConfig cfg;
    cfg.clocking = clocking;
    for (int b = 0; b < kBatches; ++b) {
      std::vector<WordPoly> batch(4, WordPoly(8));
      for (auto& m : batch) {
        for (auto& w : m) w = FieldElement{static_cast<std::uint8_t>(rng() % 16)};
      }
      auto simulated = run_encoder(cfg, batch);
      for (std::size_t s = 0; s < 4; ++s) {
        mismatched += simulated[s] != rs_encode(params, batch[s]) ? 1 : 0;
      }
      ++runs;
    }
  }
  return {mismatched == 0, std::to_string(runs) + " batches (" + std::to_string(kBatches) +
                               " per clocking), " + std::to_string(mismatched) +
                               " mismatching streams"};
}

Outcome net_statistics() {
  bool ok = true;
  std::ostringstream detail;
  for (Clocking clocking : {Clocking::kConcurrent, Clocking::kCounterflow}) {
    EncoderConfig cfg;
    cfg.clocking = clocking;
    NetStats s = net_stats(*build_encoder(cfg));
    ok = ok && s.nets >= 398 && s.nets <= 1592 && s.auto_fraction() >= 0.5 &&
         s.multiply_driven == 0 && s.dangling == 0;
    detail << (clocking == Clocking::kConcurrent ? "" : "; ") << clocking_name(clocking) << ": "
           << s.nets << " nets, " << s.auto_named << " auto-named ("
           << static_cast<int>(s.auto_fraction() * 1000 + 0.5) / 10.0 << "%), "
           << s.multiply_driven << " duplicate, " << s.dangling << " dangling";
  }
  return {ok, detail.str()};
}

Outcome latency() {
  EncoderConfig cfg;
  // Messages whose p_0 (the last word out) is nonzero in the last stream.
  std::vector<WordPoly> messages = reference_messages();
  std::swap(messages[0], messages[3]);
  EncoderRun run = run_encoder_detailed(cfg, messages);
  const bool ok = run.last_parity_cycle >= 44 && run.last_parity_cycle <= 52 &&
                  run.last_pulse_cycle == run.last_parity_cycle;
  return {ok, "last parity window opens in read-clock cycle " +
                  std::to_string(run.last_parity_cycle) + ", last output pulse in cycle " +
                  std::to_string(run.last_pulse_cycle) + " (target 48 +/- 4)"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no runtime bound
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace fluxwire

int main() {
  using namespace fluxwire;
  const std::vector<Criterion> criteria = {
      {1, "golden half-adder netlist", 1, golden_netlist},
      {2, "GF(2^4) element table", 1, gf_table},
      {3, "generator polynomial", 0, generator},
      {4, "worked encoding example", 0, worked_example},
      {5, "reference message vectors", 30, reference_vectors},
      {6, "defect detection", 5, defect_detection},
      {7, "field axioms", 5, field_axioms},
      {8, "constant multiplier soundness", 10, multipliers},
      {9, "oracle equivalence at scale", 300, random_batches},
      {10, "naming and scale", 5, net_statistics},
      {11, "latency in clock cycles", 0, latency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.limit_s == 0 || seconds < c.limit_s;
    if (!in_time) o.detail += "; exceeded " + std::to_string(c.limit_s) + " s";
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %d (%s): %s [%.3f s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
