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

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fluxwire/analysis.hpp"
#include "fluxwire/netlist.hpp"
#include "fluxwire/pulse_sim.hpp"
#include "fluxwire/rs_circuit.hpp"

namespace fluxwire {
namespace {

const FieldContext& gf16() {
  static const FieldContext f = FieldContext::gf16();
  return f;
}

WordPoly words(const std::vector<std::string>& bits) {
  WordPoly out;
  for (const auto& b : bits) out.push_back(gf16().parse(b));
  return out;
}

std::vector<WordPoly> reference_messages() {
  return {words({"0100", "1110", "0111", "1111", "0100", "0010", "0001", "1100"}),
          words({"0001", "0010", "0011", "0100", "0101", "0110", "0111", "1000"}),
          words({"1000", "1000", "1000", "1000", "1000", "1000", "1000", "1000"}),
          words({"0010", "0101", "0011", "0101", "0110", "0100", "0001", "0101"})};
}

std::vector<WordPoly> random_messages(std::mt19937& rng, const RSParams& params, int count) {
  std::vector<WordPoly> out(static_cast<std::size_t>(count));
  for (auto& m : out) {
    m.resize(static_cast<std::size_t>(params.k));
    for (auto& w : m) w = FieldElement{static_cast<std::uint8_t>(rng() % params.field.size())};
  }
  return out;
}

std::vector<WordPoly> oracle(const RSParams& params, const std::vector<WordPoly>& messages) {
  std::vector<WordPoly> out;
  for (const auto& m : messages) out.push_back(rs_encode(params, m));
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kParse;
}

TEST(Plan, EveryConstantMatchesFieldMultiplication) {
  for (int e = 0; e < 15; ++e) {
    MultiplierPlan plan = plan_const_multiplier(gf16(), gf16().alpha_pow(e));
    EXPECT_EQ(plan.exponent, e);
    EXPECT_GE(plan.depth(), 2);
    for (unsigned x = 0; x < 16; ++x) {
      ASSERT_EQ(evaluate_plan(plan, x),
                gf16().mul(gf16().alpha_pow(e), FieldElement{static_cast<std::uint8_t>(x)}).bits)
          << "alpha^" << e << " * " << x;
    }
  }
  EXPECT_EQ(code_of([] { plan_const_multiplier(gf16(), FieldElement{0}); }),
            ErrorCode::kInvalidArgument);
}

TEST(Plan, GeneratorCoefficientsFitTwoStages) {
  for (int e : {10, 3, 6, 13}) {
    EXPECT_EQ(plan_const_multiplier(gf16(), gf16().alpha_pow(e)).depth(), 2) << e;
  }
}

TEST(Plan, ChainedSquareRoot) {
  MultiplierPlan plan = plan_chained_multiplier(gf16(), gf16().alpha_pow(3));
  EXPECT_TRUE(plan.chained);
  EXPECT_EQ(plan.exponent, 6);
  EXPECT_EQ(plan.depth(), 2);
  for (unsigned x = 0; x < 16; ++x) {
    EXPECT_EQ(evaluate_plan(plan, x),
              gf16().mul(gf16().alpha_pow(6), FieldElement{static_cast<std::uint8_t>(x)}).bits);
  }
  // alpha^12 = 1 + a + a^2 + a^3 has a row of weight 4 and needs two stages.
  EXPECT_EQ(code_of([] { plan_chained_multiplier(gf16(), gf16().alpha_pow(12)); }),
            ErrorCode::kInvalidConfig);
}

// Applies x on the inputs, clocks `depth` times and reads the outputs.
std::uint32_t simulate_multiplier(const Sealed& circuit, const MultiplierPlan& plan,
                                  Clocking clocking, std::uint32_t x) {
  FlatGraph g = flatten(*circuit);
  const std::string clk = clocking == Clocking::kConcurrent ? "clk" : "clkin";
  std::vector<PulseEvent> stim;
  for (int b = 0; b < 4; ++b) {
    if ((x >> b) & 1u) stim.push_back({10, "x" + std::to_string(b)});
  }
  for (int s = 0; s <= plan.depth(); ++s) stim.push_back({100 + 100 * s, clk});
  std::vector<std::string> outs;
  for (int b = 0; b < 4; ++b) outs.push_back("y" + std::to_string(b));
  SimTrace t = simulate(g, stim, {}, 1000, outs);
  EXPECT_TRUE(t.diagnostics.empty());
  std::uint32_t y = 0;
  for (int b = 0; b < 4; ++b) {
    auto times = t.times(outs[static_cast<std::size_t>(b)]);
    EXPECT_LE(times.size(), 1u);
    if (!times.empty()) y |= 1u << b;
  }
  return y;
}

TEST(MultiplierCircuit, ExhaustiveInPulseSimulation) {
  for (Clocking clocking : {Clocking::kConcurrent, Clocking::kCounterflow}) {
    for (int e : {10, 3, 6, 13}) {
      MultiplierPlan plan = plan_const_multiplier(gf16(), gf16().alpha_pow(e));
      Sealed circuit = build_multiplier_circuit(plan, clocking);
      EXPECT_EQ(circuit->name(), "gfmul_a" + std::to_string(e));
      for (unsigned x = 0; x < 16; ++x) {
        EXPECT_EQ(simulate_multiplier(circuit, plan, clocking, x),
                  gf16().mul(gf16().alpha_pow(e), FieldElement{static_cast<std::uint8_t>(x)}).bits)
            << clocking_name(clocking) << " alpha^" << e << " * " << x;
      }
    }
  }
}

TEST(MultiplierCircuit, EqualClockedDepth) {
  for (int e : {10, 3, 6, 13}) {
    Sealed circuit = build_multiplier_circuit(plan_const_multiplier(gf16(), gf16().alpha_pow(e)));
    auto depth = clocked_path_depth(flatten(*circuit));
    ASSERT_TRUE(depth.has_value());
    EXPECT_EQ(depth->min, 2) << e;
    EXPECT_EQ(depth->max, 2) << e;
  }
}

TEST(MultiplierCircuit, ClockTreeIsBalanced) {
  Sealed circuit = build_multiplier_circuit(plan_const_multiplier(gf16(), gf16().alpha_pow(13)));
  FlatGraph g = flatten(*circuit);
  auto sinks = clock_sinks(g, *g.find_net("clk"));
  ASSERT_FALSE(sinks.empty());
  for (const auto& s : sinks) EXPECT_EQ(s.delay_ps, sinks.front().delay_ps);
}

TEST(Blocks, GatingBankPassesOnlyWhileSet) {
  FlatGraph g = flatten(*build_gating_bank(2));
  std::vector<PulseEvent> stim = {{0, "d0"},  {10, "set"}, {20, "d0"},    {30, "d1"},
                                  {40, "reset"}, {50, "d0"}, {60, "d1"}};
  SimTrace t = simulate(g, stim, {}, 200);
  EXPECT_EQ(t.times("q0"), (std::vector<std::int64_t>{25}));
  EXPECT_EQ(t.times("q1"), (std::vector<std::int64_t>{35}));
}

TEST(Blocks, ShiftRegisterDelaysByDepth) {
  FlatGraph g = flatten(*build_shift_register(2, 3));
  std::vector<PulseEvent> stim = {{0, "d1"}};
  for (int i = 1; i <= 5; ++i) stim.push_back({100 * i, "clk"});
  SimTrace t = simulate(g, stim, {}, 1000);
  ASSERT_EQ(t.count("q1"), 1u);
  EXPECT_GT(t.times("q1")[0], 300);
  EXPECT_LT(t.times("q1")[0], 400);
  EXPECT_EQ(t.count("q0"), 0u);
}

TEST(Blocks, MergeLevels) {
  EXPECT_EQ(merge_levels(1), 0);
  EXPECT_EQ(merge_levels(2), 1);
  EXPECT_EQ(merge_levels(4), 2);
  EXPECT_EQ(merge_levels(5), 3);
}

TEST(Encoder, ReferenceVectorsBothClockings) {
  EncoderConfig cfg;
  auto expected = oracle(cfg.params, reference_messages());
  for (Clocking clocking : {Clocking::kConcurrent, Clocking::kCounterflow}) {
    cfg.clocking = clocking;
    EncoderRun run = run_encoder_detailed(cfg, reference_messages());
    EXPECT_EQ(run.parities, expected) << clocking_name(clocking);
    EXPECT_TRUE(run.diagnostics.empty()) << clocking_name(clocking);
  }
}

TEST(Encoder, RandomBatchesBothClockings) {
  std::mt19937 rng(31);
  for (Clocking clocking : {Clocking::kConcurrent, Clocking::kCounterflow}) {
    EncoderConfig cfg;
    cfg.clocking = clocking;
    for (int batch = 0; batch < 10; ++batch) {
      auto messages = random_messages(rng, cfg.params, 4);
      EXPECT_EQ(run_encoder(cfg, messages), oracle(cfg.params, messages))
          << clocking_name(clocking) << " batch " << batch;
    }
  }
}

TEST(Encoder, ToleratesOtherGateDelays) {
  EncoderConfig cfg;
  DelayConfig slow = DelayConfig::parse("DFF=9\nXOR=9\nOR2=9\nAND2=9\nSPLIT=4\nBUFF=4\nNDRO=6\n");
  EXPECT_EQ(run_encoder(cfg, reference_messages(), slow), oracle(cfg.params, reference_messages()));
}

TEST(Encoder, NetStatistics) {
  for (Clocking clocking : {Clocking::kConcurrent, Clocking::kCounterflow}) {
    EncoderConfig cfg;
    cfg.clocking = clocking;
    NetStats stats = net_stats(*build_encoder(cfg));
    EXPECT_GE(stats.nets, 398u) << clocking_name(clocking);
    EXPECT_LE(stats.nets, 1592u) << clocking_name(clocking);
    EXPECT_GE(stats.auto_fraction(), 0.5) << clocking_name(clocking);
    EXPECT_EQ(stats.multiply_driven, 0u) << clocking_name(clocking);
    EXPECT_EQ(stats.dangling, 0u) << clocking_name(clocking);
  }
}

TEST(Encoder, NetStatsCountHalfAdderDirectly) {
  auto [c, in, l, co] = Circuit<2, 1>::create("t", {"a", "clk"}, {"q"});
  c.set_outputs({c.dff(c.buff(std::move(in[0])), std::move(in[1]), "q")});
  NetStats s = net_stats(*std::move(c).finalize().get());
  EXPECT_EQ(s.nets, 4u);
  EXPECT_EQ(s.auto_named, 1u);
}

TEST(Encoder, LatencyInReadClockCycles) {
  EncoderConfig cfg;
  auto messages = reference_messages();
  // Parity leaves highest degree first, so the final window carries p_0 of
  // the last stream; put a message with nonzero p_0 there.
  std::swap(messages[0], messages[3]);
  EncoderRun run = run_encoder_detailed(cfg, messages);
  EXPECT_GE(run.last_parity_cycle, 44);
  EXPECT_LE(run.last_parity_cycle, 52);
  EXPECT_EQ(run.last_pulse_cycle, run.last_parity_cycle);
}

TEST(Encoder, HeaderPorts) {
  EncoderConfig cfg;
  Sealed concurrent = build_encoder(cfg);
  EXPECT_EQ(concurrent->name(), "rs12_8_encoder");
  EXPECT_EQ(concurrent->ports().inputs.size(), 16u + 4u + 3u);
  EXPECT_EQ(concurrent->ports().outputs,
            (std::vector<std::string>{"out0", "out1", "out2", "out3"}));
  cfg.clocking = Clocking::kCounterflow;
  Sealed counterflow = build_encoder(cfg);
  EXPECT_EQ(counterflow->ports().counter_inputs, (std::vector<std::string>{"clkin"}));
  EXPECT_EQ(counterflow->ports().counter_outputs, (std::vector<std::string>{"clkout"}));
}

// Feedback delay calibration for the counter-flow clock: too few buffers
// let the fed-back word race ahead of its clock, too many make it miss it.
TEST(Encoder, CounterflowFeedbackDelayWindow) {
  EncoderConfig cfg;
  cfg.clocking = Clocking::kCounterflow;
  auto messages = reference_messages();
  auto expected = oracle(cfg.params, messages);
  auto works = [&](int buffs) {
    cfg.feedback_delay_buffs = buffs;
    return run_encoder(cfg, messages) == expected;
  };
  EXPECT_FALSE(works(0));
  EXPECT_FALSE(works(9));
  EXPECT_TRUE(works(10));
  EXPECT_TRUE(works(20));
  EXPECT_TRUE(works(29));
  EXPECT_FALSE(works(30));
}

TEST(Encoder, ChainedSquareRootMultiplier) {
  EncoderConfig cfg;
  cfg.chain_square_roots = true;
  std::string text = join_lines(to_spice_hierarchy(*build_encoder(cfg)));
  EXPECT_NE(text.find(".subckt gfmul_a6_chain "), std::string::npos);
  std::mt19937 rng(3);
  for (int batch = 0; batch < 3; ++batch) {
    auto messages = random_messages(rng, cfg.params, 4);
    EXPECT_EQ(run_encoder(cfg, messages), oracle(cfg.params, messages));
  }
}

TEST(Encoder, ToyCodeSingleWordMessages) {
  EncoderConfig cfg;
  cfg.params = RSParams::create(FieldContext::gf16(), 2, 1);
  cfg.buffer_depth = 1;
  std::mt19937 rng(4);
  for (int batch = 0; batch < 5; ++batch) {
    auto messages = random_messages(rng, cfg.params, 4);
    EXPECT_EQ(run_encoder(cfg, messages), oracle(cfg.params, messages));
  }
}

TEST(Encoder, OtherCodeWithMatchedInterleaving) {
  EncoderConfig cfg;
  cfg.params = RSParams::create(FieldContext::gf16(), 15, 11);
  cfg.buffer_depth = 11;
  cfg.interleave_depth = encoder_loop_stages(cfg);
  std::mt19937 rng(8);
  for (Clocking clocking : {Clocking::kConcurrent, Clocking::kCounterflow}) {
    cfg.clocking = clocking;
    auto messages = random_messages(rng, cfg.params, cfg.interleave_depth);
    EXPECT_EQ(run_encoder(cfg, messages), oracle(cfg.params, messages))
        << clocking_name(clocking);
  }
}

TEST(Encoder, ConfigErrors) {
  EncoderConfig cfg;
  cfg.buffer_depth = 7;
  EXPECT_EQ(code_of([&] { build_encoder(cfg); }), ErrorCode::kInvalidConfig);
  cfg = {};
  cfg.interleave_depth = 3;
  EXPECT_EQ(code_of([&] { build_encoder(cfg); }), ErrorCode::kStageMismatch);
  cfg = {};
  cfg.feedback_delay_buffs = -1;
  EXPECT_EQ(code_of([&] { validate_encoder_config(cfg); }), ErrorCode::kInvalidConfig);
  cfg = {};
  auto messages = reference_messages();
  EXPECT_EQ(code_of([&] { run_encoder_detailed(cfg, messages, {}, 1000); }),
            ErrorCode::kTimeout);
  messages.pop_back();
  EXPECT_EQ(code_of([&] { run_encoder(cfg, messages); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace fluxwire
