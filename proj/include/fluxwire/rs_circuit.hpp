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

#ifndef FLUXWIRE_RS_CIRCUIT_HPP_
#define FLUXWIRE_RS_CIRCUIT_HPP_

// Generator for a pipelined SFQ Reed-Solomon encoder.
//
// The datapath is an LFSR divider by g(x): an XOR bank adds the incoming
// message word to the top register, an NDRO bank gates the feedback, one
// constant multiplier per generator coefficient scales it, and a second XOR
// bank folds the products into the registers. The loop is four clocked
// stages deep, so four independent messages are interleaved through it.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fluxwire/circuit.hpp"
#include "fluxwire/gf.hpp"
#include "fluxwire/pulse_sim.hpp"
#include "fluxwire/rs.hpp"

namespace fluxwire {

enum class Clocking { kConcurrent, kCounterflow };

std::string_view clocking_name(Clocking clocking);
std::optional<Clocking> parse_clocking(std::string_view name);

struct EncoderConfig {
  RSParams params = RSParams::rs12_8();
  int interleave_depth = 4;
  int buffer_depth = 8;
  Clocking clocking = Clocking::kConcurrent;
  // BUFF stages on the top-register feedback line; counterflow only.
  int feedback_delay_buffs = 20;
  int clock_period_ps = 100;
  // Realize a constant as two chained single-stage multipliers by its square
  // root when that root needs only one stage (alpha^6 = alpha^3 * alpha^3).
  bool chain_square_roots = false;
};

struct PlanOp {
  enum class Kind { kXor, kDff };
  Kind kind = Kind::kDff;
  int a = 0;
  int b = -1;
};

// Synchronous schedule of a constant multiplier. Stage s reads the lines
// produced by stage s - 1; stage 0 reads the input bits. The last stage has
// one line per output bit.
struct MultiplierPlan {
  FieldElement constant;
  int exponent = 0;  // constant = alpha^exponent
  BitMatrix matrix;
  std::vector<std::vector<PlanOp>> stages;
  bool chained = false;

  int depth() const { return static_cast<int>(stages.size()); }
  // Number of reads of line `line` of stage `stage` (stage 0 = inputs).
  int fan_out(int stage, int line) const;
};

// XOR trees per output row, padded with DFFs to `depth` stages. Depth is
// raised when a row has more than 2^depth terms.
MultiplierPlan plan_const_multiplier(const FieldContext& field, FieldElement c,
                                     int depth = 2);
// Two single-stage multipliers by `root`, i.e. multiplication by root^2.
// Throws kInvalidConfig when root needs more than one stage.
MultiplierPlan plan_chained_multiplier(const FieldContext& field, FieldElement root);
std::uint32_t evaluate_plan(const MultiplierPlan& plan, std::uint32_t x);

// Ports x0.., y0.. and clk (concurrent) or clkin/clkout (counterflow).
Sealed build_multiplier_circuit(const MultiplierPlan& plan,
                                Clocking clocking = Clocking::kConcurrent);
// Ports set, reset, d0.. -> q0..; one NDRO per bit line, no clock.
Sealed build_gating_bank(int width);
// Ports d0.., clk -> q0..; `depth` DFF stages per bit.
Sealed build_shift_register(int width, int depth);
// Ports in<s>_<b>, bclk<s>, plus the main clock -> m<b>. One shift register
// per stream with its own clock, merged by a clocked OR tree.
Sealed build_input_buffers(const EncoderConfig& cfg);
// Ports in<s>_<b>, bclk<s>, start, stop, clk (or clkin/clkout) -> out<b>.
Sealed build_encoder(const EncoderConfig& cfg);

// Throws kInvalidConfig or kStageMismatch.
void validate_encoder_config(const EncoderConfig& cfg);
// Clocked stages around the feedback loop.
int encoder_loop_stages(const EncoderConfig& cfg);
// Clocked OR levels merging the interleaved streams.
int merge_levels(int interleave_depth);

struct EncoderRun {
  // Per stream, parity in degree order p_0 .. p_{n-k-1}.
  std::vector<WordPoly> parities;
  // Main-clock cycle of the first buffer read; cycle numbers below count
  // from it.
  std::int64_t pipeline_start_ps = 0;
  // Cycle in which the last parity window opens.
  int last_parity_cycle = 0;
  // Cycle of the last observed output pulse, or -1.
  int last_pulse_cycle = -1;
  std::size_t output_pulses = 0;
  std::vector<PulseEvent> stimulus;
  std::int64_t horizon_ps = 0;
  std::vector<std::string> diagnostics;
};

// Loads, runs and decodes one batch of interleave_depth messages (degree
// order). Throws kTimeout when `horizon` ends before the last parity window.
EncoderRun run_encoder_detailed(const EncoderConfig& cfg,
                                const std::vector<WordPoly>& messages,
                                const DelayConfig& delays = {},
                                std::optional<std::int64_t> horizon = {});
std::vector<WordPoly> run_encoder(const EncoderConfig& cfg,
                                  const std::vector<WordPoly>& messages,
                                  const DelayConfig& delays = {});

}  // namespace fluxwire

#endif  // FLUXWIRE_RS_CIRCUIT_HPP_
