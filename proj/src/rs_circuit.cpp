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

#include "fluxwire/rs_circuit.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "fluxwire/analysis.hpp"

namespace fluxwire {

namespace {

std::string idx(std::string_view prefix, int i) {
  return std::string(prefix) + std::to_string(i);
}

std::string idx(std::string_view prefix, int i, int j) {
  return idx(prefix, i) + "_" + std::to_string(j);
}

[[noreturn]] void generator_bug(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "encoder generator: " + what);
}

// Plain fan-out into n copies; branch depths differ by at most one.
std::vector<Wire> fan_out(CircuitBuilder& b, Wire w, int n) {
  std::vector<Wire> out;
  if (n < 1) generator_bug("fan-out of zero");
  if (n == 1) {
    out.push_back(std::move(w));
    return out;
  }
  auto [l, r] = b.split(std::move(w));
  auto left = fan_out(b, std::move(l), (n + 1) / 2);
  auto right = fan_out(b, std::move(r), n / 2);
  for (auto& x : left) out.push_back(std::move(x));
  for (auto& x : right) out.push_back(std::move(x));
  return out;
}

struct TreeItem {
  std::size_t index;
  int depth;  // required SPLIT/BUFF stages from the root
};

void grow(CircuitBuilder& b, Wire w, int depth, std::vector<TreeItem> items,
          std::vector<Wire>& out) {
  if (items.size() == 1) {
    for (; depth < items[0].depth; ++depth) w = b.buff(std::move(w));
    out[items[0].index] = std::move(w);
    return;
  }
  int deepest = 0;
  for (const auto& item : items) deepest = std::max(deepest, item.depth);
  const int span = deepest - depth - 1;
  const std::uint64_t capacity = std::uint64_t{1} << span;
  std::uint64_t fill = 0;
  std::vector<TreeItem> left;
  std::vector<TreeItem> right;
  for (const auto& item : items) {
    const std::uint64_t weight = std::uint64_t{1} << (span - (item.depth - depth - 1));
    if (fill + weight <= capacity) {
      fill += weight;
      left.push_back(item);
    } else {
      right.push_back(item);
    }
  }
  if (right.empty()) {
    grow(b, b.buff(std::move(w)), depth + 1, std::move(left), out);
    return;
  }
  auto [w0, w1] = b.split(std::move(w));
  grow(b, std::move(w0), depth + 1, std::move(left), out);
  grow(b, std::move(w1), depth + 1, std::move(right), out);
}

// Clock tree in which sink i sits extra[i] stages above the deepest sink, so
// sinks that add their own internal depth line up with plain gates.
std::vector<Wire> clock_tree(CircuitBuilder& b, Wire root, const std::vector<int>& extra) {
  if (extra.empty()) generator_bug("clock tree without sinks");
  int height = *std::max_element(extra.begin(), extra.end());
  auto fits = [&](int h) {
    std::uint64_t sum = 0;
    for (int e : extra) sum += std::uint64_t{1} << (e + 32 - h);
    return sum <= (std::uint64_t{1} << 32);
  };
  while (!fits(height)) ++height;
  std::vector<TreeItem> items;
  for (std::size_t i = 0; i < extra.size(); ++i) items.push_back({i, height - extra[i]});
  std::stable_sort(items.begin(), items.end(),
                   [](const TreeItem& x, const TreeItem& y) { return x.depth < y.depth; });
  std::vector<Wire> out(extra.size());
  grow(b, std::move(root), 0, std::move(items), out);
  return out;
}

// Clock distribution for one circuit, handed out column by column in data
// order. Concurrent: one tree over every column, built up front. Counterflow:
// a counter-flow line from the data-input end with one tap tree per column;
// the line is padded by each tap tree's height so a column is always clocked
// after the column downstream of it.
class ClockNet {
 public:
  static ClockNet concurrent(CircuitBuilder& b, Wire root, const std::vector<int>& extra) {
    ClockNet c;
    c.wires_ = clock_tree(b, std::move(root), extra);
    return c;
  }
  static ClockNet counterflow(CounterWire end) {
    ClockNet c;
    c.counter_ = true;
    c.chain_ = std::move(end);
    return c;
  }

  // One clock per sink; extra[i] as for clock_tree.
  std::vector<Wire> column(CircuitBuilder& b, const std::vector<int>& extra) {
    std::vector<Wire> out;
    if (!counter_) {
      for (std::size_t i = 0; i < extra.size(); ++i) {
        if (next_ >= wires_.size()) generator_bug("clock tree exhausted");
        out.push_back(std::move(wires_[next_++]));
      }
      return out;
    }
    int height = *std::max_element(extra.begin(), extra.end());
    while (true) {
      std::uint64_t sum = 0;
      for (int e : extra) sum += std::uint64_t{1} << (e + 32 - height);
      if (sum <= (std::uint64_t{1} << 32)) break;
      ++height;
    }
    if (columns_++ > 0) {
      for (int i = 0; i < height; ++i) chain_ = b.counter_buff(std::move(chain_));
    }
    auto [up, tap] = b.counter_split(std::move(chain_));
    chain_ = std::move(up);
    return clock_tree(b, std::move(tap), extra);
  }

  std::vector<Wire> column(CircuitBuilder& b, int n) {
    return column(b, std::vector<int>(static_cast<std::size_t>(n), 0));
  }

  void close(CircuitBuilder& b) {
    if (counter_) {
      std::vector<CounterWire> in;
      in.push_back(std::move(chain_));
      b.set_counter_inputs(std::move(in));
    } else if (next_ != wires_.size()) {
      generator_bug("unused clock branches");
    }
  }

 private:
  bool counter_ = false;
  std::vector<Wire> wires_;
  std::size_t next_ = 0;
  int columns_ = 0;
  CounterWire chain_;
};

std::vector<Wire> place(CircuitBuilder& b, const Sealed& sub, std::vector<Wire> inputs,
                        Wire clk) {
  inputs.push_back(std::move(clk));
  return std::move(
      b.instantiate(sub, std::move(inputs), {},
                    std::vector<OptName>(sub->ports().outputs.size()), {})
          .outputs);
}

void add_clock_ports(PortNames& ports, Clocking clocking) {
  if (clocking == Clocking::kConcurrent) {
    ports.inputs.push_back("clk");
  } else {
    ports.counter_outputs.push_back("clkout");
    ports.counter_inputs.push_back("clkin");
  }
}

ClockNet make_clock(CircuitBuilder& b, CreatedPorts& created, Clocking clocking,
                    const std::vector<int>& extra) {
  if (clocking == Clocking::kConcurrent) {
    Wire clk = std::move(created.inputs.back());
    created.inputs.pop_back();
    return ClockNet::concurrent(b, std::move(clk), extra);
  }
  return ClockNet::counterflow(std::move(created.counter_outputs[0]));
}

// SPLIT/BUFF stages from a subcircuit's clk port to its clocked gates.
int clock_depth(const Sealed& sub) {
  FlatGraph g = flatten(*sub);
  auto root = g.find_net("clk");
  if (!root) generator_bug(sub->name() + " has no clk port");
  auto sinks = clock_sinks(g, *root);
  if (sinks.empty()) generator_bug(sub->name() + " has no clocked gates");
  for (const auto& s : sinks) {
    if (s.depth != sinks[0].depth) generator_bug(sub->name() + " has clock skew");
  }
  return sinks[0].depth;
}

std::vector<int> row_terms(const BitMatrix& m, int row) {
  std::vector<int> terms;
  for (int j = 0; j < m.size; ++j) {
    if ((m.rows[static_cast<std::size_t>(row)] >> j) & 1u) terms.push_back(j);
  }
  return terms;
}

int ceil_log2(int n) {
  int d = 0;
  while ((1 << d) < n) ++d;
  return d;
}

}  // namespace

std::string_view clocking_name(Clocking clocking) {
  return clocking == Clocking::kConcurrent ? "concurrent" : "counterflow";
}

std::optional<Clocking> parse_clocking(std::string_view name) {
  if (name == "concurrent") return Clocking::kConcurrent;
  if (name == "counterflow") return Clocking::kCounterflow;
  return std::nullopt;
}

int MultiplierPlan::fan_out(int stage, int line) const {
  if (stage >= depth()) return 0;
  int uses = 0;
  for (const auto& op : stages[static_cast<std::size_t>(stage)]) {
    if (op.a == line) ++uses;
    if (op.b == line) ++uses;
  }
  return uses;
}

MultiplierPlan plan_const_multiplier(const FieldContext& field, FieldElement c, int depth) {
  if (c.bits == 0 || !field.contains(c)) {
    throw Error(ErrorCode::kInvalidArgument, "multiplier constant must be a nonzero element");
  }
  MultiplierPlan plan;
  plan.constant = c;
  plan.exponent = field.log(c);
  plan.matrix = field.mul_matrix(c);
  for (int row = 0; row < field.width(); ++row) {
    depth = std::max(depth, ceil_log2(static_cast<int>(row_terms(plan.matrix, row).size())));
  }
  plan.stages.resize(static_cast<std::size_t>(depth));
  for (int row = 0; row < field.width(); ++row) {
    std::vector<int> lines = row_terms(plan.matrix, row);
    for (int s = 0; s < depth; ++s) {
      auto& ops = plan.stages[static_cast<std::size_t>(s)];
      std::vector<int> next;
      for (std::size_t i = 0; i < lines.size(); i += 2) {
        next.push_back(static_cast<int>(ops.size()));
        if (i + 1 < lines.size()) {
          ops.push_back({PlanOp::Kind::kXor, lines[i], lines[i + 1]});
        } else {
          ops.push_back({PlanOp::Kind::kDff, lines[i], -1});
        }
      }
      lines = std::move(next);
    }
  }
  return plan;
}

MultiplierPlan plan_chained_multiplier(const FieldContext& field, FieldElement root) {
  MultiplierPlan half = plan_const_multiplier(field, root, 1);
  if (half.depth() != 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "alpha^" + std::to_string(field.log(root)) + " needs more than one stage");
  }
  MultiplierPlan plan;
  plan.constant = field.mul(root, root);
  plan.exponent = field.log(plan.constant);
  plan.matrix = field.mul_matrix(plan.constant);
  plan.stages = {half.stages[0], half.stages[0]};
  plan.chained = true;
  return plan;
}

std::uint32_t evaluate_plan(const MultiplierPlan& plan, std::uint32_t x) {
  std::vector<int> lines;
  for (int j = 0; j < plan.matrix.size; ++j) lines.push_back(static_cast<int>((x >> j) & 1u));
  for (const auto& ops : plan.stages) {
    std::vector<int> next;
    for (const auto& op : ops) {
      int v = lines.at(static_cast<std::size_t>(op.a));
      if (op.kind == PlanOp::Kind::kXor) v ^= lines.at(static_cast<std::size_t>(op.b));
      next.push_back(v);
    }
    lines = std::move(next);
  }
  std::uint32_t y = 0;
  for (std::size_t j = 0; j < lines.size(); ++j) y |= static_cast<std::uint32_t>(lines[j]) << j;
  return y;
}

Sealed build_multiplier_circuit(const MultiplierPlan& plan, Clocking clocking) {
  const int width = plan.matrix.size;
  PortNames ports;
  for (int j = 0; j < width; ++j) ports.inputs.push_back(idx("x", j));
  for (int j = 0; j < width; ++j) ports.outputs.push_back(idx("y", j));
  add_clock_ports(ports, clocking);
  std::string name =
      "gfmul_a" + std::to_string(plan.exponent) + (plan.chained ? "_chain" : "");
  auto [b, created] = CircuitBuilder::create(name, std::move(ports));

  std::size_t gates = 0;
  for (const auto& ops : plan.stages) gates += ops.size();
  ClockNet clock = make_clock(b, created, clocking, std::vector<int>(gates, 0));

  std::vector<Wire> lines = std::move(created.inputs);
  for (int s = 0; s < plan.depth(); ++s) {
    // Copies of each line, one per read, consumed from the back.
    std::vector<std::vector<Wire>> copies;
    for (int l = 0; l < static_cast<int>(lines.size()); ++l) {
      copies.push_back(fan_out(b, std::move(lines[static_cast<std::size_t>(l)]), plan.fan_out(s, l)));
    }
    auto read = [&](int line) {
      auto& pool = copies[static_cast<std::size_t>(line)];
      Wire w = std::move(pool.back());
      pool.pop_back();
      return w;
    };
    const auto& ops = plan.stages[static_cast<std::size_t>(s)];
    std::vector<Wire> clk = clock.column(b, static_cast<int>(ops.size()));
    std::vector<Wire> next;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (ops[i].kind == PlanOp::Kind::kXor) {
        Wire x = read(ops[i].a);
        Wire y = read(ops[i].b);
        next.push_back(b.xor_(std::move(x), std::move(y), std::move(clk[i])));
      } else {
        next.push_back(b.dff(read(ops[i].a), std::move(clk[i])));
      }
    }
    lines = std::move(next);
  }
  b.set_outputs(std::move(lines));
  clock.close(b);
  return std::move(b).finalize();
}

Sealed build_gating_bank(int width) {
  if (width < 1) throw Error(ErrorCode::kInvalidArgument, "gating bank width must be >= 1");
  PortNames ports;
  ports.inputs = {"set", "reset"};
  for (int j = 0; j < width; ++j) ports.inputs.push_back(idx("d", j));
  for (int j = 0; j < width; ++j) ports.outputs.push_back(idx("q", j));
  auto [b, created] = CircuitBuilder::create(idx("ndro_gate", width), std::move(ports));
  auto sets = fan_out(b, std::move(created.inputs[0]), width);
  auto resets = fan_out(b, std::move(created.inputs[1]), width);
  std::vector<Wire> out;
  for (int j = 0; j < width; ++j) {
    const auto u = static_cast<std::size_t>(j);
    out.push_back(b.ndro(std::move(sets[u]), std::move(resets[u]),
                         std::move(created.inputs[u + 2])));
  }
  b.set_outputs(std::move(out));
  return std::move(b).finalize();
}

Sealed build_shift_register(int width, int depth) {
  if (width < 1 || depth < 1) {
    throw Error(ErrorCode::kInvalidArgument, "shift register needs width, depth >= 1");
  }
  PortNames ports;
  for (int j = 0; j < width; ++j) ports.inputs.push_back(idx("d", j));
  for (int j = 0; j < width; ++j) ports.outputs.push_back(idx("q", j));
  add_clock_ports(ports, Clocking::kConcurrent);
  auto [b, created] = CircuitBuilder::create(
      "shift_reg" + std::to_string(width) + "x" + std::to_string(depth), std::move(ports));
  ClockNet clock = make_clock(b, created, Clocking::kConcurrent,
                              std::vector<int>(static_cast<std::size_t>(width * depth), 0));
  std::vector<Wire> lines = std::move(created.inputs);
  std::vector<Wire> clk = clock.column(b, width * depth);
  std::size_t next = 0;
  for (int s = 0; s < depth; ++s) {
    for (auto& line : lines) line = b.dff(std::move(line), std::move(clk[next++]));
  }
  b.set_outputs(std::move(lines));
  clock.close(b);
  return std::move(b).finalize();
}

int merge_levels(int interleave_depth) { return ceil_log2(interleave_depth); }

namespace {

std::vector<int> merge_gate_counts(int streams) {
  std::vector<int> counts;
  while (streams > 1) {
    streams = (streams + 1) / 2;
    counts.push_back(streams);
  }
  return counts;
}

// Per generator coefficient: the plan, or nothing for a zero coefficient.
std::vector<std::optional<MultiplierPlan>> encoder_plans(const EncoderConfig& cfg) {
  const FieldContext& field = cfg.params.field;
  std::vector<std::optional<MultiplierPlan>> plans;
  int depth = 2;
  for (int pass = 0; pass < 2; ++pass) {
    plans.clear();
    for (int i = 0; i < cfg.params.num_parity(); ++i) {
      const FieldElement c = cfg.params.generator[static_cast<std::size_t>(i)];
      if (c.bits == 0) {
        plans.emplace_back();
        continue;
      }
      if (cfg.chain_square_roots && depth == 2) {
        const FieldElement root = field.pow(c, long{1} << (field.width() - 1));
        MultiplierPlan half = plan_const_multiplier(field, root, 1);
        if (half.depth() == 1) {
          plans.push_back(plan_chained_multiplier(field, root));
          continue;
        }
      }
      plans.push_back(plan_const_multiplier(field, c, depth));
    }
    int deepest = depth;
    for (const auto& p : plans) {
      if (p) deepest = std::max(deepest, p->depth());
    }
    if (deepest == depth) break;
    depth = deepest;
  }
  return plans;
}

int plans_depth(const std::vector<std::optional<MultiplierPlan>>& plans) {
  int depth = 0;
  for (const auto& p : plans) {
    if (p) depth = std::max(depth, p->depth());
  }
  return depth;
}

}  // namespace

int encoder_loop_stages(const EncoderConfig& cfg) {
  return 1 + plans_depth(encoder_plans(cfg)) + 1;
}

void validate_encoder_config(const EncoderConfig& cfg) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::kInvalidConfig, what); };
  if (cfg.interleave_depth < 1) bad("interleave_depth must be >= 1");
  if (cfg.buffer_depth != cfg.params.k) {
    bad("buffer_depth " + std::to_string(cfg.buffer_depth) + " must equal k = " +
        std::to_string(cfg.params.k));
  }
  if (cfg.feedback_delay_buffs < 0) bad("feedback_delay_buffs must be >= 0");
  if (cfg.clock_period_ps < 10) bad("clock_period_ps must be >= 10");
  if (cfg.params.generator.empty() || cfg.params.generator[0].bits == 0) {
    bad("generator polynomial needs a nonzero constant term");
  }
  const int stages = encoder_loop_stages(cfg);
  if (stages != cfg.interleave_depth) {
    throw Error(ErrorCode::kStageMismatch,
                "feedback loop has " + std::to_string(stages) +
                    " clocked stages but interleave_depth is " +
                    std::to_string(cfg.interleave_depth));
  }
}

Sealed build_input_buffers(const EncoderConfig& cfg) {
  const int width = cfg.params.field.width();
  const int streams = cfg.interleave_depth;
  const std::vector<int> counts = merge_gate_counts(streams);
  const bool clocked = !counts.empty();

  PortNames ports;
  for (int s = 0; s < streams; ++s) {
    for (int j = 0; j < width; ++j) ports.inputs.push_back(idx("in", s, j));
  }
  for (int s = 0; s < streams; ++s) ports.inputs.push_back(idx("bclk", s));
  for (int j = 0; j < width; ++j) ports.outputs.push_back(idx("m", j));
  if (clocked) add_clock_ports(ports, Clocking::kConcurrent);
  auto [b, created] = CircuitBuilder::create(
      "input_buffers" + std::to_string(streams) + "x" + std::to_string(cfg.buffer_depth),
      std::move(ports));

  int merge_gates = 0;
  for (int c : counts) merge_gates += c * width;
  std::optional<ClockNet> clock;
  if (clocked) {
    clock = make_clock(b, created, Clocking::kConcurrent,
                       std::vector<int>(static_cast<std::size_t>(merge_gates), 0));
  }

  Sealed reg = build_shift_register(width, cfg.buffer_depth);
  std::vector<std::vector<Wire>> lines;
  for (int s = 0; s < streams; ++s) {
    std::vector<Wire> in;
    for (int j = 0; j < width; ++j) {
      in.push_back(std::move(created.inputs[static_cast<std::size_t>(s * width + j)]));
    }
    in.push_back(std::move(created.inputs[static_cast<std::size_t>(streams * width + s)]));
    lines.push_back(std::move(
        b.instantiate(reg, std::move(in), {},
                      std::vector<OptName>(static_cast<std::size_t>(width)), {})
            .outputs));
  }
  for (int count : counts) {
    std::vector<Wire> clk = clock->column(b, count * width);
    std::size_t next_clk = 0;
    std::vector<std::vector<Wire>> merged;
    for (std::size_t s = 0; s < lines.size(); s += 2) {
      std::vector<Wire> word;
      for (int j = 0; j < width; ++j) {
        const auto u = static_cast<std::size_t>(j);
        if (s + 1 < lines.size()) {
          word.push_back(b.or_(std::move(lines[s][u]), std::move(lines[s + 1][u]),
                               std::move(clk[next_clk++])));
        } else {
          word.push_back(b.dff(std::move(lines[s][u]), std::move(clk[next_clk++])));
        }
      }
      merged.push_back(std::move(word));
    }
    lines = std::move(merged);
  }
  b.set_outputs(std::move(lines[0]));
  if (clock) clock->close(b);
  return std::move(b).finalize();
}

Sealed build_encoder(const EncoderConfig& cfg) {
  validate_encoder_config(cfg);
  const FieldContext& field = cfg.params.field;
  const int width = field.width();
  const int streams = cfg.interleave_depth;
  const int parity = cfg.params.num_parity();
  const auto plans = encoder_plans(cfg);
  const bool counterflow = cfg.clocking == Clocking::kCounterflow;

  Sealed buffers = build_input_buffers(cfg);
  const bool buffers_clocked = merge_levels(streams) > 0;
  Sealed gate_bank = build_gating_bank(width);
  std::map<std::pair<std::uint8_t, bool>, Sealed> mul_defs;
  std::vector<Sealed> muls;
  for (const auto& plan : plans) {
    if (!plan) {
      muls.emplace_back();
      continue;
    }
    auto& def = mul_defs[{plan->constant.bits, plan->chained}];
    if (!def) def = build_multiplier_circuit(*plan);
    muls.push_back(def);
  }

  PortNames ports;
  for (int s = 0; s < streams; ++s) {
    for (int j = 0; j < width; ++j) ports.inputs.push_back(idx("in", s, j));
  }
  for (int s = 0; s < streams; ++s) ports.inputs.push_back(idx("bclk", s));
  ports.inputs.push_back("start");
  ports.inputs.push_back("stop");
  for (int j = 0; j < width; ++j) ports.outputs.push_back(idx("out", j));
  for (int i = 0; i < parity; ++i) {
    for (int j = 0; j < width; ++j) ports.loops.push_back(idx("r", i, j));
  }
  add_clock_ports(ports, cfg.clocking);
  auto [b, created] = CircuitBuilder::create(
      "rs" + std::to_string(cfg.params.n) + "_" + std::to_string(cfg.params.k) + "_encoder",
      std::move(ports));

  const int register_gates = width + (parity - 1) * 4 * width;
  // Columns in data order; subcircuits are clocked internally from one clk
  // pin, so they contribute their own tree depth.
  std::vector<int> buffer_column;
  if (buffers_clocked) buffer_column.push_back(clock_depth(buffers));
  const std::vector<int> adder_column(static_cast<std::size_t>(width), 0);
  std::vector<int> mul_column;
  for (const auto& m : muls) {
    if (m) mul_column.push_back(clock_depth(m));
  }
  const std::vector<int> register_column(static_cast<std::size_t>(register_gates), 0);
  std::vector<int> extra;
  for (const std::vector<int>* col : std::initializer_list<const std::vector<int>*>{
           &buffer_column, &adder_column, &mul_column, &register_column}) {
    extra.insert(extra.end(), col->begin(), col->end());
  }
  ClockNet clock = make_clock(b, created, cfg.clocking, extra);

  auto input = [&](std::size_t i) { return std::move(created.inputs[i]); };
  auto loop = [&](int i, int j) {
    return std::move(created.loops[static_cast<std::size_t>(i * width + j)]);
  };
  const auto bclk_base = static_cast<std::size_t>(streams * width);
  const std::size_t start_port = bclk_base + static_cast<std::size_t>(streams);

  // Input buffers, read round-robin.
  std::vector<Wire> buffer_in;
  for (std::size_t i = 0; i < start_port; ++i) buffer_in.push_back(input(i));
  std::vector<Wire> message;
  if (buffers_clocked) {
    message = place(b, buffers, std::move(buffer_in),
                    std::move(clock.column(b, buffer_column)[0]));
  } else {
    message = std::move(b.instantiate(buffers, std::move(buffer_in), {},
                                      std::vector<OptName>(static_cast<std::size_t>(width)), {})
                            .outputs);
  }

  // Message word plus top register.
  std::vector<Wire> clk = clock.column(b, adder_column);
  std::vector<Wire> to_feedback;
  std::vector<Wire> to_output;
  for (int j = 0; j < width; ++j) {
    Wire top = loop(parity - 1, j);
    if (counterflow) {
      for (int d = 0; d < cfg.feedback_delay_buffs; ++d) top = b.buff(std::move(top));
    }
    const auto u = static_cast<std::size_t>(j);
    Wire fb = b.xor_(std::move(message[u]), std::move(top), std::move(clk[u]), idx("fb", j));
    auto [f, o] = b.split(std::move(fb));
    to_feedback.push_back(std::move(f));
    to_output.push_back(std::move(o));
  }

  // Control: start opens the feedback gate and shuts the output gate, stop
  // does the reverse.
  auto [start_fb, start_out] = b.split(input(start_port));
  auto [stop_fb, stop_out] = b.split(input(start_port + 1));
  std::vector<Wire> fb_gate_in;
  fb_gate_in.push_back(std::move(start_fb));
  fb_gate_in.push_back(std::move(stop_fb));
  for (auto& w : to_feedback) fb_gate_in.push_back(std::move(w));
  std::vector<Wire> gated =
      std::move(b.instantiate(gate_bank, std::move(fb_gate_in), {},
                              std::vector<OptName>(static_cast<std::size_t>(width)), {})
                    .outputs);
  std::vector<Wire> out_gate_in;
  out_gate_in.push_back(std::move(stop_out));
  out_gate_in.push_back(std::move(start_out));
  for (auto& w : to_output) out_gate_in.push_back(std::move(w));
  b.set_outputs(std::move(b.instantiate(gate_bank, std::move(out_gate_in), {},
                                        std::vector<OptName>(static_cast<std::size_t>(width)),
                                        {})
                              .outputs));

  // Constant multipliers.
  const int used = static_cast<int>(std::count_if(
      muls.begin(), muls.end(), [](const Sealed& m) { return m != nullptr; }));
  std::vector<std::vector<Wire>> copies;
  for (auto& w : gated) copies.push_back(fan_out(b, std::move(w), used));
  std::vector<std::vector<Wire>> products(static_cast<std::size_t>(parity));
  std::vector<Wire> mul_clk = clock.column(b, mul_column);
  std::size_t next_mul = 0;
  for (int i = 0; i < parity; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (!muls[ui]) continue;
    std::vector<Wire> x;
    for (auto& c : copies) {
      x.push_back(std::move(c.back()));
      c.pop_back();
    }
    products[ui] = place(b, muls[ui], std::move(x), std::move(mul_clk[next_mul++]));
  }

  // Registers: r_i <- r_{i-1} + g_i * fb, with r_{i-1} held until the
  // product arrives.
  clk = clock.column(b, register_column);
  std::size_t next_clk = 0;
  auto tick = [&] { return std::move(clk[next_clk++]); };
  std::vector<Wire> next_state;
  for (int i = 0; i < parity; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (int j = 0; j < width; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      if (i == 0) {
        next_state.push_back(b.dff(std::move(products[0][uj]), tick()));
        continue;
      }
      Wire held = loop(i - 1, j);
      for (int d = 0; d < 3; ++d) held = b.dff(std::move(held), tick());
      if (products[ui].empty()) {
        next_state.push_back(b.dff(std::move(held), tick()));
      } else {
        next_state.push_back(b.xor_(std::move(products[ui][uj]), std::move(held), tick()));
      }
    }
  }
  b.set_loops(std::move(next_state));
  clock.close(b);
  return std::move(b).finalize();
}

EncoderRun run_encoder_detailed(const EncoderConfig& cfg, const std::vector<WordPoly>& messages,
                                const DelayConfig& delays,
                                std::optional<std::int64_t> horizon) {
  validate_encoder_config(cfg);
  const FieldContext& field = cfg.params.field;
  const int width = field.width();
  const int streams = cfg.interleave_depth;
  const int k = cfg.params.k;
  const int parity = cfg.params.num_parity();
  const std::int64_t period = cfg.clock_period_ps;
  if (static_cast<int>(messages.size()) != streams) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(streams) + " messages, got " +
                    std::to_string(messages.size()));
  }
  for (const auto& m : messages) {
    if (static_cast<int>(m.size()) != k) {
      throw Error(ErrorCode::kInvalidArgument,
                  "message has " + std::to_string(m.size()) + " words, expected " +
                      std::to_string(k));
    }
    for (FieldElement w : m) {
      if (!field.contains(w)) throw Error(ErrorCode::kInvalidArgument, "word outside the field");
    }
  }

  Sealed encoder = build_encoder(cfg);
  FlatGraph graph = flatten(*encoder);
  auto net = [&](const std::string& name) {
    auto id = graph.find_net(name);
    if (!id) generator_bug("missing net " + name);
    return *id;
  };
  auto max_delay = [](const std::vector<ClockSink>& sinks) {
    std::int64_t d = 0;
    for (const auto& s : sinks) d = std::max(d, s.delay_ps);
    return d;
  };

  const std::string clock_port =
      cfg.clocking == Clocking::kConcurrent ? "clk" : "clkin";
  std::unordered_map<std::uint32_t, std::int64_t> clock_at;
  for (const auto& s : clock_sinks(graph, net(clock_port), delays)) clock_at[s.gate] = s.delay_ps;
  const auto adder = graph.driver(net("fb0"));
  if (!adder || clock_at.count(adder->gate) == 0) generator_bug("adder clock not found");
  const std::int64_t adder_clock = clock_at[adder->gate];

  // Offset from a main-clock cycle at which a read pulse lands its word in
  // the middle of the first merge gate's next cycle.
  std::vector<std::int64_t> read_offset;
  for (int s = 0; s < streams; ++s) {
    auto sinks = clock_sinks(graph, net(idx("bclk", s)), delays);
    std::unordered_set<std::uint32_t> own;
    for (const auto& x : sinks) own.insert(x.gate);
    std::optional<std::int64_t> capture;
    std::int64_t last_stage = 0;
    for (const auto& x : sinks) {
      auto r = graph.receiver(graph.gates()[x.gate].pins.back());
      if (r && own.count(r->gate) == 0) {
        if (clock_at.count(r->gate) == 0) generator_bug("merge gate is not clocked");
        capture = clock_at[r->gate];
        last_stage = x.delay_ps;
      }
    }
    if (!capture) generator_bug("buffer output not found");
    read_offset.push_back(*capture + period / 2 - last_stage - delays.delay(GateKind::kDff));
  }
  const std::int64_t start_delay = max_delay(clock_sinks(graph, net("start"), delays));
  const std::int64_t stop_delay = max_delay(clock_sinks(graph, net("stop"), delays));

  const int first = merge_levels(streams) + 1;  // adder cycle of stream 0, word 0
  const std::int64_t start = 2 * period * (k + 1);
  auto cycle = [&](long c) { return start + c * period; };

  std::vector<PulseEvent> stimulus;
  for (int i = 0; i < k; ++i) {
    for (int s = 0; s < streams; ++s) {
      const FieldElement w = messages[static_cast<std::size_t>(s)][static_cast<std::size_t>(k - 1 - i)];
      for (int j = 0; j < width; ++j) {
        if ((w.bits >> j) & 1u) stimulus.push_back({(2 * i + 1) * period, idx("in", s, j)});
      }
      // A stored pulse sits in front of its DFF, so k words need k - 1
      // shifts.
      if (i + 1 < k) stimulus.push_back({(2 * i + 2) * period, idx("bclk", s)});
    }
  }
  const int cycles = first + streams * (k + parity) + 1;
  for (auto& e : clock_train(clock_port, start, period, cycles)) stimulus.push_back(std::move(e));
  for (int j = 0; j < k; ++j) {
    for (int s = 0; s < streams; ++s) {
      stimulus.push_back({cycle(streams * j + s) + read_offset[static_cast<std::size_t>(s)],
                          idx("bclk", s)});
    }
  }
  stimulus.push_back({cycle(first) + adder_clock - period / 2 - start_delay, "start"});
  stimulus.push_back(
      {cycle(first + streams * k) + adder_clock - period / 2 - stop_delay, "stop"});

  EncoderRun run;
  run.pipeline_start_ps = start;
  run.last_parity_cycle = first + streams * (k + parity - 1) + streams - 1;
  const std::int64_t needed = cycle(run.last_parity_cycle) + adder_clock + period;
  if (horizon && *horizon < needed) {
    throw Error(ErrorCode::kTimeout, "horizon " + std::to_string(*horizon) +
                                         " ps ends before the last parity window at " +
                                         std::to_string(needed) + " ps");
  }
  const std::int64_t end = horizon ? *horizon : needed + period;

  std::vector<std::string> outputs;
  for (int j = 0; j < width; ++j) outputs.push_back(idx("out", j));
  SimTrace trace = simulate(graph, stimulus, delays, end, outputs);
  run.stimulus = std::move(stimulus);
  run.horizon_ps = end;
  run.output_pulses = trace.events.size();
  run.diagnostics = trace.diagnostics;
  for (const auto& e : trace.events) {
    const auto c = static_cast<int>((e.time - start - adder_clock) / period);
    run.last_pulse_cycle = std::max(run.last_pulse_cycle, c);
  }

  for (int s = 0; s < streams; ++s) {
    std::vector<std::int64_t> windows;
    for (int q = 0; q < parity; ++q) {
      windows.push_back(cycle(first + streams * (k + q) + s) + adder_clock);
    }
    auto words = decode_words(trace, outputs, windows, period);
    WordPoly p;
    for (auto it = words.rbegin(); it != words.rend(); ++it) {
      p.push_back({static_cast<std::uint8_t>(*it)});
    }
    run.parities.push_back(std::move(p));
  }
  return run;
}

std::vector<WordPoly> run_encoder(const EncoderConfig& cfg, const std::vector<WordPoly>& messages,
                                  const DelayConfig& delays) {
  return run_encoder_detailed(cfg, messages, delays).parities;
}

}  // namespace fluxwire
