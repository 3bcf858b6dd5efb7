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

#include "fluxwire/fluxwire.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fluxwire/analysis.hpp"
#include "fluxwire/builtin.hpp"
#include "fluxwire/netlist.hpp"
#include "fluxwire/pulse_sim.hpp"
#include "fluxwire/rs.hpp"
#include "fluxwire/rs_circuit.hpp"
#include "text_io.hpp"

namespace fw = fluxwire;

struct fw_circuit {
  std::uint32_t serial = 0;
  std::string name;
  std::optional<fw::CircuitBuilder> builder;
  fw::Sealed sealed;
  std::vector<fw::Wire> wires;
  std::vector<fw::CounterWire> counter_wires;
};

namespace {

constexpr std::uint64_t kCounterBit = std::uint64_t{1} << 31;

thread_local std::string g_error;
thread_local std::string g_error_net;
std::atomic<std::uint32_t> g_next_serial{1};

fw_status fail(fw_status status, std::string message, std::string net = {}) {
  g_error = std::move(message);
  g_error_net = std::move(net);
  return status;
}

template <class F>
fw_status guard(F&& body) {
  try {
    body();
    g_error.clear();
    g_error_net.clear();
    return FW_OK;
  } catch (const fw::Error& e) {
    return fail(static_cast<fw_status>(e.code()), e.what(), e.net());
  } catch (const std::bad_alloc&) {
    return fail(FW_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FW_INTERNAL, e.what());
  }
}

[[noreturn]] void raise(fw::ErrorCode code, const std::string& message,
                        const std::string& net = {}) {
  throw fw::Error(code, message, net);
}

void require(bool ok, const char* what) {
  if (!ok) raise(fw::ErrorCode::kInvalidArgument, what);
}

fw::CircuitBuilder& building(fw_circuit* c) {
  require(c != nullptr, "null circuit");
  if (!c->builder) raise(fw::ErrorCode::kInvalidArgument, c->name + " is already sealed");
  return *c->builder;
}

const fw::SealedCircuit& sealed(const fw_circuit* c) {
  require(c != nullptr, "null circuit");
  if (!c->sealed) raise(fw::ErrorCode::kNotSealed, c->name + " is not sealed");
  return *c->sealed;
}

std::vector<std::string> names(const char* const* items, std::size_t n) {
  if (n > 0) require(items != nullptr, "null name array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    require(items[i] != nullptr, "null name");
    out.emplace_back(items[i]);
  }
  return out;
}

fw::OptName opt(const char* name) {
  if (name == nullptr) return std::nullopt;
  return std::string(name);
}

template <class W>
std::uint64_t issue(fw_circuit* c, std::vector<W>& pool, W wire, bool counter) {
  pool.push_back(std::move(wire));
  return (std::uint64_t{c->serial} << 32) | (counter ? kCounterBit : 0) | pool.size();
}

fw_wire issue(fw_circuit* c, fw::Wire w) { return issue(c, c->wires, std::move(w), false); }
fw_counter_wire issue(fw_circuit* c, fw::CounterWire w) {
  return issue(c, c->counter_wires, std::move(w), true);
}

template <class W>
W* lookup(const fw_circuit* c, const std::vector<W>& pool, std::uint64_t handle, bool counter) {
  if (handle == 0) raise(fw::ErrorCode::kInvalidArgument, "null wire handle");
  if ((handle >> 32) != c->serial) {
    raise(fw::ErrorCode::kForeignWire, "wire handle does not belong to circuit " + c->name);
  }
  if (((handle & kCounterBit) != 0) != counter) {
    raise(fw::ErrorCode::kInvalidArgument,
          counter ? "expected a counter wire handle" : "expected a wire handle");
  }
  const std::uint64_t slot = handle & (kCounterBit - 1);
  if (slot == 0 || slot > pool.size()) raise(fw::ErrorCode::kInvalidArgument, "unknown wire handle");
  return const_cast<W*>(&pool[slot - 1]);
}

// Takes the wires for one call; every handle is checked before any is moved
// so a failing call leaves all handles as they were.
std::vector<fw::Wire> take(fw_circuit* c, std::initializer_list<fw_wire> handles) {
  std::vector<fw::Wire*> slots;
  std::set<fw::Wire*> seen;
  for (fw_wire h : handles) {
    fw::Wire* w = lookup(c, c->wires, h, false);
    if (w->consumed() || !seen.insert(w).second) {
      raise(fw::ErrorCode::kAlreadyConsumed, "wire " + w->net() + " was already consumed",
            w->net());
    }
    slots.push_back(w);
  }
  std::vector<fw::Wire> out;
  for (auto* w : slots) out.push_back(std::move(*w));
  return out;
}

std::vector<fw::Wire> take(fw_circuit* c, const fw_wire* handles, std::size_t n) {
  if (n > 0) require(handles != nullptr, "null handle array");
  std::vector<fw::Wire*> slots;
  std::set<fw::Wire*> seen;
  for (std::size_t i = 0; i < n; ++i) {
    fw::Wire* w = lookup(c, c->wires, handles[i], false);
    if (w->consumed() || !seen.insert(w).second) {
      raise(fw::ErrorCode::kAlreadyConsumed, "wire " + w->net() + " was already consumed",
            w->net());
    }
    slots.push_back(w);
  }
  std::vector<fw::Wire> out;
  for (auto* w : slots) out.push_back(std::move(*w));
  return out;
}

std::vector<fw::CounterWire> take_counter(fw_circuit* c, const fw_counter_wire* handles,
                                          std::size_t n) {
  if (n > 0) require(handles != nullptr, "null handle array");
  std::vector<fw::CounterWire*> slots;
  std::set<fw::CounterWire*> seen;
  for (std::size_t i = 0; i < n; ++i) {
    fw::CounterWire* w = lookup(c, c->counter_wires, handles[i], true);
    if (w->consumed() || !seen.insert(w).second) {
      raise(fw::ErrorCode::kAlreadyConsumed,
            "counter wire " + w->net() + " was already consumed", w->net());
    }
    slots.push_back(w);
  }
  std::vector<fw::CounterWire> out;
  for (auto* w : slots) out.push_back(std::move(*w));
  return out;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(char** out, const std::string& s) {
  require(out != nullptr, "null output pointer");
  *out = dup(s);
}

fw_circuit* wrap_sealed(fw::Sealed s) {
  auto* c = new fw_circuit();
  c->serial = g_next_serial++;
  c->name = s->name();
  c->sealed = std::move(s);
  return c;
}

fw::EncoderConfig run_config(const fw_run_options* options) {
  fw::EncoderConfig cfg;
  if (options != nullptr) {
    cfg.clocking = options->clocking == FW_COUNTERFLOW ? fw::Clocking::kCounterflow
                                                       : fw::Clocking::kConcurrent;
    if (options->feedback_delay_buffs >= 0) {
      cfg.feedback_delay_buffs = options->feedback_delay_buffs;
    }
  }
  return cfg;
}

fw::DelayConfig run_delays(const fw_run_options* options) {
  if (options != nullptr && options->delays != nullptr) {
    return fw::DelayConfig::parse(options->delays);
  }
  return {};
}

// Simulated parities for any number of streams, batched by interleave depth.
std::vector<fw::WordPoly> simulate_streams(const fw::EncoderConfig& cfg,
                                           const fw::DelayConfig& delays,
                                           const std::vector<fw::WordPoly>& messages) {
  std::vector<fw::WordPoly> out;
  const auto depth = static_cast<std::size_t>(cfg.interleave_depth);
  for (std::size_t first = 0; first < messages.size(); first += depth) {
    std::vector<fw::WordPoly> batch;
    for (std::size_t i = first; i < first + depth; ++i) {
      batch.push_back(i < messages.size()
                          ? messages[i]
                          : fw::WordPoly(static_cast<std::size_t>(cfg.params.k)));
    }
    auto parities = fw::run_encoder(cfg, batch, delays);
    for (std::size_t i = first; i < std::min(first + depth, messages.size()); ++i) {
      out.push_back(std::move(parities[i - first]));
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* fw_version(void) { return "1.0.0"; }

const char* fw_status_name(fw_status status) {
  if (status == FW_OK) return "Ok";
  if (status == FW_INTERNAL) return "Internal";
  static thread_local std::string name;
  name = std::string(fw::error_code_name(static_cast<fw::ErrorCode>(status)));
  return name.c_str();
}

const char* fw_last_error(void) { return g_error.c_str(); }
const char* fw_last_error_net(void) { return g_error_net.c_str(); }
void fw_string_free(char* s) { std::free(s); }

fw_status fw_circuit_create(const char* name, const char* const* inputs, size_t n_inputs,
                            const char* const* outputs, size_t n_outputs,
                            const char* const* loops, size_t n_loops,
                            const char* const* counter_outputs, size_t n_counter_outputs,
                            const char* const* counter_inputs, size_t n_counter_inputs,
                            fw_circuit** circuit, fw_wire* input_wires, fw_wire* loop_wires,
                            fw_counter_wire* counter_output_wires) {
  return guard([&] {
    require(name != nullptr && circuit != nullptr, "null argument");
    require(n_inputs == 0 || input_wires != nullptr, "null input handle array");
    require(n_loops == 0 || loop_wires != nullptr, "null loop handle array");
    require(n_counter_outputs == 0 || counter_output_wires != nullptr,
            "null counter-output handle array");
    fw::PortNames ports{names(inputs, n_inputs), names(outputs, n_outputs),
                        names(loops, n_loops), names(counter_outputs, n_counter_outputs),
                        names(counter_inputs, n_counter_inputs)};
    auto [builder, created] = fw::CircuitBuilder::create(name, std::move(ports));
    auto c = std::make_unique<fw_circuit>();
    c->serial = g_next_serial++;
    c->name = name;
    c->builder.emplace(std::move(builder));
    for (std::size_t i = 0; i < n_inputs; ++i) {
      input_wires[i] = issue(c.get(), std::move(created.inputs[i]));
    }
    for (std::size_t i = 0; i < n_loops; ++i) {
      loop_wires[i] = issue(c.get(), std::move(created.loops[i]));
    }
    for (std::size_t i = 0; i < n_counter_outputs; ++i) {
      counter_output_wires[i] = issue(c.get(), std::move(created.counter_outputs[i]));
    }
    *circuit = c.release();
  });
}

void fw_circuit_free(fw_circuit* circuit) { delete circuit; }

int fw_circuit_is_sealed(const fw_circuit* circuit) {
  return circuit != nullptr && circuit->sealed != nullptr ? 1 : 0;
}

const char* fw_circuit_name(const fw_circuit* circuit) {
  return circuit == nullptr ? nullptr : circuit->name.c_str();
}

const char* fw_wire_net(const fw_circuit* circuit, fw_wire wire) {
  try {
    return lookup(circuit, circuit->wires, wire, false)->net().c_str();
  } catch (const std::exception&) {
    return nullptr;
  }
}

const char* fw_counter_wire_net(const fw_circuit* circuit, fw_counter_wire wire) {
  try {
    return lookup(circuit, circuit->counter_wires, wire, true)->net().c_str();
  } catch (const std::exception&) {
    return nullptr;
  }
}

#define FW_BINARY_GATE(fn, method)                                                  \
  fw_status fn(fw_circuit* c, fw_wire a, fw_wire b, fw_wire clk, const char* name,  \
               fw_wire* q) {                                                        \
    return guard([&] {                                                              \
      require(q != nullptr, "null output handle");                                  \
      auto& builder = building(c);                                                  \
      auto w = take(c, {a, b, clk});                                                \
      *q = issue(c, builder.method(std::move(w[0]), std::move(w[1]), std::move(w[2]), \
                                   opt(name)));                                     \
    });                                                                             \
  }

FW_BINARY_GATE(fw_and, and_)
FW_BINARY_GATE(fw_or, or_)
FW_BINARY_GATE(fw_xor, xor_)
#undef FW_BINARY_GATE

fw_status fw_not(fw_circuit* c, fw_wire a, fw_wire clk, const char* name, fw_wire* q) {
  return guard([&] {
    require(q != nullptr, "null output handle");
    auto& builder = building(c);
    auto w = take(c, {a, clk});
    *q = issue(c, builder.not_(std::move(w[0]), std::move(w[1]), opt(name)));
  });
}

fw_status fw_dff(fw_circuit* c, fw_wire d, fw_wire clk, const char* name, fw_wire* q) {
  return guard([&] {
    require(q != nullptr, "null output handle");
    auto& builder = building(c);
    auto w = take(c, {d, clk});
    *q = issue(c, builder.dff(std::move(w[0]), std::move(w[1]), opt(name)));
  });
}

fw_status fw_buff(fw_circuit* c, fw_wire a, const char* name, fw_wire* q) {
  return guard([&] {
    require(q != nullptr, "null output handle");
    auto& builder = building(c);
    auto w = take(c, {a});
    *q = issue(c, builder.buff(std::move(w[0]), opt(name)));
  });
}

fw_status fw_split(fw_circuit* c, fw_wire a, const char* name0, const char* name1,
                   fw_wire* q0, fw_wire* q1) {
  return guard([&] {
    require(q0 != nullptr && q1 != nullptr, "null output handle");
    auto& builder = building(c);
    auto w = take(c, {a});
    auto [x, y] = builder.split(std::move(w[0]), opt(name0), opt(name1));
    *q0 = issue(c, std::move(x));
    *q1 = issue(c, std::move(y));
  });
}

fw_status fw_ndro(fw_circuit* c, fw_wire set, fw_wire reset, fw_wire read, const char* name,
                  fw_wire* q) {
  return guard([&] {
    require(q != nullptr, "null output handle");
    auto& builder = building(c);
    auto w = take(c, {set, reset, read});
    *q = issue(c, builder.ndro(std::move(w[0]), std::move(w[1]), std::move(w[2]), opt(name)));
  });
}

fw_status fw_counter_split(fw_circuit* c, fw_counter_wire downstream,
                           const char* upstream_name, const char* tap_name,
                           fw_counter_wire* upstream, fw_wire* tap) {
  return guard([&] {
    require(upstream != nullptr && tap != nullptr, "null output handle");
    auto& builder = building(c);
    auto w = take_counter(c, &downstream, 1);
    auto [up, t] = builder.counter_split(std::move(w[0]), opt(upstream_name), opt(tap_name));
    *upstream = issue(c, std::move(up));
    *tap = issue(c, std::move(t));
  });
}

fw_status fw_counter_buff(fw_circuit* c, fw_counter_wire downstream, const char* upstream_name,
                          fw_counter_wire* upstream) {
  return guard([&] {
    require(upstream != nullptr, "null output handle");
    auto& builder = building(c);
    auto w = take_counter(c, &downstream, 1);
    *upstream = issue(c, builder.counter_buff(std::move(w[0]), opt(upstream_name)));
  });
}

fw_status fw_set_outputs(fw_circuit* c, const fw_wire* wires, size_t n) {
  return guard([&] {
    auto& builder = building(c);
    builder.set_outputs(take(c, wires, n));
  });
}

fw_status fw_set_loops(fw_circuit* c, const fw_wire* wires, size_t n) {
  return guard([&] {
    auto& builder = building(c);
    builder.set_loops(take(c, wires, n));
  });
}

fw_status fw_set_counter_inputs(fw_circuit* c, const fw_counter_wire* wires, size_t n) {
  return guard([&] {
    auto& builder = building(c);
    builder.set_counter_inputs(take_counter(c, wires, n));
  });
}

fw_status fw_instantiate(fw_circuit* c, const fw_circuit* sub, const fw_wire* inputs,
                         size_t n_inputs, const fw_counter_wire* counter_downstream,
                         size_t n_downstream, const char* const* output_names,
                         fw_wire* outputs, size_t n_outputs,
                         const char* const* counter_input_names,
                         fw_counter_wire* counter_inputs, size_t n_counter_inputs) {
  return guard([&] {
    auto& builder = building(c);
    const fw::SealedCircuit& s = sealed(sub);
    require(n_outputs == 0 || outputs != nullptr, "null output handle array");
    require(n_counter_inputs == 0 || counter_inputs != nullptr,
            "null counter-input handle array");
    if (n_inputs != s.ports().inputs.size() || n_outputs != s.ports().outputs.size() ||
        n_downstream != s.ports().counter_outputs.size() ||
        n_counter_inputs != s.ports().counter_inputs.size()) {
      raise(fw::ErrorCode::kArityMismatch, "port counts do not match " + s.name());
    }
    std::vector<fw::OptName> out_names(n_outputs);
    std::vector<fw::OptName> ci_names(n_counter_inputs);
    for (std::size_t i = 0; i < n_outputs && output_names != nullptr; ++i) {
      out_names[i] = opt(output_names[i]);
    }
    for (std::size_t i = 0; i < n_counter_inputs && counter_input_names != nullptr; ++i) {
      ci_names[i] = opt(counter_input_names[i]);
    }
    // Check both handle groups before consuming either.
    for (std::size_t i = 0; i < n_downstream; ++i) {
      auto* w = lookup(c, c->counter_wires, counter_downstream[i], true);
      if (w->consumed()) {
        raise(fw::ErrorCode::kAlreadyConsumed,
              "counter wire " + w->net() + " was already consumed", w->net());
      }
    }
    auto in = take(c, inputs, n_inputs);
    auto down = take_counter(c, counter_downstream, n_downstream);
    auto result = builder.instantiate(sub->sealed, std::move(in), std::move(down),
                                      std::move(out_names), std::move(ci_names));
    for (std::size_t i = 0; i < n_outputs; ++i) outputs[i] = issue(c, std::move(result.outputs[i]));
    for (std::size_t i = 0; i < n_counter_inputs; ++i) {
      counter_inputs[i] = issue(c, std::move(result.counter_inputs[i]));
    }
  });
}

fw_status fw_finalize(fw_circuit* c) {
  return guard([&] {
    auto& builder = building(c);
    c->sealed = std::move(builder).finalize();
    c->builder.reset();
  });
}

fw_status fw_builtin(const char* id, fw_clocking clocking, fw_circuit** circuit) {
  return guard([&] {
    require(id != nullptr && circuit != nullptr, "null argument");
    *circuit = wrap_sealed(fw::builtin_circuit(
        id, clocking == FW_COUNTERFLOW ? fw::Clocking::kCounterflow : fw::Clocking::kConcurrent));
  });
}

fw_status fw_circuit_stats(const fw_circuit* c, fw_stats* stats) {
  return guard([&] {
    require(stats != nullptr, "null stats");
    const fw::SealedCircuit& s = sealed(c);
    fw::NetStats ns = fw::net_stats(s);
    stats->nets = ns.nets;
    stats->auto_named = ns.auto_named;
    stats->multiply_driven = ns.multiply_driven;
    stats->dangling = ns.dangling;
    stats->elements = s.elements().size();
    stats->gates = fw::flatten(s).gates().size();
    stats->subcircuits = s.dependencies().size();
  });
}

fw_status fw_emit(const fw_circuit* c, fw_format format, int hierarchical, const char* cell_map,
                  char** text) {
  return guard([&] {
    const fw::SealedCircuit& s = sealed(c);
    const fw::CellNameMap cells =
        cell_map != nullptr ? fw::CellNameMap::parse(cell_map) : fw::CellNameMap();
    std::vector<std::string> lines;
    if (format == FW_SPICE) {
      lines = hierarchical != 0 ? fw::to_spice_hierarchy(s, cells) : fw::to_spice(s, cells);
    } else if (format == FW_VERILOG) {
      lines = hierarchical != 0 ? fw::to_verilog_hierarchy(s, cells) : fw::to_verilog(s, cells);
    } else {
      raise(fw::ErrorCode::kInvalidArgument, "unknown format");
    }
    put(text, fw::join_lines(lines));
  });
}

fw_status fw_emit_cell_models(const char* cell_map, char** text) {
  return guard([&] {
    const fw::CellNameMap cells =
        cell_map != nullptr ? fw::CellNameMap::parse(cell_map) : fw::CellNameMap();
    put(text, fw::join_lines(fw::emit_verilog_cell_models(cells)));
  });
}

fw_status fw_simulate(const fw_circuit* c, const char* stimulus, const char* delays,
                      int64_t horizon_ps, const char* watch, char** trace, size_t* pulses,
                      size_t* diagnostics) {
  return guard([&] {
    const fw::SealedCircuit& s = sealed(c);
    require(stimulus != nullptr, "null stimulus");
    require(horizon_ps >= 0, "negative horizon");
    const fw::DelayConfig d =
        delays != nullptr ? fw::DelayConfig::parse(delays) : fw::DelayConfig();
    std::vector<std::string> watched;
    if (watch != nullptr) {
      for (auto& item : fw::text_io::split(watch, ',')) {
        auto name = fw::text_io::trim(item);
        if (!name.empty()) watched.emplace_back(name);
      }
    }
    fw::FlatGraph graph = fw::flatten(s);
    fw::SimTrace t = fw::simulate(graph, fw::parse_stimulus(stimulus), d, horizon_ps, watched);
    if (trace != nullptr) *trace = dup(fw::format_trace(t));
    if (pulses != nullptr) *pulses = t.events.size();
    if (diagnostics != nullptr) *diagnostics = t.diagnostics.size();
  });
}

fw_status fw_gf_table(int width, uint32_t primitive_poly, char** text) {
  return guard([&] {
    fw::FieldContext field = fw::FieldContext::create(width, primitive_poly);
    std::string out;
    for (const auto& row : field.table_rows()) {
      out += row.power + " | " + row.polynomial + " | " + row.binary + "\n";
    }
    put(text, out);
  });
}

fw_status fw_rs_encode(const char* messages, char** parity) {
  return guard([&] {
    require(messages != nullptr, "null messages");
    const fw::RSParams params = fw::RSParams::rs12_8();
    auto streams = fw::parse_word_streams(params.field, messages);
    std::vector<fw::WordPoly> out;
    for (const auto& m : streams) {
      if (static_cast<int>(m.size()) != params.k) {
        raise(fw::ErrorCode::kParse, "message has " + std::to_string(m.size()) +
                                         " words, expected " + std::to_string(params.k));
      }
      out.push_back(fw::rs_encode(params, m));
    }
    put(parity, fw::format_word_streams(params.field, out));
  });
}

fw_status fw_rs_run(const char* messages, const fw_run_options* options, char** parity,
                    int* match) {
  return guard([&] {
    require(messages != nullptr && match != nullptr, "null argument");
    const fw::EncoderConfig cfg = run_config(options);
    auto streams = fw::parse_word_streams(cfg.params.field, messages);
    for (const auto& m : streams) {
      if (static_cast<int>(m.size()) != cfg.params.k) {
        raise(fw::ErrorCode::kParse, "message has " + std::to_string(m.size()) +
                                         " words, expected " + std::to_string(cfg.params.k));
      }
    }
    auto simulated = simulate_streams(cfg, run_delays(options), streams);
    *match = 1;
    for (std::size_t i = 0; i < streams.size(); ++i) {
      if (simulated[i] != fw::rs_encode(cfg.params, streams[i])) *match = 0;
    }
    if (parity != nullptr) *parity = dup(fw::format_word_streams(cfg.params.field, simulated));
  });
}

fw_status fw_rs_random_check(size_t batches, uint64_t seed, const fw_run_options* options,
                             size_t* mismatches) {
  return guard([&] {
    require(mismatches != nullptr, "null argument");
    const fw::EncoderConfig cfg = run_config(options);
    const fw::DelayConfig delays = run_delays(options);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> word(0, static_cast<int>(cfg.params.field.size()) - 1);
    *mismatches = 0;
    for (std::size_t b = 0; b < batches; ++b) {
      std::vector<fw::WordPoly> batch;
      for (int s = 0; s < cfg.interleave_depth; ++s) {
        fw::WordPoly m;
        for (int i = 0; i < cfg.params.k; ++i) m.push_back({static_cast<std::uint8_t>(word(rng))});
        batch.push_back(std::move(m));
      }
      auto simulated = fw::run_encoder(cfg, batch, delays);
      for (std::size_t s = 0; s < batch.size(); ++s) {
        if (simulated[s] != fw::rs_encode(cfg.params, batch[s])) ++*mismatches;
      }
    }
  });
}

}  // extern "C"
