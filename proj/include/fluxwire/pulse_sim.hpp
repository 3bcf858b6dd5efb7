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

#ifndef FLUXWIRE_PULSE_SIM_HPP_
#define FLUXWIRE_PULSE_SIM_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fluxwire/circuit.hpp"

namespace fluxwire {

using NetId = std::uint32_t;

struct FlatGate {
  GateKind kind;
  std::string path;  // instance labels joined with '/'
  std::vector<NetId> pins;
};

struct PinRef {
  std::uint32_t gate;
  std::uint32_t pin;
};

// Primitive-only view of a sealed hierarchy. Nets inside an instance are
// named "<label>/<net>"; nets merged through ports keep the outer name.
class FlatGraph {
 public:
  const std::vector<std::string>& net_names() const { return net_names_; }
  const std::vector<FlatGate>& gates() const { return gates_; }
  std::optional<NetId> find_net(std::string_view name) const;
  const std::string& net_name(NetId id) const { return net_names_[id]; }
  std::optional<PinRef> driver(NetId net) const;
  std::optional<PinRef> receiver(NetId net) const;

  // Top-level ports by physical direction: inputs ++ counter-inputs,
  // outputs ++ counter-outputs.
  const std::vector<NetId>& input_ports() const { return input_ports_; }
  const std::vector<NetId>& output_ports() const { return output_ports_; }
  bool is_input_port(NetId net) const;

 private:
  friend FlatGraph flatten(const SealedCircuit& circuit);

  std::vector<std::string> net_names_;
  std::unordered_map<std::string, NetId> index_;
  std::vector<FlatGate> gates_;
  std::vector<std::optional<PinRef>> drivers_;
  std::vector<std::optional<PinRef>> receivers_;
  std::vector<NetId> input_ports_;
  std::vector<NetId> output_ports_;
};

// Inlines every subcircuit instance. Throws kCyclicHierarchy on recursion.
FlatGraph flatten(const SealedCircuit& circuit);

// Propagation delay per gate kind, picoseconds.
class DelayConfig {
 public:
  DelayConfig() { delays_.fill(5); }

  int delay(GateKind kind) const { return delays_[static_cast<std::size_t>(kind)]; }
  void set(GateKind kind, int ps);
  // "KEY=VALUE" lines with gate kind names as keys.
  static DelayConfig parse(std::string_view text);

 private:
  std::array<int, 8> delays_;
};

struct PulseEvent {
  std::int64_t time = 0;  // ps
  std::string net;

  friend bool operator==(const PulseEvent&, const PulseEvent&) = default;
  friend auto operator<=>(const PulseEvent&, const PulseEvent&) = default;
};

struct SimTrace {
  std::vector<PulseEvent> events;  // sorted by (time, net)
  // Clocked-gate data pins that saw a second pulse before their clock.
  std::vector<std::string> diagnostics;

  std::size_t count(std::string_view net) const;
  std::vector<std::int64_t> times(std::string_view net) const;
};

// Runs the event queue up to and including `horizon`. `watched` selects the
// nets recorded in the trace; empty means the top-level output ports.
SimTrace simulate(const FlatGraph& graph, std::span<const PulseEvent> stimulus,
                  const DelayConfig& delays, std::int64_t horizon,
                  const std::vector<std::string>& watched = {});

std::vector<PulseEvent> clock_train(const std::string& net, std::int64_t start,
                                    std::int64_t period, std::int64_t count);

// Word i has bit j set iff a pulse on bit_nets[j] lies in
// [clock_times[i], clock_times[i] + window).
std::vector<std::uint32_t> decode_words(const SimTrace& trace,
                                        const std::vector<std::string>& bit_nets,
                                        const std::vector<std::int64_t>& clock_times,
                                        std::int64_t window);

// "pulse <net> <time>" and "clock <net> <start> <period> <count>" lines.
std::vector<PulseEvent> parse_stimulus(std::string_view text);
// "<time>\t<net>" lines.
std::string format_trace(const SimTrace& trace);

}  // namespace fluxwire

#endif  // FLUXWIRE_PULSE_SIM_HPP_
