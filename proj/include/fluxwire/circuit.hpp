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

#ifndef FLUXWIRE_CIRCUIT_HPP_
#define FLUXWIRE_CIRCUIT_HPP_

// Circuit construction with single-use wire handles.
//
// A Wire names a net that has a driver and still needs exactly one receiver.
// Every gate function takes its input wires by value, so handing a wire to a
// gate requires an explicit std::move and the moved-from object is left in a
// consumed state. A second use of the same variable is reported at
// construction time with the net name (clang-tidy's bugprone-use-after-move
// flags it before the program runs). Wires are never copyable.
//
// A CounterWire is the mirror image used for counter-flow clock lines: it
// names a net that already has a receiver and still needs its driver.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "fluxwire/error.hpp"

namespace fluxwire {

enum class GateKind : std::uint8_t {
  kAnd2,
  kOr2,
  kXor,
  kNot,
  kDff,
  kBuff,
  kSplit,
  kNdro,
};

inline constexpr std::array<GateKind, 8> kAllGateKinds = {
    GateKind::kAnd2, GateKind::kOr2,  GateKind::kXor,   GateKind::kNot,
    GateKind::kDff,  GateKind::kBuff, GateKind::kSplit, GateKind::kNdro};

// "AND2", "OR2", "XOR", ... as used in cell maps and delay files.
std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);
// Token used in instance labels: XAND4, XSPLIT1, ...
std::string_view gate_label_token(GateKind kind);
// Canonical pin order; outputs are always the trailing pins.
std::span<const std::string_view> gate_pin_names(GateKind kind);
std::size_t gate_output_count(GateKind kind);
bool gate_is_clocked(GateKind kind);
// Index of the clock pin for clocked gates (read pin for NDRO).
std::optional<std::size_t> gate_clock_pin(GateKind kind);

using OptName = std::optional<std::string>;

namespace internal {
struct DataTag {};
struct CounterTag {};
}  // namespace internal

class CircuitBuilder;

template <class Tag>
class BasicWire {
 public:
  BasicWire() = default;
  BasicWire(const BasicWire&) = delete;
  BasicWire& operator=(const BasicWire&) = delete;
  BasicWire(BasicWire&& other) noexcept
      : net_(other.net_), owner_(other.owner_), consumed_(other.consumed_) {
    other.consumed_ = true;
  }
  BasicWire& operator=(BasicWire&& other) noexcept {
    if (this != &other) {
      net_ = other.net_;
      owner_ = other.owner_;
      consumed_ = other.consumed_;
      other.consumed_ = true;
    }
    return *this;
  }
  ~BasicWire() = default;

  const std::string& net() const { return net_; }
  bool consumed() const { return consumed_; }

 private:
  friend class CircuitBuilder;
  BasicWire(std::string net, std::uint64_t owner)
      : net_(std::move(net)), owner_(owner), consumed_(false) {}

  std::string net_;
  std::uint64_t owner_ = 0;
  bool consumed_ = true;
};

using Wire = BasicWire<internal::DataTag>;
using CounterWire = BasicWire<internal::CounterTag>;

struct PortNames {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<std::string> loops;
  std::vector<std::string> counter_outputs;
  std::vector<std::string> counter_inputs;
};

class SealedCircuit;
using Sealed = std::shared_ptr<const SealedCircuit>;

// One placed cell: a primitive gate or an instance of another circuit.
// Subcircuit pins follow the sub's header order.
struct Element {
  std::string label;
  std::variant<GateKind, Sealed> cell;
  std::vector<std::string> pins;

  bool is_gate() const { return std::holds_alternative<GateKind>(cell); }
  GateKind kind() const { return std::get<GateKind>(cell); }
  const SealedCircuit& sub() const { return *std::get<Sealed>(cell); }
  // True when the pin drives its net (gate outputs, sub outputs and
  // counter-outputs).
  bool drives(std::size_t pin) const;
};

// Output or counter-output port fed directly by a header-driven net.
struct Passthrough {
  std::string port;
  std::string source;
};

class SealedCircuit {
 public:
  const std::string& name() const { return name_; }
  const PortNames& ports() const { return ports_; }
  // inputs ++ outputs ++ counter_outputs ++ counter_inputs
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<Passthrough>& passthroughs() const { return passthroughs_; }
  // Every distinct net in first-appearance order (header first).
  std::vector<std::string> nets() const;
  // Distinct subcircuits reachable from this one, dependencies first.
  std::vector<Sealed> dependencies() const;

  std::size_t header_input_count() const {
    return ports_.inputs.size() + ports_.counter_inputs.size();
  }
  // Pin roles of this circuit when used as an instance.
  bool header_pin_drives(std::size_t index) const;

 private:
  friend class CircuitBuilder;
  SealedCircuit() = default;

  std::string name_;
  PortNames ports_;
  std::vector<std::string> header_;
  std::vector<Element> elements_;
  std::vector<Passthrough> passthroughs_;
};

struct CreatedPorts {
  std::vector<Wire> inputs;
  std::vector<Wire> loops;
  std::vector<CounterWire> counter_outputs;
};

struct InstanceOutputs {
  std::vector<Wire> outputs;
  std::vector<CounterWire> counter_inputs;
};

// Mutable construction context. Single-threaded.
class CircuitBuilder {
 public:
  static std::pair<CircuitBuilder, CreatedPorts> create(std::string name,
                                                        PortNames ports);

  CircuitBuilder(CircuitBuilder&&) noexcept = default;
  CircuitBuilder& operator=(CircuitBuilder&&) noexcept = default;
  CircuitBuilder(const CircuitBuilder&) = delete;
  CircuitBuilder& operator=(const CircuitBuilder&) = delete;

  const std::string& name() const { return name_; }
  std::uint64_t id() const { return id_; }

  Wire and_(Wire a, Wire b, Wire clk, OptName q = {});
  Wire or_(Wire a, Wire b, Wire clk, OptName q = {});
  Wire xor_(Wire a, Wire b, Wire clk, OptName q = {});
  Wire not_(Wire a, Wire clk, OptName q = {});
  Wire dff(Wire d, Wire clk, OptName q = {});
  Wire buff(Wire a, OptName q = {});
  std::pair<Wire, Wire> split(Wire a, OptName q0 = {}, OptName q1 = {});
  Wire ndro(Wire set, Wire reset, Wire read, OptName q = {});

  // Consumes the downstream end of a clock line; returns the upstream end and
  // a tap usable as a gate clock. SPLIT pins: (upstream, tap, downstream).
  std::pair<CounterWire, Wire> counter_split(CounterWire downstream,
                                             OptName upstream = {},
                                             OptName tap = {});
  CounterWire counter_buff(CounterWire downstream, OptName upstream = {});

  void set_outputs(std::vector<Wire> outputs);
  void set_loops(std::vector<Wire> lower_ends);
  void set_counter_inputs(std::vector<CounterWire> inputs);

  InstanceOutputs instantiate(const Sealed& sub, std::vector<Wire> inputs,
                              std::vector<CounterWire> counter_downstream,
                              std::vector<OptName> output_names,
                              std::vector<OptName> counter_input_names);

  // Validates one-driver/one-receiver on every net and freezes the circuit.
  Sealed finalize() &&;

  // Read-only view of the partially built circuit.
  const std::vector<Element>& elements() const { return elements_; }

 private:
  CircuitBuilder() = default;

  template <class Tag>
  std::string take(BasicWire<Tag>& wire);
  void check_new_name(const std::string& name);
  std::string claim_name(const OptName& requested, std::string_view base_net);
  std::string auto_name(std::string_view base_net);
  void register_wire(const std::string& net, bool counter);
  Wire make_wire(std::string net);
  CounterWire make_counter_wire(std::string net);
  Wire place_gate(GateKind kind, std::vector<Wire*> inputs, OptName q);
  void rename_pin_net(const std::string& from, const std::string& to,
                      bool driver_side);
  void scan_nets() const;

  std::string name_;
  std::uint64_t id_ = 0;
  PortNames ports_;
  std::vector<Element> elements_;
  std::vector<Passthrough> passthroughs_;
  std::size_t ordinal_ = 0;
  std::uint64_t wire_seq_ = 0;
  std::map<std::string, std::size_t> name_counters_;
  std::set<std::string> used_names_;
  std::set<std::string> bind_targets_;
  std::set<std::string> header_driven_;
  // live handle net -> (creation sequence, is counter wire)
  std::unordered_map<std::string, std::pair<std::uint64_t, bool>> live_;
  bool outputs_bound_ = false;
  bool loops_bound_ = false;
  bool counter_inputs_bound_ = false;
  bool finalized_ = false;
};

// Sealed circuit whose port counts are part of its type.
template <std::size_t N, std::size_t M, std::size_t L = 0, std::size_t O = 0,
          std::size_t P = 0>
class TypedSealed {
 public:
  explicit TypedSealed(Sealed circuit) : circuit_(std::move(circuit)) {}
  const Sealed& get() const { return circuit_; }
  const SealedCircuit* operator->() const { return circuit_.get(); }
  const SealedCircuit& operator*() const { return *circuit_; }

 private:
  Sealed circuit_;
};

namespace internal {
template <class T, std::size_t K>
std::vector<T> to_vector(std::array<T, K>&& items) {
  std::vector<T> out;
  out.reserve(K);
  for (auto& item : items) out.push_back(std::move(item));
  return out;
}
template <class T, std::size_t K>
std::array<T, K> to_array(std::vector<T>&& items) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<T, K>{std::move(items[I])...};
  }(std::make_index_sequence<K>{});
}
template <std::size_t K>
std::vector<std::string> names(const std::array<std::string_view, K>& items) {
  return {items.begin(), items.end()};
}
}  // namespace internal

// Circuit whose port counts N, M, L, O, P (inputs, outputs, loops,
// counter-outputs, counter-inputs) are checked by the compiler wherever
// handles cross a port boundary.
template <std::size_t N, std::size_t M, std::size_t L = 0, std::size_t O = 0,
          std::size_t P = 0>
class Circuit : public CircuitBuilder {
 public:
  struct Created {
    Circuit circuit;
    std::array<Wire, N> inputs;
    std::array<Wire, L> loops;
    std::array<CounterWire, O> counter_outputs;
  };

  static Created create(std::string name,
                        const std::array<std::string_view, N>& inputs,
                        const std::array<std::string_view, M>& outputs,
                        const std::array<std::string_view, L>& loops = {},
                        const std::array<std::string_view, O>& counter_outputs = {},
                        const std::array<std::string_view, P>& counter_inputs = {}) {
    auto [builder, ports] = CircuitBuilder::create(
        std::move(name),
        PortNames{internal::names(inputs), internal::names(outputs),
                  internal::names(loops), internal::names(counter_outputs),
                  internal::names(counter_inputs)});
    return Created{Circuit(std::move(builder)),
                   internal::to_array<Wire, N>(std::move(ports.inputs)),
                   internal::to_array<Wire, L>(std::move(ports.loops)),
                   internal::to_array<CounterWire, O>(
                       std::move(ports.counter_outputs))};
  }

  void set_outputs(std::array<Wire, M> outputs) {
    CircuitBuilder::set_outputs(internal::to_vector(std::move(outputs)));
  }
  void set_loops(std::array<Wire, L> lower_ends) {
    CircuitBuilder::set_loops(internal::to_vector(std::move(lower_ends)));
  }
  void set_counter_inputs(std::array<CounterWire, P> inputs) {
    CircuitBuilder::set_counter_inputs(internal::to_vector(std::move(inputs)));
  }

  template <std::size_t N2, std::size_t M2, std::size_t L2, std::size_t O2,
            std::size_t P2>
  std::pair<std::array<Wire, M2>, std::array<CounterWire, P2>> subcircuit(
      const TypedSealed<N2, M2, L2, O2, P2>& sub, std::array<Wire, N2> inputs,
      std::array<CounterWire, O2> counter_downstream,
      std::array<OptName, M2> output_names = {},
      std::array<OptName, P2> counter_input_names = {}) {
    InstanceOutputs out = CircuitBuilder::instantiate(
        sub.get(), internal::to_vector(std::move(inputs)),
        internal::to_vector(std::move(counter_downstream)),
        {output_names.begin(), output_names.end()},
        {counter_input_names.begin(), counter_input_names.end()});
    return {internal::to_array<Wire, M2>(std::move(out.outputs)),
            internal::to_array<CounterWire, P2>(std::move(out.counter_inputs))};
  }

  TypedSealed<N, M, L, O, P> finalize() && {
    return TypedSealed<N, M, L, O, P>(
        static_cast<CircuitBuilder&&>(*this).finalize());
  }

 private:
  explicit Circuit(CircuitBuilder&& builder)
      : CircuitBuilder(std::move(builder)) {}
};

}  // namespace fluxwire

#endif  // FLUXWIRE_CIRCUIT_HPP_
