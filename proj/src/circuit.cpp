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

#include "fluxwire/circuit.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace fluxwire {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAlreadyConsumed: return "AlreadyConsumed";
    case ErrorCode::kForeignWire: return "ForeignWire";
    case ErrorCode::kNameCollision: return "NameCollision";
    case ErrorCode::kReservedName: return "ReservedName";
    case ErrorCode::kInvalidName: return "InvalidName";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kAlreadyBound: return "AlreadyBound";
    case ErrorCode::kUnboundPorts: return "UnboundPorts";
    case ErrorCode::kDanglingWire: return "DanglingWire";
    case ErrorCode::kNoDriver: return "NoDriver";
    case ErrorCode::kDoubleDriver: return "DoubleDriver";
    case ErrorCode::kMultipleReceivers: return "MultipleReceivers";
    case ErrorCode::kNotSealed: return "NotSealed";
    case ErrorCode::kCyclicHierarchy: return "CyclicHierarchy";
    case ErrorCode::kUnknownNet: return "UnknownNet";
    case ErrorCode::kAmbiguousDecode: return "AmbiguousDecode";
    case ErrorCode::kNotPrimitive: return "NotPrimitive";
    case ErrorCode::kInvalidPolynomial: return "InvalidPolynomial";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kStageMismatch: return "StageMismatch";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::string net)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      net_(std::move(net)) {}

namespace {

constexpr std::string_view kSplitPins[] = {"a", "q0", "q1"};
constexpr std::string_view kBuffPins[] = {"a", "q"};
constexpr std::string_view kDffPins[] = {"d", "clk", "q"};
constexpr std::string_view kBinaryPins[] = {"a", "b", "clk", "q"};
constexpr std::string_view kNotPins[] = {"a", "clk", "q"};
constexpr std::string_view kNdroPins[] = {"set", "reset", "read", "q"};

std::atomic<std::uint64_t> g_next_builder_id{1};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// User-supplied names: identifier characters, not empty, no leading
// underscore (reserved for automatic names) and no leading digit.
void validate_user_name(const std::string& name) {
  if (name.empty()) throw Error(ErrorCode::kInvalidName, "empty name");
  if (name.front() == '_') {
    throw Error(ErrorCode::kReservedName,
                "names starting with '_' are reserved for automatic naming: " +
                    name,
                name);
  }
  if (std::isdigit(static_cast<unsigned char>(name.front())) != 0 ||
      !std::all_of(name.begin(), name.end(), is_name_char)) {
    throw Error(ErrorCode::kInvalidName, "not an identifier: " + name, name);
  }
}

// "_a_0" -> "a", "clk" -> "clk", "in0_3" -> "in0"
std::string auto_name_base(std::string_view net) {
  if (!net.empty() && net.front() == '_') net.remove_prefix(1);
  auto us = net.rfind('_');
  if (us != std::string_view::npos && us + 1 < net.size() &&
      std::all_of(net.begin() + static_cast<std::ptrdiff_t>(us) + 1, net.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
    net = net.substr(0, us);
  }
  if (net.empty()) return "n";
  return std::string(net);
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kAnd2: return "AND2";
    case GateKind::kOr2: return "OR2";
    case GateKind::kXor: return "XOR";
    case GateKind::kNot: return "NOT";
    case GateKind::kDff: return "DFF";
    case GateKind::kBuff: return "BUFF";
    case GateKind::kSplit: return "SPLIT";
    case GateKind::kNdro: return "NDRO";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (GateKind kind : kAllGateKinds) {
    if (gate_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view gate_label_token(GateKind kind) {
  switch (kind) {
    case GateKind::kAnd2: return "AND";
    case GateKind::kOr2: return "OR";
    default: return gate_kind_name(kind);
  }
}

std::span<const std::string_view> gate_pin_names(GateKind kind) {
  switch (kind) {
    case GateKind::kAnd2:
    case GateKind::kOr2:
    case GateKind::kXor: return kBinaryPins;
    case GateKind::kNot: return kNotPins;
    case GateKind::kDff: return kDffPins;
    case GateKind::kBuff: return kBuffPins;
    case GateKind::kSplit: return kSplitPins;
    case GateKind::kNdro: return kNdroPins;
  }
  return {};
}

std::size_t gate_output_count(GateKind kind) {
  return kind == GateKind::kSplit ? 2 : 1;
}

bool gate_is_clocked(GateKind kind) {
  switch (kind) {
    case GateKind::kAnd2:
    case GateKind::kOr2:
    case GateKind::kXor:
    case GateKind::kNot:
    case GateKind::kDff: return true;
    default: return false;
  }
}

std::optional<std::size_t> gate_clock_pin(GateKind kind) {
  switch (kind) {
    case GateKind::kAnd2:
    case GateKind::kOr2:
    case GateKind::kXor: return 2;
    case GateKind::kNot:
    case GateKind::kDff: return 1;
    case GateKind::kNdro: return 2;
    default: return std::nullopt;
  }
}

bool Element::drives(std::size_t pin) const {
  if (is_gate()) return pin + gate_output_count(kind()) >= pins.size();
  return sub().header_pin_drives(pin);
}

bool SealedCircuit::header_pin_drives(std::size_t index) const {
  const std::size_t n = ports_.inputs.size();
  const std::size_t m = ports_.outputs.size();
  const std::size_t o = ports_.counter_outputs.size();
  return index >= n && index < n + m + o;
}

std::vector<std::string> SealedCircuit::nets() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  auto add = [&](const std::string& net) {
    if (seen.insert(net).second) out.push_back(net);
  };
  for (const auto& net : header_) add(net);
  for (const auto& element : elements_) {
    for (const auto& pin : element.pins) add(pin);
  }
  for (const auto& pt : passthroughs_) {
    add(pt.port);
    add(pt.source);
  }
  return out;
}

std::vector<Sealed> SealedCircuit::dependencies() const {
  std::vector<Sealed> out;
  std::unordered_set<const SealedCircuit*> seen;
  std::function<void(const SealedCircuit&)> visit = [&](const SealedCircuit& c) {
    for (const auto& element : c.elements_) {
      if (element.is_gate()) continue;
      const Sealed& sub = std::get<Sealed>(element.cell);
      if (!seen.insert(sub.get()).second) continue;
      visit(*sub);
      out.push_back(sub);
    }
  };
  visit(*this);
  return out;
}

std::pair<CircuitBuilder, CreatedPorts> CircuitBuilder::create(std::string name,
                                                               PortNames ports) {
  validate_user_name(name);
  CircuitBuilder b;
  b.name_ = std::move(name);
  b.id_ = g_next_builder_id.fetch_add(1);

  std::set<std::string> seen;
  for (const auto* group : {&ports.inputs, &ports.outputs, &ports.loops,
                            &ports.counter_outputs, &ports.counter_inputs}) {
    for (const auto& port : *group) {
      validate_user_name(port);
      if (!seen.insert(port).second) {
        throw Error(ErrorCode::kNameCollision, "duplicate port name " + port,
                    port);
      }
    }
  }
  b.ports_ = std::move(ports);

  CreatedPorts created;
  for (const auto& in : b.ports_.inputs) {
    b.used_names_.insert(in);
    b.header_driven_.insert(in);
    created.inputs.push_back(b.make_wire(in));
  }
  for (const auto& loop : b.ports_.loops) {
    b.used_names_.insert(loop);
    b.bind_targets_.insert(loop);
    b.header_driven_.insert(loop);
    created.loops.push_back(b.make_wire(loop));
  }
  for (const auto& co : b.ports_.counter_outputs) {
    b.used_names_.insert(co);
    created.counter_outputs.push_back(b.make_counter_wire(co));
  }
  for (const auto& out : b.ports_.outputs) b.bind_targets_.insert(out);
  for (const auto& ci : b.ports_.counter_inputs) b.bind_targets_.insert(ci);
  return {std::move(b), std::move(created)};
}

template <class Tag>
std::string CircuitBuilder::take(BasicWire<Tag>& wire) {
  if (wire.consumed_) {
    if (wire.net_.empty()) {
      throw Error(ErrorCode::kAlreadyConsumed, "use of an empty wire handle");
    }
    throw Error(ErrorCode::kAlreadyConsumed,
                "wire " + wire.net_ + " was already consumed", wire.net_);
  }
  if (wire.owner_ != id_) {
    throw Error(ErrorCode::kForeignWire,
                "wire " + wire.net_ + " belongs to a different circuit",
                wire.net_);
  }
  auto it = live_.find(wire.net_);
  if (it == live_.end()) {
    throw Error(ErrorCode::kAlreadyConsumed,
                "wire " + wire.net_ + " was already consumed", wire.net_);
  }
  live_.erase(it);
  wire.consumed_ = true;
  return wire.net_;
}

void CircuitBuilder::register_wire(const std::string& net, bool counter) {
  live_[net] = {wire_seq_++, counter};
}

Wire CircuitBuilder::make_wire(std::string net) {
  register_wire(net, false);
  return Wire(std::move(net), id_);
}

CounterWire CircuitBuilder::make_counter_wire(std::string net) {
  register_wire(net, true);
  return CounterWire(std::move(net), id_);
}

std::string CircuitBuilder::auto_name(std::string_view base_net) {
  std::string base = auto_name_base(base_net);
  std::size_t& k = name_counters_[base];
  std::string name = "_" + base + "_" + std::to_string(k++);
  used_names_.insert(name);
  return name;
}

std::string CircuitBuilder::claim_name(const OptName& requested,
                                       std::string_view base_net) {
  if (!requested) return auto_name(base_net);
  const std::string& name = *requested;
  validate_user_name(name);
  if (live_.count(name) != 0) {
    throw Error(ErrorCode::kNameCollision, "net " + name + " already exists",
                name);
  }
  if (bind_targets_.count(name) != 0) {
    // Declared output, loop and counter-input names may be given to the one
    // net that will be bound to them.
    bind_targets_.erase(name);
    used_names_.insert(name);
    return name;
  }
  if (!used_names_.insert(name).second) {
    throw Error(ErrorCode::kNameCollision, "net " + name + " already exists",
                name);
  }
  return name;
}

Wire CircuitBuilder::place_gate(GateKind kind, std::vector<Wire*> inputs,
                                OptName q) {
  Element element;
  element.cell = kind;
  for (Wire* w : inputs) element.pins.push_back(take(*w));
  std::string out = claim_name(q, element.pins.front());
  element.pins.push_back(out);
  element.label = "X" + std::string(gate_label_token(kind)) +
                  std::to_string(++ordinal_);
  elements_.push_back(std::move(element));
  return make_wire(std::move(out));
}

Wire CircuitBuilder::and_(Wire a, Wire b, Wire clk, OptName q) {
  return place_gate(GateKind::kAnd2, {&a, &b, &clk}, std::move(q));
}
Wire CircuitBuilder::or_(Wire a, Wire b, Wire clk, OptName q) {
  return place_gate(GateKind::kOr2, {&a, &b, &clk}, std::move(q));
}
Wire CircuitBuilder::xor_(Wire a, Wire b, Wire clk, OptName q) {
  return place_gate(GateKind::kXor, {&a, &b, &clk}, std::move(q));
}
Wire CircuitBuilder::not_(Wire a, Wire clk, OptName q) {
  return place_gate(GateKind::kNot, {&a, &clk}, std::move(q));
}
Wire CircuitBuilder::dff(Wire d, Wire clk, OptName q) {
  return place_gate(GateKind::kDff, {&d, &clk}, std::move(q));
}
Wire CircuitBuilder::buff(Wire a, OptName q) {
  return place_gate(GateKind::kBuff, {&a}, std::move(q));
}
Wire CircuitBuilder::ndro(Wire set, Wire reset, Wire read, OptName q) {
  return place_gate(GateKind::kNdro, {&set, &reset, &read}, std::move(q));
}

std::pair<Wire, Wire> CircuitBuilder::split(Wire a, OptName q0, OptName q1) {
  Element element;
  element.cell = GateKind::kSplit;
  std::string in = take(a);
  std::string out0 = claim_name(q0, in);
  std::string out1 = claim_name(q1, in);
  element.pins = {in, out0, out1};
  element.label = "XSPLIT" + std::to_string(++ordinal_);
  elements_.push_back(std::move(element));
  Wire w0 = make_wire(std::move(out0));
  Wire w1 = make_wire(std::move(out1));
  return {std::move(w0), std::move(w1)};
}

std::pair<CounterWire, Wire> CircuitBuilder::counter_split(
    CounterWire downstream, OptName upstream, OptName tap) {
  Element element;
  element.cell = GateKind::kSplit;
  std::string down = take(downstream);
  std::string up = claim_name(upstream, down);
  std::string tap_net = claim_name(tap, down);
  element.pins = {up, tap_net, down};
  element.label = "XSPLIT" + std::to_string(++ordinal_);
  elements_.push_back(std::move(element));
  CounterWire cw = make_counter_wire(std::move(up));
  Wire w = make_wire(std::move(tap_net));
  return {std::move(cw), std::move(w)};
}

CounterWire CircuitBuilder::counter_buff(CounterWire downstream,
                                         OptName upstream) {
  Element element;
  element.cell = GateKind::kBuff;
  std::string down = take(downstream);
  std::string up = claim_name(upstream, down);
  element.pins = {up, down};
  element.label = "XBUFF" + std::to_string(++ordinal_);
  elements_.push_back(std::move(element));
  return make_counter_wire(std::move(up));
}

// Renames the single driver (driver_side) or every receiver pin of `from`.
void CircuitBuilder::rename_pin_net(const std::string& from,
                                    const std::string& to, bool driver_side) {
  for (auto& element : elements_) {
    for (std::size_t i = 0; i < element.pins.size(); ++i) {
      if (element.pins[i] == from && element.drives(i) == driver_side) {
        element.pins[i] = to;
      }
    }
  }
}

void CircuitBuilder::set_outputs(std::vector<Wire> outputs) {
  if (outputs_bound_) {
    throw Error(ErrorCode::kAlreadyBound, "outputs of " + name_ + " already bound");
  }
  if (outputs.size() != ports_.outputs.size()) {
    throw Error(ErrorCode::kArityMismatch,
                name_ + " declares " + std::to_string(ports_.outputs.size()) +
                    " outputs, got " + std::to_string(outputs.size()));
  }
  outputs_bound_ = true;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    const std::string& port = ports_.outputs[i];
    std::string net = take(outputs[i]);
    bind_targets_.erase(port);
    if (net == port) continue;
    if (header_driven_.count(net) != 0) {
      passthroughs_.push_back({port, net});
    } else {
      rename_pin_net(net, port, /*driver_side=*/true);
    }
  }
}

void CircuitBuilder::set_loops(std::vector<Wire> lower_ends) {
  if (loops_bound_) {
    throw Error(ErrorCode::kAlreadyBound, "loops of " + name_ + " already bound");
  }
  if (lower_ends.size() != ports_.loops.size()) {
    throw Error(ErrorCode::kArityMismatch,
                name_ + " declares " + std::to_string(ports_.loops.size()) +
                    " loops, got " + std::to_string(lower_ends.size()));
  }
  loops_bound_ = true;
  for (std::size_t i = 0; i < lower_ends.size(); ++i) {
    const std::string& loop = ports_.loops[i];
    std::string net = take(lower_ends[i]);
    bind_targets_.erase(loop);
    if (net == loop) continue;
    if (header_driven_.count(net) != 0) {
      // Nothing to rename on the driver side: merge the loop's receivers
      // into the driving net instead.
      rename_pin_net(loop, net, /*driver_side=*/false);
    } else {
      rename_pin_net(net, loop, /*driver_side=*/true);
    }
  }
}

void CircuitBuilder::set_counter_inputs(std::vector<CounterWire> inputs) {
  if (counter_inputs_bound_) {
    throw Error(ErrorCode::kAlreadyBound,
                "counter inputs of " + name_ + " already bound");
  }
  if (inputs.size() != ports_.counter_inputs.size()) {
    throw Error(ErrorCode::kArityMismatch,
                name_ + " declares " +
                    std::to_string(ports_.counter_inputs.size()) +
                    " counter inputs, got " + std::to_string(inputs.size()));
  }
  counter_inputs_bound_ = true;
  const std::set<std::string> counter_out_ports(ports_.counter_outputs.begin(),
                                                ports_.counter_outputs.end());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const std::string& port = ports_.counter_inputs[i];
    std::string net = take(inputs[i]);
    bind_targets_.erase(port);
    if (net == port) continue;
    if (counter_out_ports.count(net) != 0) {
      passthroughs_.push_back({net, port});
    } else {
      rename_pin_net(net, port, /*driver_side=*/false);
    }
  }
}

InstanceOutputs CircuitBuilder::instantiate(
    const Sealed& sub, std::vector<Wire> inputs,
    std::vector<CounterWire> counter_downstream,
    std::vector<OptName> output_names,
    std::vector<OptName> counter_input_names) {
  if (!sub) throw Error(ErrorCode::kNotSealed, "subcircuit is not sealed");
  const PortNames& sp = sub->ports();
  auto check = [&](std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
      throw Error(ErrorCode::kArityMismatch,
                  sub->name() + " has " + std::to_string(want) + " " + what +
                      ", got " + std::to_string(got));
    }
  };
  check(inputs.size(), sp.inputs.size(), "inputs");
  check(output_names.size(), sp.outputs.size(), "outputs");
  check(counter_downstream.size(), sp.counter_outputs.size(), "counter outputs");
  check(counter_input_names.size(), sp.counter_inputs.size(), "counter inputs");

  Element element;
  element.cell = sub;
  std::vector<std::string> in_nets;
  for (auto& w : inputs) in_nets.push_back(take(w));
  std::vector<std::string> down_nets;
  for (auto& cw : counter_downstream) down_nets.push_back(take(cw));

  std::string base = !in_nets.empty()     ? in_nets.front()
                     : !down_nets.empty() ? down_nets.front()
                                          : sub->name();
  std::vector<std::string> out_nets;
  for (const auto& requested : output_names) {
    out_nets.push_back(claim_name(requested, base));
  }
  std::vector<std::string> up_nets;
  for (const auto& requested : counter_input_names) {
    up_nets.push_back(claim_name(requested, base));
  }

  for (const auto* group : {&in_nets, &out_nets, &down_nets, &up_nets}) {
    element.pins.insert(element.pins.end(), group->begin(), group->end());
  }
  element.label = "X" + sub->name() + std::to_string(++ordinal_);
  elements_.push_back(std::move(element));

  InstanceOutputs result;
  for (auto& net : out_nets) result.outputs.push_back(make_wire(net));
  for (auto& net : up_nets) result.counter_inputs.push_back(make_counter_wire(net));
  return result;
}

void CircuitBuilder::scan_nets() const {
  std::vector<std::string> order;
  std::unordered_map<std::string, std::size_t> index;
  auto id_of = [&](const std::string& net) {
    auto [it, inserted] = index.emplace(net, order.size());
    if (inserted) order.push_back(net);
    return it->second;
  };
  std::vector<std::size_t> parent;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };

  struct Tally {
    int drivers = 0;
    int receivers = 0;
  };
  std::vector<std::pair<std::size_t, bool>> roles;  // (net id, is driver)
  for (const auto& in : ports_.inputs) roles.emplace_back(id_of(in), true);
  for (const auto& out : ports_.outputs) roles.emplace_back(id_of(out), false);
  for (const auto& co : ports_.counter_outputs) roles.emplace_back(id_of(co), false);
  for (const auto& ci : ports_.counter_inputs) roles.emplace_back(id_of(ci), true);
  for (const auto& element : elements_) {
    for (std::size_t i = 0; i < element.pins.size(); ++i) {
      roles.emplace_back(id_of(element.pins[i]), element.drives(i));
    }
  }
  for (const auto& pt : passthroughs_) {
    id_of(pt.port);
    id_of(pt.source);
  }
  parent.resize(order.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& pt : passthroughs_) {
    std::size_t a = find(index.at(pt.port));
    std::size_t b = find(index.at(pt.source));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<Tally> tally(order.size());
  for (auto [net, is_driver] : roles) {
    Tally& t = tally[find(net)];
    (is_driver ? t.drivers : t.receivers) += 1;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (find(i) != i) continue;
    const std::string& net = order[i];
    const Tally& t = tally[i];
    if (t.drivers == 0) {
      throw Error(ErrorCode::kNoDriver, "net " + net + " has no driver", net);
    }
    if (t.drivers > 1) {
      throw Error(ErrorCode::kDoubleDriver,
                  "net " + net + " has " + std::to_string(t.drivers) + " drivers",
                  net);
    }
    if (t.receivers == 0) {
      throw Error(ErrorCode::kDanglingWire, "net " + net + " has no receiver", net);
    }
    if (t.receivers > 1) {
      throw Error(ErrorCode::kMultipleReceivers,
                  "net " + net + " has " + std::to_string(t.receivers) +
                      " receivers",
                  net);
    }
  }
}

Sealed CircuitBuilder::finalize() && {
  if (finalized_ || id_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "builder was already finalized");
  }
  if (!ports_.outputs.empty() && !outputs_bound_) {
    throw Error(ErrorCode::kUnboundPorts,
                "outputs of " + name_ + " were never bound", ports_.outputs.front());
  }
  if (!ports_.counter_inputs.empty() && !counter_inputs_bound_) {
    throw Error(ErrorCode::kUnboundPorts,
                "counter inputs of " + name_ + " were never bound",
                ports_.counter_inputs.front());
  }
  if (!live_.empty()) {
    auto first = std::min_element(
        live_.begin(), live_.end(),
        [](const auto& x, const auto& y) { return x.second.first < y.second.first; });
    std::vector<std::string> all;
    for (const auto& [net, info] : live_) all.push_back(net);
    std::sort(all.begin(), all.end());
    std::string list;
    for (const auto& net : all) list += (list.empty() ? "" : ", ") + net;
    throw Error(ErrorCode::kDanglingWire,
                "unconsumed wire(s) in " + name_ + ": " + list, first->first);
  }
  scan_nets();
  finalized_ = true;

  auto sealed = std::shared_ptr<SealedCircuit>(new SealedCircuit());
  sealed->name_ = std::move(name_);
  sealed->ports_ = std::move(ports_);
  for (const auto* group :
       {&sealed->ports_.inputs, &sealed->ports_.outputs,
        &sealed->ports_.counter_outputs, &sealed->ports_.counter_inputs}) {
    sealed->header_.insert(sealed->header_.end(), group->begin(), group->end());
  }
  sealed->elements_ = std::move(elements_);
  sealed->passthroughs_ = std::move(passthroughs_);
  return sealed;
}

}  // namespace fluxwire
