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

#include "fluxwire/pulse_sim.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "text_io.hpp"

namespace fluxwire {

namespace {

class Flattener {
 public:
  NetId make(std::string name) {
    NetId id = static_cast<NetId>(names_.size());
    names_.push_back(std::move(name));
    parent_.push_back(id);
    return id;
  }

  NetId find(NetId i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  void unite(NetId a, NetId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  void expand(const SealedCircuit& circuit, const std::string& prefix,
              std::unordered_map<std::string, NetId>& scope) {
    if (!active_.insert(&circuit).second) {
      throw Error(ErrorCode::kCyclicHierarchy,
                  "circuit " + circuit.name() + " instantiates itself");
    }
    auto resolve = [&](const std::string& net) {
      auto it = scope.find(net);
      if (it != scope.end()) return it->second;
      NetId id = make(prefix + net);
      scope.emplace(net, id);
      return id;
    };
    for (const auto& element : circuit.elements()) {
      std::vector<NetId> ids;
      ids.reserve(element.pins.size());
      for (const auto& pin : element.pins) ids.push_back(resolve(pin));
      if (element.is_gate()) {
        gates_.push_back({element.kind(), prefix + element.label, std::move(ids)});
        continue;
      }
      const SealedCircuit& sub = element.sub();
      std::unordered_map<std::string, NetId> inner;
      for (std::size_t i = 0; i < sub.header().size(); ++i) {
        inner.emplace(sub.header()[i], ids[i]);
      }
      expand(sub, prefix + element.label + "/", inner);
    }
    for (const auto& pt : circuit.passthroughs()) {
      unite(resolve(pt.port), resolve(pt.source));
    }
    active_.erase(&circuit);
  }

  std::vector<std::string> names_;
  std::vector<NetId> parent_;
  std::vector<FlatGate> gates_;
  std::unordered_set<const SealedCircuit*> active_;
};

int pin_priority(GateKind kind, std::size_t pin) {
  if (kind == GateKind::kNdro) return static_cast<int>(pin);
  auto clock = gate_clock_pin(kind);
  return clock && *clock == pin ? 1 : 0;
}

}  // namespace

std::optional<NetId> FlatGraph::find_net(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<PinRef> FlatGraph::driver(NetId net) const { return drivers_.at(net); }
std::optional<PinRef> FlatGraph::receiver(NetId net) const { return receivers_.at(net); }

bool FlatGraph::is_input_port(NetId net) const {
  return std::find(input_ports_.begin(), input_ports_.end(), net) !=
         input_ports_.end();
}

FlatGraph flatten(const SealedCircuit& circuit) {
  Flattener f;
  std::unordered_map<std::string, NetId> top;
  for (const auto& port : circuit.header()) top.emplace(port, f.make(port));
  f.expand(circuit, "", top);

  // Renumber union-find roots densely; roots are the first-created ids, so
  // outer names win over inner ones.
  std::vector<NetId> dense(f.names_.size(), 0);
  FlatGraph g;
  for (NetId i = 0; i < f.names_.size(); ++i) {
    if (f.find(i) == i) {
      dense[i] = static_cast<NetId>(g.net_names_.size());
      g.net_names_.push_back(f.names_[i]);
    }
  }
  for (NetId i = 0; i < f.names_.size(); ++i) {
    g.index_.emplace(f.names_[i], dense[f.find(i)]);
  }
  g.gates_ = std::move(f.gates_);
  g.drivers_.assign(g.net_names_.size(), std::nullopt);
  g.receivers_.assign(g.net_names_.size(), std::nullopt);
  for (std::uint32_t gi = 0; gi < g.gates_.size(); ++gi) {
    FlatGate& gate = g.gates_[gi];
    const std::size_t outputs = gate_output_count(gate.kind);
    for (std::uint32_t p = 0; p < gate.pins.size(); ++p) {
      NetId net = dense[f.find(gate.pins[p])];
      gate.pins[p] = net;
      auto& slot = p + outputs >= gate.pins.size() ? g.drivers_[net] : g.receivers_[net];
      if (slot) {
        throw Error(ErrorCode::kDoubleDriver,
                    "flattened net " + g.net_names_[net] + " has two " +
                        (p + outputs >= gate.pins.size() ? "drivers" : "receivers"),
                    g.net_names_[net]);
      }
      slot = PinRef{gi, p};
    }
  }
  const PortNames& ports = circuit.ports();
  for (const auto* group : {&ports.inputs, &ports.counter_inputs}) {
    for (const auto& p : *group) g.input_ports_.push_back(g.index_.at(p));
  }
  for (const auto* group : {&ports.outputs, &ports.counter_outputs}) {
    for (const auto& p : *group) g.output_ports_.push_back(g.index_.at(p));
  }
  return g;
}

void DelayConfig::set(GateKind kind, int ps) {
  if (ps < 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "delay for " + std::string(gate_kind_name(kind)) + " must be >= 1 ps");
  }
  delays_[static_cast<std::size_t>(kind)] = ps;
}

DelayConfig DelayConfig::parse(std::string_view text) {
  DelayConfig config;
  for (const auto& [key, value] : text_io::parse_key_values(text)) {
    auto kind = parse_gate_kind(key);
    if (!kind) throw Error(ErrorCode::kParse, "unknown gate kind " + key);
    config.set(*kind, static_cast<int>(text_io::parse_int(value, key)));
  }
  return config;
}

std::size_t SimTrace::count(std::string_view net) const {
  return static_cast<std::size_t>(std::count_if(
      events.begin(), events.end(), [&](const PulseEvent& e) { return e.net == net; }));
}

std::vector<std::int64_t> SimTrace::times(std::string_view net) const {
  std::vector<std::int64_t> out;
  for (const auto& e : events) {
    if (e.net == net) out.push_back(e.time);
  }
  return out;
}

SimTrace simulate(const FlatGraph& graph, std::span<const PulseEvent> stimulus,
                  const DelayConfig& delays, std::int64_t horizon,
                  const std::vector<std::string>& watched) {
  const std::size_t net_count = graph.net_names().size();
  std::vector<std::vector<std::string>> watch_names(net_count);
  if (watched.empty()) {
    for (NetId id : graph.output_ports()) {
      watch_names[id].push_back(graph.net_name(id));
    }
  } else {
    for (const auto& name : watched) {
      auto id = graph.find_net(name);
      if (!id) throw Error(ErrorCode::kUnknownNet, "no net named " + name, name);
      watch_names[*id].push_back(name);
    }
  }

  struct Event {
    std::int64_t time;
    int priority;
    std::uint64_t seq;
    NetId net;
    bool operator>(const Event& o) const {
      if (time != o.time) return time > o.time;
      if (priority != o.priority) return priority > o.priority;
      return seq > o.seq;
    }
  };
  std::priority_queue<Event, std::vector<Event>, std::greater<>> queue;
  std::uint64_t seq = 0;
  auto schedule = [&](std::int64_t time, NetId net) {
    if (time > horizon) return;
    int priority = 0;
    if (auto r = graph.receiver(net)) {
      priority = pin_priority(graph.gates()[r->gate].kind, r->pin);
    }
    queue.push({time, priority, seq++, net});
  };

  for (const auto& pulse : stimulus) {
    auto id = graph.find_net(pulse.net);
    if (!id || !graph.is_input_port(*id)) {
      throw Error(ErrorCode::kUnknownNet,
                  "stimulus net " + pulse.net + " is not an input port", pulse.net);
    }
    if (pulse.time < 0 || pulse.time > horizon) {
      throw Error(ErrorCode::kInvalidArgument,
                  "stimulus time " + std::to_string(pulse.time) + " outside [0, horizon]");
    }
    schedule(pulse.time, *id);
  }

  // Per gate: bit 0 = a/d seen, bit 1 = b seen, bit 2 = NDRO state.
  std::vector<std::uint8_t> state(graph.gates().size(), 0);
  SimTrace trace;
  while (!queue.empty()) {
    const Event ev = queue.top();
    queue.pop();
    for (const auto& name : watch_names[ev.net]) {
      trace.events.push_back({ev.time, name});
    }
    auto r = graph.receiver(ev.net);
    if (!r) continue;
    const FlatGate& gate = graph.gates()[r->gate];
    std::uint8_t& s = state[r->gate];
    const std::int64_t out_time = ev.time + delays.delay(gate.kind);
    auto emit = [&](std::size_t pin) { schedule(out_time, gate.pins[pin]); };
    auto latch = [&](std::uint8_t bit) {
      if ((s & bit) != 0) {
        trace.diagnostics.push_back(
            "t=" + std::to_string(ev.time) + " " + gate.path + " pin " +
            std::string(gate_pin_names(gate.kind)[r->pin]) + " saturated");
      }
      s |= bit;
    };
    switch (gate.kind) {
      case GateKind::kSplit:
        emit(1);
        emit(2);
        break;
      case GateKind::kBuff:
        emit(1);
        break;
      case GateKind::kDff:
      case GateKind::kNot:
        if (r->pin == 0) {
          latch(1);
        } else {
          const bool seen = (s & 1) != 0;
          s = 0;
          if (seen == (gate.kind == GateKind::kDff)) emit(2);
        }
        break;
      case GateKind::kAnd2:
      case GateKind::kOr2:
      case GateKind::kXor:
        if (r->pin < 2) {
          latch(static_cast<std::uint8_t>(1u << r->pin));
        } else {
          const bool a = (s & 1) != 0;
          const bool b = (s & 2) != 0;
          s = 0;
          const bool fire = gate.kind == GateKind::kAnd2  ? (a && b)
                            : gate.kind == GateKind::kOr2 ? (a || b)
                                                          : (a != b);
          if (fire) emit(3);
        }
        break;
      case GateKind::kNdro:
        if (r->pin == 0) {
          s = 4;
        } else if (r->pin == 1) {
          s = 0;
        } else if (s != 0) {
          emit(3);
        }
        break;
    }
  }
  std::sort(trace.events.begin(), trace.events.end());
  return trace;
}

std::vector<PulseEvent> clock_train(const std::string& net, std::int64_t start,
                                    std::int64_t period, std::int64_t count) {
  if (period < 1 || count < 0 || start < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "clock train needs start >= 0, period >= 1 and count >= 0");
  }
  std::vector<PulseEvent> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.push_back({start + i * period, net});
  return out;
}

std::vector<std::uint32_t> decode_words(const SimTrace& trace,
                                        const std::vector<std::string>& bit_nets,
                                        const std::vector<std::int64_t>& clock_times,
                                        std::int64_t window) {
  if (window < 1) throw Error(ErrorCode::kInvalidArgument, "window must be >= 1 ps");
  for (std::size_t i = 1; i < clock_times.size(); ++i) {
    if (clock_times[i] < clock_times[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "clock times must be ascending");
    }
    if (clock_times[i] < clock_times[i - 1] + window) {
      throw Error(ErrorCode::kAmbiguousDecode,
                  "decode windows " + std::to_string(i - 1) + " and " +
                      std::to_string(i) + " overlap");
    }
  }
  std::vector<std::uint32_t> words(clock_times.size(), 0);
  for (std::size_t bit = 0; bit < bit_nets.size(); ++bit) {
    for (std::int64_t t : trace.times(bit_nets[bit])) {
      auto it = std::upper_bound(clock_times.begin(), clock_times.end(), t);
      if (it == clock_times.begin()) continue;
      std::size_t i = static_cast<std::size_t>(it - clock_times.begin()) - 1;
      if (t < clock_times[i] + window) words[i] |= 1u << bit;
    }
  }
  return words;
}

std::vector<PulseEvent> parse_stimulus(std::string_view text) {
  std::vector<PulseEvent> out;
  std::size_t line_no = 0;
  for (std::string_view line : text_io::lines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto f = text_io::fields(line);
    if (f.empty()) continue;
    const std::string where = "stimulus line " + std::to_string(line_no);
    if (f[0] == "pulse" && f.size() == 3) {
      out.push_back({text_io::parse_int(f[2], where), std::string(f[1])});
    } else if (f[0] == "clock" && f.size() == 5) {
      auto train = clock_train(std::string(f[1]), text_io::parse_int(f[2], where),
                               text_io::parse_int(f[3], where),
                               text_io::parse_int(f[4], where));
      out.insert(out.end(), train.begin(), train.end());
    } else {
      throw Error(ErrorCode::kParse, "malformed " + where + ": '" + std::string(line) + "'");
    }
  }
  return out;
}

std::string format_trace(const SimTrace& trace) {
  std::string out;
  for (const auto& e : trace.events) {
    out += std::to_string(e.time) + "\t" + e.net + "\n";
  }
  return out;
}

}  // namespace fluxwire
