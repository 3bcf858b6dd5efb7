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

#include "fluxwire/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

namespace fluxwire {

namespace {

void add_stats(const SealedCircuit& circuit, NetStats& stats) {
  std::unordered_map<std::string, std::pair<int, int>> tally;  // drivers, receivers
  const PortNames& ports = circuit.ports();
  for (const auto& p : ports.inputs) tally[p].first++;
  for (const auto& p : ports.counter_inputs) tally[p].first++;
  for (const auto& p : ports.outputs) tally[p].second++;
  for (const auto& p : ports.counter_outputs) tally[p].second++;
  for (const auto& e : circuit.elements()) {
    for (std::size_t i = 0; i < e.pins.size(); ++i) {
      auto& t = tally[e.pins[i]];
      (e.drives(i) ? t.first : t.second)++;
    }
  }
  for (const auto& pt : circuit.passthroughs()) {
    // The port side is fed by its source.
    tally[pt.source].second++;
    tally[pt.port].first++;
  }
  for (const auto& net : circuit.nets()) {
    const auto& t = tally[net];
    stats.nets++;
    if (!net.empty() && net.front() == '_') stats.auto_named++;
    if (t.first > 1) stats.multiply_driven++;
    if (t.second == 0) stats.dangling++;
  }
}

}  // namespace

NetStats net_stats(const SealedCircuit& circuit) {
  NetStats stats;
  for (const auto& dep : circuit.dependencies()) add_stats(*dep, stats);
  add_stats(circuit, stats);
  return stats;
}

std::vector<ClockSink> clock_sinks(const FlatGraph& graph, NetId root,
                                   const DelayConfig& delays) {
  struct Item {
    NetId net;
    int depth;
    std::int64_t delay;
  };
  std::vector<ClockSink> sinks;
  std::deque<Item> queue{{root, 0, 0}};
  while (!queue.empty()) {
    Item item = queue.front();
    queue.pop_front();
    auto r = graph.receiver(item.net);
    if (!r) continue;
    const FlatGate& gate = graph.gates()[r->gate];
    const std::int64_t next = item.delay + delays.delay(gate.kind);
    if (gate.kind == GateKind::kSplit) {
      queue.push_back({gate.pins[1], item.depth + 1, next});
      queue.push_back({gate.pins[2], item.depth + 1, next});
    } else if (gate.kind == GateKind::kBuff) {
      queue.push_back({gate.pins[1], item.depth + 1, next});
    } else {
      sinks.push_back({r->gate, r->pin, item.depth, item.delay});
    }
  }
  return sinks;
}

std::optional<DepthRange> clocked_path_depth(const FlatGraph& graph) {
  const std::size_t n = graph.net_names().size();
  std::vector<bool> is_output(n, false);
  for (NetId id : graph.output_ports()) is_output[id] = true;
  std::vector<std::optional<DepthRange>> memo(n);
  std::vector<int> state(n, 0);  // 0 new, 1 visiting, 2 done

  std::function<std::optional<DepthRange>(NetId)> visit =
      [&](NetId net) -> std::optional<DepthRange> {
    if (state[net] == 2) return memo[net];
    if (state[net] == 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "data path through " + graph.net_name(net) + " is cyclic");
    }
    state[net] = 1;
    std::optional<DepthRange> result;
    auto merge = [&](DepthRange d) {
      if (!result) {
        result = d;
      } else {
        result->min = std::min(result->min, d.min);
        result->max = std::max(result->max, d.max);
      }
    };
    if (is_output[net]) merge({0, 0});
    if (auto r = graph.receiver(net)) {
      const FlatGate& gate = graph.gates()[r->gate];
      auto clock = gate_clock_pin(gate.kind);
      const bool clock_pin = clock && *clock == r->pin && gate.kind != GateKind::kNdro;
      if (!clock_pin) {
        const int step = gate_is_clocked(gate.kind) ? 1 : 0;
        const std::size_t outs = gate_output_count(gate.kind);
        for (std::size_t p = gate.pins.size() - outs; p < gate.pins.size(); ++p) {
          if (auto d = visit(gate.pins[p])) merge({d->min + step, d->max + step});
        }
      }
    }
    state[net] = 2;
    memo[net] = result;
    return result;
  };

  std::optional<DepthRange> total;
  for (NetId in : graph.input_ports()) {
    if (auto d = visit(in)) {
      if (!total) {
        total = d;
      } else {
        total->min = std::min(total->min, d->min);
        total->max = std::max(total->max, d->max);
      }
    }
  }
  return total;
}

}  // namespace fluxwire
