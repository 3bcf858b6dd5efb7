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

#ifndef FLUXWIRE_ANALYSIS_HPP_
#define FLUXWIRE_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fluxwire/circuit.hpp"
#include "fluxwire/pulse_sim.hpp"

namespace fluxwire {

struct NetStats {
  std::size_t nets = 0;
  std::size_t auto_named = 0;
  // Net names carried by more than one driver pin.
  std::size_t multiply_driven = 0;
  // Nets without any receiver (pin or output port).
  std::size_t dangling = 0;

  double auto_fraction() const {
    return nets == 0 ? 0.0 : static_cast<double>(auto_named) / static_cast<double>(nets);
  }
};

// Counts over the circuit and every distinct subcircuit definition it uses,
// i.e. the nets written to a hierarchical netlist.
NetStats net_stats(const SealedCircuit& circuit);

struct ClockSink {
  std::uint32_t gate;
  std::uint32_t pin;
  int depth;  // SPLIT/BUFF stages between the root and the pin
  std::int64_t delay_ps;
};

// Gate pins reached from `root` through SPLIT/BUFF fan-out only.
std::vector<ClockSink> clock_sinks(const FlatGraph& graph, NetId root,
                                   const DelayConfig& delays = {});

struct DepthRange {
  int min = 0;
  int max = 0;
};

// Number of clocked gates on data paths from input ports to output ports
// (clock pins are not followed). Empty when no input reaches an output.
std::optional<DepthRange> clocked_path_depth(const FlatGraph& graph);

}  // namespace fluxwire

#endif  // FLUXWIRE_ANALYSIS_HPP_
