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

#ifndef FLUXWIRE_NETLIST_HPP_
#define FLUXWIRE_NETLIST_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fluxwire/circuit.hpp"

namespace fluxwire {

// Gate kind -> library cell name. Defaults to the THmitll cell names.
class CellNameMap {
 public:
  CellNameMap();

  const std::string& cell(GateKind kind) const {
    return names_[static_cast<std::size_t>(kind)];
  }
  // Throws kInvalidArgument for empty or whitespace-containing names.
  void set(GateKind kind, std::string name);

  // "KEY=VALUE" lines, KEY one of AND2, OR2, XOR, NOT, DFF, BUFF, SPLIT,
  // NDRO. Blank lines and '#' comments are ignored. Unlisted kinds keep
  // their defaults.
  static CellNameMap parse(std::string_view text);

 private:
  std::array<std::string, 8> names_;
};

// One .subckt block for `circuit` only.
std::vector<std::string> to_spice(const SealedCircuit& circuit,
                                  const CellNameMap& cells = {});
// Every subcircuit definition (dependencies first) followed by `circuit`.
std::vector<std::string> to_spice_hierarchy(const SealedCircuit& circuit,
                                            const CellNameMap& cells = {});

std::vector<std::string> to_verilog(const SealedCircuit& circuit,
                                    const CellNameMap& cells = {});
std::vector<std::string> to_verilog_hierarchy(const SealedCircuit& circuit,
                                              const CellNameMap& cells = {});

// Behavioral Verilog models for all eight cells. A pulse is a level that is
// high for one time unit; clocked cells latch input pulses and evaluate on
// the clock pulse, NDRO keeps its state across reads.
std::vector<std::string> emit_verilog_cell_models(const CellNameMap& cells = {},
                                                  int delay_ps = 5);

// Lines joined with '\n', with a trailing newline.
std::string join_lines(const std::vector<std::string>& lines);

}  // namespace fluxwire

#endif  // FLUXWIRE_NETLIST_HPP_
