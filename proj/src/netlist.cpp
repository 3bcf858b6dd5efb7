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

#include "fluxwire/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_set>

#include "text_io.hpp"

namespace fluxwire {

CellNameMap::CellNameMap() {
  for (GateKind kind : kAllGateKinds) {
    names_[static_cast<std::size_t>(kind)] =
        "THmitll_" + std::string(gate_kind_name(kind));
  }
}

void CellNameMap::set(GateKind kind, std::string name) {
  if (name.empty() ||
      std::any_of(name.begin(), name.end(),
                  [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; })) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid cell name for " + std::string(gate_kind_name(kind)));
  }
  names_[static_cast<std::size_t>(kind)] = std::move(name);
}

CellNameMap CellNameMap::parse(std::string_view text) {
  CellNameMap map;
  for (const auto& [key, value] : text_io::parse_key_values(text)) {
    auto kind = parse_gate_kind(key);
    if (!kind) throw Error(ErrorCode::kParse, "unknown gate kind " + key);
    map.set(*kind, value);
  }
  return map;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

namespace {

std::string element_cell(const Element& element, const CellNameMap& cells) {
  return element.is_gate() ? cells.cell(element.kind()) : element.sub().name();
}

std::vector<std::string> pin_names(const Element& element) {
  if (element.is_gate()) {
    auto names = gate_pin_names(element.kind());
    return {names.begin(), names.end()};
  }
  return element.sub().header();
}

}  // namespace

std::vector<std::string> to_spice(const SealedCircuit& circuit,
                                  const CellNameMap& cells) {
  std::vector<std::string> lines;
  std::string header = ".subckt " + circuit.name();
  for (const auto& port : circuit.header()) header += " " + port;
  lines.push_back(std::move(header));
  for (const auto& element : circuit.elements()) {
    std::string line = element.label;
    for (const auto& pin : element.pins) line += " " + pin;
    line += " " + element_cell(element, cells);
    lines.push_back(std::move(line));
  }
  lines.push_back(".ends");
  return lines;
}

std::vector<std::string> to_spice_hierarchy(const SealedCircuit& circuit,
                                            const CellNameMap& cells) {
  std::vector<std::string> lines;
  for (const auto& dep : circuit.dependencies()) {
    auto block = to_spice(*dep, cells);
    lines.insert(lines.end(), block.begin(), block.end());
  }
  auto top = to_spice(circuit, cells);
  lines.insert(lines.end(), top.begin(), top.end());
  return lines;
}

std::vector<std::string> to_verilog(const SealedCircuit& circuit,
                                    const CellNameMap& cells) {
  const PortNames& ports = circuit.ports();
  std::vector<std::string> decls;
  // Clock enters at counter-input ports and leaves at counter-output ports.
  for (const auto& p : ports.inputs) decls.push_back("input " + p);
  for (const auto& p : ports.outputs) decls.push_back("output " + p);
  for (const auto& p : ports.counter_outputs) decls.push_back("output " + p);
  for (const auto& p : ports.counter_inputs) decls.push_back("input " + p);

  std::vector<std::string> lines;
  std::string head = "module " + circuit.name() + "(";
  for (std::size_t i = 0; i < decls.size(); ++i) {
    head += (i == 0 ? "" : ", ") + decls[i];
  }
  head += ");";
  lines.push_back(std::move(head));

  const std::unordered_set<std::string> header(circuit.header().begin(),
                                               circuit.header().end());
  for (const auto& net : circuit.nets()) {
    if (header.count(net) == 0) lines.push_back("  wire " + net + ";");
  }
  for (const auto& pt : circuit.passthroughs()) {
    lines.push_back("  assign " + pt.port + " = " + pt.source + ";");
  }
  for (const auto& element : circuit.elements()) {
    std::string line = "  " + element_cell(element, cells) + " " + element.label + "(";
    auto names = pin_names(element);
    for (std::size_t i = 0; i < element.pins.size(); ++i) {
      line += (i == 0 ? "." : ", .") + names[i] + "(" + element.pins[i] + ")";
    }
    line += ");";
    lines.push_back(std::move(line));
  }
  lines.push_back("endmodule");
  return lines;
}

std::vector<std::string> to_verilog_hierarchy(const SealedCircuit& circuit,
                                              const CellNameMap& cells) {
  std::vector<std::string> lines;
  for (const auto& dep : circuit.dependencies()) {
    auto block = to_verilog(*dep, cells);
    lines.insert(lines.end(), block.begin(), block.end());
    lines.emplace_back();
  }
  auto top = to_verilog(circuit, cells);
  lines.insert(lines.end(), top.begin(), top.end());
  return lines;
}

std::vector<std::string> emit_verilog_cell_models(const CellNameMap& cells,
                                                  int delay_ps) {
  const std::string d = "#" + std::to_string(delay_ps);
  // Data edges are handled before the clock at the same instant by giving
  // the clock process a zero-delay yield (#0).
  auto pulse = [&](const std::string& out) {
    return "      " + d + " " + out + " = 1'b1; #1 " + out + " = 1'b0;";
  };
  std::vector<std::string> lines;
  lines.push_back("`timescale 1ps/1ps");
  lines.push_back("// Pulse-level behavioral models. A pulse is one time unit high.");
  for (GateKind kind : kAllGateKinds) {
    const std::string& cell = cells.cell(kind);
    lines.emplace_back();
    switch (kind) {
      case GateKind::kSplit:
        lines.push_back("module " + cell + "(input a, output reg q0, output reg q1);");
        lines.push_back("  initial begin q0 = 1'b0; q1 = 1'b0; end");
        lines.push_back("  always @(posedge a) fork");
        lines.push_back("    begin" + pulse("q0").substr(5) + " end");
        lines.push_back("    begin" + pulse("q1").substr(5) + " end");
        lines.push_back("  join");
        break;
      case GateKind::kBuff:
        lines.push_back("module " + cell + "(input a, output reg q);");
        lines.push_back("  initial q = 1'b0;");
        lines.push_back("  always @(posedge a) begin");
        lines.push_back(pulse("q"));
        lines.push_back("  end");
        break;
      case GateKind::kDff:
        lines.push_back("module " + cell + "(input d, input clk, output reg q);");
        lines.push_back("  reg d_seen;");
        lines.push_back("  initial begin q = 1'b0; d_seen = 1'b0; end");
        lines.push_back("  always @(posedge d) d_seen = 1'b1;");
        lines.push_back("  always @(posedge clk) begin");
        lines.push_back("    #0 if (d_seen) begin");
        lines.push_back("      d_seen = 1'b0;");
        lines.push_back(pulse("q"));
        lines.push_back("    end");
        lines.push_back("  end");
        break;
      case GateKind::kAnd2:
      case GateKind::kOr2:
      case GateKind::kXor: {
        const char* cond = kind == GateKind::kAnd2  ? "a_seen && b_seen"
                           : kind == GateKind::kOr2 ? "a_seen || b_seen"
                                                    : "a_seen != b_seen";
        lines.push_back("module " + cell + "(input a, input b, input clk, output reg q);");
        lines.push_back("  reg a_seen, b_seen, fire;");
        lines.push_back("  initial begin q = 1'b0; a_seen = 1'b0; b_seen = 1'b0; end");
        lines.push_back("  always @(posedge a) a_seen = 1'b1;");
        lines.push_back("  always @(posedge b) b_seen = 1'b1;");
        lines.push_back("  always @(posedge clk) begin");
        lines.push_back("    #0 fire = " + std::string(cond) + ";");
        lines.push_back("    a_seen = 1'b0; b_seen = 1'b0;");
        lines.push_back("    if (fire) begin");
        lines.push_back(pulse("q"));
        lines.push_back("    end");
        lines.push_back("  end");
        break;
      }
      case GateKind::kNot:
        lines.push_back("module " + cell + "(input a, input clk, output reg q);");
        lines.push_back("  reg a_seen, fire;");
        lines.push_back("  initial begin q = 1'b0; a_seen = 1'b0; end");
        lines.push_back("  always @(posedge a) a_seen = 1'b1;");
        lines.push_back("  always @(posedge clk) begin");
        lines.push_back("    #0 fire = !a_seen;");
        lines.push_back("    a_seen = 1'b0;");
        lines.push_back("    if (fire) begin");
        lines.push_back(pulse("q"));
        lines.push_back("    end");
        lines.push_back("  end");
        break;
      case GateKind::kNdro:
        lines.push_back("module " + cell + "(input set, input reset, input read, output reg q);");
        lines.push_back("  reg state;");
        lines.push_back("  initial begin q = 1'b0; state = 1'b0; end");
        lines.push_back("  always @(posedge set) state = 1'b1;");
        lines.push_back("  always @(posedge reset) #0 state = 1'b0;");
        lines.push_back("  always @(posedge read) begin");
        lines.push_back("    #0 #0 if (state) begin");
        lines.push_back(pulse("q"));
        lines.push_back("    end");
        lines.push_back("  end");
        break;
    }
    lines.push_back("endmodule");
  }
  return lines;
}

}  // namespace fluxwire
