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

// fluxwire command-line front end. Uses only the C interface.
//
// Exit codes: 0 success, 1 reference mismatch, 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "fluxwire/fluxwire.h"

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(fw_status status) {
  if (status == FW_OK) return;
  std::string message = std::string(fw_status_name(status)) + ": " + fw_last_error();
  const std::string net = fw_last_error_net();
  if (!net.empty() && message.find(net) == std::string::npos) message += " (net " + net + ")";
  throw Failure(message);
}

struct CircuitDeleter {
  void operator()(fw_circuit* c) const { fw_circuit_free(c); }
};
using CircuitPtr = std::unique_ptr<fw_circuit, CircuitDeleter>;

struct StringDeleter {
  void operator()(char* s) const { fw_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure("cannot write " + path);
}

// Blank-line separated word streams -> one space separated line per stream.
std::string inline_streams(const std::string& text) {
  std::istringstream in(text);
  std::string out;
  std::string line;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out += current + "\n";
    current.clear();
  };
  while (std::getline(in, line)) {
    if (line.empty()) {
      flush();
    } else {
      current += (current.empty() ? "" : " ") + line;
    }
  }
  flush();
  return out;
}

std::optional<std::string> read_optional(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return read_file(path);
}

fw_clocking clocking_of(const std::string& name) {
  return name == "counterflow" ? FW_COUNTERFLOW : FW_CONCURRENT;
}

CircuitPtr builtin(const std::string& id, const std::string& clocking) {
  fw_circuit* c = nullptr;
  check(fw_builtin(id.c_str(), clocking_of(clocking), &c));
  return CircuitPtr(c);
}

struct Options {
  std::string id;
  std::string format = "spice";
  std::string out;
  std::string cells;
  std::string delays;
  std::string stimulus;
  std::string watch;
  std::int64_t horizon = 100000;
  std::string clocking = "concurrent";
  std::uint64_t seed = 1;
  std::string words;
  std::size_t random = 0;
  int feedback = -1;
  bool models = false;
  int width = 4;
  std::uint32_t poly = 0x13;
};

int cmd_emit(const Options& o) {
  CircuitPtr c = builtin(o.id, o.clocking);
  auto cells = read_optional(o.cells);
  const char* cell_map = cells ? cells->c_str() : nullptr;
  fw_stats stats{};
  check(fw_circuit_stats(c.get(), &stats));

  auto render = [&](fw_format format) {
    char* text = nullptr;
    check(fw_emit(c.get(), format, 1, cell_map, &text));
    std::string s = OwnedString(text).get();
    if (format == FW_VERILOG && o.models) {
      check(fw_emit_cell_models(cell_map, &text));
      s += OwnedString(text).get();
    }
    return s;
  };
  std::vector<std::pair<std::string, std::string>> files;  // path, text
  if (o.format == "spice" || o.format == "both") {
    files.emplace_back(o.format == "both" ? o.out + ".sp" : o.out, render(FW_SPICE));
  }
  if (o.format == "verilog" || o.format == "both") {
    files.emplace_back(o.format == "both" ? o.out + ".v" : o.out, render(FW_VERILOG));
  }
  for (const auto& [path, text] : files) {
    if (o.out.empty()) {
      std::cout << text;
    } else {
      write_file(path, text);
      std::cerr << "wrote " << path << "\n";
    }
  }
  std::cerr << fw_circuit_name(c.get()) << ": " << stats.gates << " gates, " << stats.nets
            << " nets (" << stats.auto_named << " auto-named), " << stats.subcircuits
            << " subcircuit definitions\n";
  return 0;
}

int cmd_sim(const Options& o) {
  CircuitPtr c = builtin(o.id, o.clocking);
  const std::string stimulus = o.stimulus.empty() ? std::string() : read_file(o.stimulus);
  auto delays = read_optional(o.delays);
  char* trace = nullptr;
  std::size_t pulses = 0;
  std::size_t diagnostics = 0;
  check(fw_simulate(c.get(), stimulus.c_str(), delays ? delays->c_str() : nullptr, o.horizon,
                    o.watch.empty() ? nullptr : o.watch.c_str(), &trace, &pulses, &diagnostics));
  OwnedString owned(trace);
  if (o.out.empty()) {
    std::cout << owned.get();
  } else {
    write_file(o.out, owned.get());
  }
  std::cerr << pulses << " pulses recorded";
  if (diagnostics > 0) std::cerr << ", " << diagnostics << " saturation diagnostics";
  std::cerr << "\n";
  return 0;
}

int cmd_gf_table(const Options& o) {
  char* text = nullptr;
  check(fw_gf_table(o.width, o.poly, &text));
  std::cout << OwnedString(text).get();
  return 0;
}

int cmd_rs_encode(const Options& o) {
  const std::string messages = read_file(o.words);
  char* text = nullptr;
  check(fw_rs_encode(messages.c_str(), &text));
  std::cout << inline_streams(OwnedString(text).get());
  return 0;
}

int cmd_rs_run(const Options& o) {
  auto delays = read_optional(o.delays);
  fw_run_options options{clocking_of(o.clocking), o.feedback,
                         delays ? delays->c_str() : nullptr};
  if (o.random > 0) {
    std::size_t mismatches = 0;
    check(fw_rs_random_check(o.random, o.seed, &options, &mismatches));
    std::cout << o.random << " random batches (seed " << o.seed << "), " << mismatches
              << " mismatching streams\n"
              << (mismatches == 0 ? "MATCH" : "MISMATCH") << "\n";
    return mismatches == 0 ? 0 : kMismatch;
  }
  if (o.words.empty()) throw Failure("rs-run needs a message file or --random");
  const std::string messages = read_file(o.words);
  char* text = nullptr;
  int match = 0;
  check(fw_rs_run(messages.c_str(), &options, &text, &match));
  std::cout << inline_streams(OwnedString(text).get()) << (match != 0 ? "MATCH" : "MISMATCH") << "\n";
  return match != 0 ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fluxwire: SFQ circuit generation, netlists and pulse simulation"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  const std::string ids = "half-adder, counterflow-demo, delay:<n>, delay-demo, rs-encoder";
  auto* emit = app.add_subcommand("emit", "Write the netlist of a built-in circuit");
  emit->add_option("circuit", o.id, ids)->required();
  emit->add_option("--format", o.format)->check(CLI::IsMember({"spice", "verilog", "both"}));
  emit->add_option("--out", o.out, "Output path (prefix for --format both)");
  emit->add_option("--cells", o.cells, "Cell-name map, KEY=VALUE lines")->check(CLI::ExistingFile);
  emit->add_option("--clocking", o.clocking)
      ->check(CLI::IsMember({"concurrent", "counterflow"}));
  emit->add_flag("--with-models", o.models, "Append behavioral Verilog cell models");

  auto* sim = app.add_subcommand("sim", "Pulse-simulate a built-in circuit");
  sim->add_option("circuit", o.id, ids)->required();
  sim->add_option("--stimulus", o.stimulus, "Stimulus file")->check(CLI::ExistingFile);
  sim->add_option("--watch", o.watch, "Comma-separated nets (default: outputs)");
  sim->add_option("--horizon", o.horizon, "Simulation end, ps")->check(CLI::NonNegativeNumber);
  sim->add_option("--delays", o.delays, "Gate delays, KEY=VALUE lines")->check(CLI::ExistingFile);
  sim->add_option("--out", o.out, "Trace file (default: stdout)");
  sim->add_option("--clocking", o.clocking)
      ->check(CLI::IsMember({"concurrent", "counterflow"}));

  auto* table = app.add_subcommand("gf-table", "Print the elements of GF(2^a)");
  table->add_option("--width", o.width, "Field width a")->check(CLI::Range(2, 8));
  table->add_option("--poly", o.poly, "Primitive polynomial, bit i = x^i");

  auto* encode = app.add_subcommand("rs-encode", "RS(12,8) parity of message streams");
  encode->add_option("messages", o.words, "Word file")->required()->check(CLI::ExistingFile);

  auto* run = app.add_subcommand("rs-run", "Simulate the encoder circuit and compare");
  run->add_option("messages", o.words, "Word file")->check(CLI::ExistingFile);
  run->add_option("--random", o.random, "Check N random batches instead");
  run->add_option("--clocking", o.clocking)
      ->check(CLI::IsMember({"concurrent", "counterflow"}));
  run->add_option("--delays", o.delays, "Gate delays, KEY=VALUE lines")->check(CLI::ExistingFile);
  run->add_option("--feedback-buffs", o.feedback, "Counterflow feedback delay in BUFFs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*emit) return cmd_emit(o);
    if (*sim) return cmd_sim(o);
    if (*table) return cmd_gf_table(o);
    if (*encode) return cmd_rs_encode(o);
    if (*run) return cmd_rs_run(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
