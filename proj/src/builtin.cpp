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

#include "fluxwire/builtin.hpp"

#include <charconv>

namespace fluxwire {

TypedSealed<3, 2> half_adder() {
  auto [circuit, in, loops, counters] =
      Circuit<3, 2>::create("HalfAdder", {"a", "b", "clk"}, {"c", "s"});
  auto [a, b, clk] = std::move(in);
  auto [clk1, clk2] = circuit.split(std::move(clk));
  auto [a1, a2] = circuit.split(std::move(a));
  auto [b1, b2] = circuit.split(std::move(b));
  Wire c = circuit.and_(std::move(a1), std::move(b1), std::move(clk1), "c");
  Wire s = circuit.xor_(std::move(a2), std::move(b2), std::move(clk2), "s");
  circuit.set_outputs({std::move(c), std::move(s)});
  return std::move(circuit).finalize();
}

TypedSealed<1, 1, 1, 1, 1> counterflow_demo() {
  auto [c, in, loops, counters] = Circuit<1, 1, 1, 1, 1>::create(
      "Advanced", {"din"}, {"dout"}, {"loop0"}, {"clkout"}, {"clkin"});
  auto [din] = std::move(in);
  auto [loop0] = std::move(loops);
  auto [clkout] = std::move(counters);

  auto [clk, clk0] = c.counter_split(std::move(clkout));
  Wire d = c.or_(std::move(din), std::move(loop0), std::move(clk0));
  auto [clk_b, clk1] = c.counter_split(std::move(clk));
  d = c.dff(std::move(d), std::move(clk1));
  auto [clkin, clk2] = c.counter_split(std::move(clk_b), "clkin");
  d = c.dff(std::move(d), std::move(clk2));
  auto [dout, lower] = c.split(std::move(d), "dout", "loop0");
  c.set_outputs({std::move(dout)});
  c.set_loops({std::move(lower)});
  c.set_counter_inputs({std::move(clkin)});
  return std::move(c).finalize();
}

TypedSealed<1, 1> delay_circuit(unsigned n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "delay length must be >= 1");
  auto [c, in, loops, counters] =
      Circuit<1, 1>::create("delay" + std::to_string(n), {"a"}, {"q"});
  auto [a] = std::move(in);
  for (unsigned i = 0; i < n; ++i) {
    a = c.buff(std::move(a), i == n - 1 ? OptName("q") : std::nullopt);
  }
  c.set_outputs({std::move(a)});
  return std::move(c).finalize();
}

TypedSealed<2, 1> delay_demo() {
  const auto delay5 = delay_circuit(5);
  auto [c, in, loops, counters] = Circuit<2, 1>::create("main", {"din", "clk"}, {"dout"});
  auto [d, clk] = std::move(in);
  auto [late, none] = c.subcircuit(delay5, {std::move(clk)}, {});
  auto [clk_a, clk1] = c.split(std::move(late[0]));
  d = c.dff(std::move(d), std::move(clk1));
  auto [later, none2] = c.subcircuit(delay5, {std::move(clk_a)}, {});
  d = c.dff(std::move(d), std::move(later[0]), "dout");
  c.set_outputs({std::move(d)});
  return std::move(c).finalize();
}

Sealed builtin_circuit(std::string_view id, Clocking clocking) {
  if (id == "half-adder") return half_adder().get();
  if (id == "counterflow-demo") return counterflow_demo().get();
  if (id == "delay-demo") return delay_demo().get();
  if (id == "rs-encoder") {
    EncoderConfig cfg;
    cfg.clocking = clocking;
    return build_encoder(cfg);
  }
  if (id.starts_with("delay:")) {
    std::string_view digits = id.substr(6);
    unsigned n = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) {
      return delay_circuit(n).get();
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown circuit id " + std::string(id));
}

std::vector<std::string> builtin_ids() {
  return {"half-adder", "counterflow-demo", "delay:<n>", "delay-demo", "rs-encoder"};
}

}  // namespace fluxwire
