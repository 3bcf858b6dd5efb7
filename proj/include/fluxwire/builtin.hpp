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

#ifndef FLUXWIRE_BUILTIN_HPP_
#define FLUXWIRE_BUILTIN_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "fluxwire/circuit.hpp"
#include "fluxwire/rs_circuit.hpp"

namespace fluxwire {

// a, b, clk -> c = a AND b, s = a XOR b.
TypedSealed<3, 2> half_adder();

// OR of din and its own delayed output, clocked by a counter-flow line:
// din -> dout with loop0, clkin -> clkout.
TypedSealed<1, 1, 1, 1, 1> counterflow_demo();

// Chain of n BUFFs from a to q. Throws kInvalidArgument for n == 0.
TypedSealed<1, 1> delay_circuit(unsigned n);

// Two DFFs whose clock passes through delay5 instances; the delay5
// definition is a dependency of the result.
TypedSealed<2, 1> delay_demo();

// "half-adder", "counterflow-demo", "delay:<n>", "delay-demo", "rs-encoder".
// `clocking` only affects rs-encoder. Throws kInvalidArgument on unknown ids.
Sealed builtin_circuit(std::string_view id, Clocking clocking = Clocking::kConcurrent);
std::vector<std::string> builtin_ids();

}  // namespace fluxwire

#endif  // FLUXWIRE_BUILTIN_HPP_
