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

#ifndef FLUXWIRE_FLUXWIRE_H_
#define FLUXWIRE_FLUXWIRE_H_

/* C interface to libfluxwire.
 *
 * Every function returns an fw_status; FW_OK is zero. On failure the message
 * and offending net of the last error on the calling thread are available
 * from fw_last_error() and fw_last_error_net(). Strings returned through
 * char** out-parameters are heap allocated and released with fw_string_free.
 *
 * Wire handles are only meaningful together with the circuit that issued
 * them. A handle keeps naming its net after it has been consumed, so a second
 * use reports FW_ALREADY_CONSUMED with that net.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FW_API __declspec(dllexport)
#else
#define FW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fw_status {
  FW_OK = 0,
  FW_ALREADY_CONSUMED = 1,
  FW_FOREIGN_WIRE = 2,
  FW_NAME_COLLISION = 3,
  FW_RESERVED_NAME = 4,
  FW_INVALID_NAME = 5,
  FW_ARITY_MISMATCH = 6,
  FW_ALREADY_BOUND = 7,
  FW_UNBOUND_PORTS = 8,
  FW_DANGLING_WIRE = 9,
  FW_NO_DRIVER = 10,
  FW_DOUBLE_DRIVER = 11,
  FW_MULTIPLE_RECEIVERS = 12,
  FW_NOT_SEALED = 13,
  FW_CYCLIC_HIERARCHY = 14,
  FW_UNKNOWN_NET = 15,
  FW_AMBIGUOUS_DECODE = 16,
  FW_NOT_PRIMITIVE = 17,
  FW_INVALID_POLYNOMIAL = 18,
  FW_DIVISION_BY_ZERO = 19,
  FW_STAGE_MISMATCH = 20,
  FW_INVALID_CONFIG = 21,
  FW_TIMEOUT = 22,
  FW_PARSE = 23,
  FW_INVALID_ARGUMENT = 24,
  FW_INTERNAL = 99
} fw_status;

typedef enum fw_clocking { FW_CONCURRENT = 0, FW_COUNTERFLOW = 1 } fw_clocking;

typedef enum fw_format { FW_SPICE = 0, FW_VERILOG = 1 } fw_format;

/* A circuit is either being built or sealed (after fw_finalize or when
 * returned by fw_builtin). Gate calls need a circuit under construction;
 * emission, simulation and instantiation need a sealed one. */
typedef struct fw_circuit fw_circuit;
typedef uint64_t fw_wire;
typedef uint64_t fw_counter_wire;

FW_API const char* fw_version(void);
FW_API const char* fw_status_name(fw_status status);
FW_API const char* fw_last_error(void);
FW_API const char* fw_last_error_net(void);
FW_API void fw_string_free(char* s);

/* Name arrays may be NULL when their count is zero. Handle arrays receive
 * one handle per input, loop and counter-output port, in declaration order. */
FW_API fw_status fw_circuit_create(const char* name,
                                   const char* const* inputs, size_t n_inputs,
                                   const char* const* outputs, size_t n_outputs,
                                   const char* const* loops, size_t n_loops,
                                   const char* const* counter_outputs, size_t n_counter_outputs,
                                   const char* const* counter_inputs, size_t n_counter_inputs,
                                   fw_circuit** circuit, fw_wire* input_wires,
                                   fw_wire* loop_wires,
                                   fw_counter_wire* counter_output_wires);
FW_API void fw_circuit_free(fw_circuit* circuit);
FW_API int fw_circuit_is_sealed(const fw_circuit* circuit);
FW_API const char* fw_circuit_name(const fw_circuit* circuit);

/* Net name behind a handle; NULL for unknown handles. Valid while the
 * circuit lives. */
FW_API const char* fw_wire_net(const fw_circuit* circuit, fw_wire wire);
FW_API const char* fw_counter_wire_net(const fw_circuit* circuit, fw_counter_wire wire);

/* `name` may be NULL for an automatic name. */
FW_API fw_status fw_and(fw_circuit* c, fw_wire a, fw_wire b, fw_wire clk, const char* name,
                        fw_wire* q);
FW_API fw_status fw_or(fw_circuit* c, fw_wire a, fw_wire b, fw_wire clk, const char* name,
                       fw_wire* q);
FW_API fw_status fw_xor(fw_circuit* c, fw_wire a, fw_wire b, fw_wire clk, const char* name,
                        fw_wire* q);
FW_API fw_status fw_not(fw_circuit* c, fw_wire a, fw_wire clk, const char* name, fw_wire* q);
FW_API fw_status fw_dff(fw_circuit* c, fw_wire d, fw_wire clk, const char* name, fw_wire* q);
FW_API fw_status fw_buff(fw_circuit* c, fw_wire a, const char* name, fw_wire* q);
FW_API fw_status fw_split(fw_circuit* c, fw_wire a, const char* name0, const char* name1,
                          fw_wire* q0, fw_wire* q1);
FW_API fw_status fw_ndro(fw_circuit* c, fw_wire set, fw_wire reset, fw_wire read,
                         const char* name, fw_wire* q);
FW_API fw_status fw_counter_split(fw_circuit* c, fw_counter_wire downstream,
                                  const char* upstream_name, const char* tap_name,
                                  fw_counter_wire* upstream, fw_wire* tap);
FW_API fw_status fw_counter_buff(fw_circuit* c, fw_counter_wire downstream,
                                 const char* upstream_name, fw_counter_wire* upstream);

FW_API fw_status fw_set_outputs(fw_circuit* c, const fw_wire* wires, size_t n);
FW_API fw_status fw_set_loops(fw_circuit* c, const fw_wire* wires, size_t n);
FW_API fw_status fw_set_counter_inputs(fw_circuit* c, const fw_counter_wire* wires, size_t n);

/* Places sealed `sub` in `c`. output_names / counter_input_names may be NULL
 * (all automatic) or hold NULL entries. */
FW_API fw_status fw_instantiate(fw_circuit* c, const fw_circuit* sub,
                                const fw_wire* inputs, size_t n_inputs,
                                const fw_counter_wire* counter_downstream, size_t n_downstream,
                                const char* const* output_names, fw_wire* outputs,
                                size_t n_outputs,
                                const char* const* counter_input_names,
                                fw_counter_wire* counter_inputs, size_t n_counter_inputs);

/* Checks input-output consistency and seals the circuit. On failure the
 * circuit stays under construction. */
FW_API fw_status fw_finalize(fw_circuit* c);

/* "half-adder", "counterflow-demo", "delay:<n>", "delay-demo", "rs-encoder". */
FW_API fw_status fw_builtin(const char* id, fw_clocking clocking, fw_circuit** circuit);

typedef struct fw_stats {
  size_t nets;
  size_t auto_named;
  size_t multiply_driven;
  size_t dangling;
  size_t elements;   /* cells placed in this circuit */
  size_t gates;      /* primitive gates after flattening */
  size_t subcircuits;  /* distinct subcircuit definitions */
} fw_stats;

FW_API fw_status fw_circuit_stats(const fw_circuit* c, fw_stats* stats);

/* `cell_map` is "KEY=VALUE" text or NULL. `hierarchical` also emits every
 * subcircuit definition. */
FW_API fw_status fw_emit(const fw_circuit* c, fw_format format, int hierarchical,
                         const char* cell_map, char** text);
/* Behavioral Verilog models for the eight cells. */
FW_API fw_status fw_emit_cell_models(const char* cell_map, char** text);

/* Stimulus: "pulse <net> <ps>" / "clock <net> <start> <period> <count>"
 * lines. Delays: "KEY=VALUE" text or NULL. watch: comma separated nets or
 * NULL for the output ports. Trace: "<ps>\t<net>" lines. */
FW_API fw_status fw_simulate(const fw_circuit* c, const char* stimulus, const char* delays,
                             int64_t horizon_ps, const char* watch, char** trace,
                             size_t* pulses, size_t* diagnostics);

/* "power | polynomial | binary" rows of GF(2^width). */
FW_API fw_status fw_gf_table(int width, uint32_t primitive_poly, char** text);

/* RS(12,8) over GF(2^4). Word files: one 4-bit word per line, lowest bit
 * first, streams separated by blank lines; parity is written the same way. */
FW_API fw_status fw_rs_encode(const char* messages, char** parity);

typedef struct fw_run_options {
  fw_clocking clocking;
  int feedback_delay_buffs; /* < 0 selects the default */
  const char* delays;       /* NULL for default gate delays */
} fw_run_options;

/* Simulates the encoder circuit on the messages (in batches of four, the
 * last batch padded with zero messages) and compares with fw_rs_encode.
 * `match` is set to 1 when every stream agrees. */
FW_API fw_status fw_rs_run(const char* messages, const fw_run_options* options,
                           char** parity, int* match);
/* `batches` random 4-message batches from a seeded generator; counts
 * streams whose simulated parity differs from the reference. */
FW_API fw_status fw_rs_random_check(size_t batches, uint64_t seed,
                                    const fw_run_options* options, size_t* mismatches);

#ifdef __cplusplus
}
#endif

#endif /* FLUXWIRE_FLUXWIRE_H_ */
