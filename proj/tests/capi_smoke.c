/*
 * Copyright 2026 The fluxwire Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Builds the half adder through the C interface from a C translation unit. */

#include <stdio.h>
#include <string.h>

#include "fluxwire/fluxwire.h"

static const char* kExpected =
    ".subckt HalfAdder a b clk c s\n"
    "XSPLIT1 clk _clk_0 _clk_1 THmitll_SPLIT\n"
    "XSPLIT2 a _a_0 _a_1 THmitll_SPLIT\n"
    "XSPLIT3 b _b_0 _b_1 THmitll_SPLIT\n"
    "XAND4 _a_0 _b_0 _clk_0 c THmitll_AND2\n"
    "XXOR5 _a_1 _b_1 _clk_1 s THmitll_XOR\n"
    ".ends\n";

#define CHECK(call)                                                        \
  do {                                                                     \
    fw_status st_ = (call);                                                \
    if (st_ != FW_OK) {                                                    \
      fprintf(stderr, "%s: %s\n", fw_status_name(st_), fw_last_error()); \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  const char* inputs[] = {"a", "b", "clk"};
  const char* outputs[] = {"c", "s"};
  fw_circuit* c = NULL;
  fw_wire in[3];
  fw_wire clk1, clk2, a1, a2, b1, b2, out[2];
  char* text = NULL;
  int ok;

  CHECK(fw_circuit_create("HalfAdder", inputs, 3, outputs, 2, NULL, 0, NULL, 0, NULL, 0, &c, in,
                          NULL, NULL));
  CHECK(fw_split(c, in[2], NULL, NULL, &clk1, &clk2));
  CHECK(fw_split(c, in[0], NULL, NULL, &a1, &a2));
  CHECK(fw_split(c, in[1], NULL, NULL, &b1, &b2));
  CHECK(fw_and(c, a1, b1, clk1, "c", &out[0]));
  if (fw_xor(c, a1, b2, clk2, "s", &out[1]) != FW_ALREADY_CONSUMED ||
      strcmp(fw_last_error_net(), "_a_0") != 0) {
    fprintf(stderr, "reuse of _a_0 not reported\n");
    return 1;
  }
  CHECK(fw_xor(c, a2, b2, clk2, "s", &out[1]));
  CHECK(fw_set_outputs(c, out, 2));
  CHECK(fw_finalize(c));
  CHECK(fw_emit(c, FW_SPICE, 0, NULL, &text));
  ok = strcmp(text, kExpected) == 0;
  if (!ok) fprintf(stderr, "unexpected netlist:\n%s", text);
  fw_string_free(text);
  fw_circuit_free(c);
  return ok ? 0 : 1;
}
