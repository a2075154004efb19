/* Copyright 2026 The agequant Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aq {

enum class GateKind : uint8_t { Not, And2, Or2, Nand2, Nor2, Xor2, Xnor2 };

constexpr int kGateKindCount = 7;

const char *gate_kind_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(const std::string &name);
inline int gate_arity(GateKind kind) { return kind == GateKind::Not ? 1 : 2; }

using NetId = int32_t;
constexpr NetId kNoNet = -1;

// Two-input primitive gate; `b` is kNoNet for NOT.
struct Gate {
    GateKind kind;
    NetId a;
    NetId b;
    NetId out;
};

// Purely combinational gate network. Nets [0, input_count) are primary
// inputs; every gate drives a fresh net, and gates are stored in
// topological order, so net ids double as evaluation order.
struct Netlist {
    std::string name;
    int32_t net_count = 0;
    int32_t input_count = 0;
    std::vector<Gate> gates;
    std::vector<NetId> port_a;
    std::vector<NetId> port_b;
    std::vector<NetId> port_c; // empty for the multiplier-only variant
    std::vector<NetId> port_out;

    bool has_c_port() const { return !port_c.empty(); }
    int output_width() const { return static_cast<int>(port_out.size()); }
};

// Carry-save array multiplier: AND partial-product matrix, half/full-adder
// reduction rows, final ripple-carry row. Output width is 2*width.
Netlist build_multiplier(int width);

// 8x8 multiplier feeding a 22-bit ripple-carry adder computing
// (A*B + C) mod 2^22; the carry out of bit 21 is dropped.
Netlist build_mac();

struct InputVector {
    uint32_t a = 0;
    uint32_t b = 0;
    uint32_t c = 0;
};

// Zero-delay functional evaluation; reference for the timing simulator.
// Throws std::invalid_argument if a value does not fit its port.
uint32_t evaluate(const Netlist &netlist, const InputVector &inputs);

// Evaluation with caller-provided scratch buffer (net values), for hot loops.
uint32_t evaluate(const Netlist &netlist, const InputVector &inputs, std::vector<uint8_t> &values);

// Structural checks: single driver per net, valid topological order, port
// wiring in range. Throws std::invalid_argument on violation.
void validate(const Netlist &netlist);

std::string to_json(const Netlist &netlist);
Netlist netlist_from_json(const std::string &text);

} // namespace aq
