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

#include "aq/aging.hpp"
#include "aq/netlist.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace aq {

enum class Padding : uint8_t { Msb, Lsb };

inline const char *padding_name(Padding p) { return p == Padding::Msb ? "MSB" : "LSB"; }

// (alpha, beta) input compression: activations use 8-alpha bits, weights
// 8-beta, the accumulator input 22-(alpha+beta). The removed bit positions
// are zero-padded on the MSB or LSB side.
struct CompressionConfig {
    int alpha = 0;
    int beta = 0;
    Padding padding = Padding::Msb;
};

// Input bits tied to constant 0 by a compression config (bit i set in a
// mask means port bit i is forced to zero).
struct ConstantBits {
    uint32_t a_mask = 0;
    uint32_t b_mask = 0;
    uint32_t c_mask = 0;

    bool empty() const { return a_mask == 0 && b_mask == 0 && c_mask == 0; }
};

// Throws std::invalid_argument for alpha/beta outside [0, 8].
ConstantBits constant_bits(const CompressionConfig &config);

// Per-net constant values: -1 unknown, 0/1 known. Fixed point of forward
// constant propagation from the seeded input bits (seeds included).
std::vector<int8_t> propagate_constants(const Netlist &netlist, const ConstantBits &zeros);

struct TimingReport {
    // Arrival time per net; NaN for constant nets (they carry no event).
    std::vector<double> arrival;
    double critical_delay = 0.0;
    // Witness path as gate indices, input side first. Ties broken toward
    // the lowest gate index so reports are reproducible.
    std::vector<int32_t> critical_gates;
    std::vector<NetId> constant_nets;
};

// Topological longest-path analysis with constant-net pruning. A gate with
// some constant inputs still contributes its full delay on the non-constant
// ones. The critical delay is the max arrival over non-constant output
// port nets (0 if all outputs are constant).
TimingReport analyze(const Netlist &netlist, const DelayTable &delays,
                     const CompressionConfig &config);

struct SweepRow {
    double dvth_mv;
    int alpha;
    int beta;
    Padding padding;
    double delay;
    double normalized_delay; // relative to fresh uncompressed
};

// Full Cartesian sweep over levels x [0,8]^2 x both paddings, normalized
// to the fresh uncompressed delay.
std::vector<SweepRow> delay_sweep(const Netlist &netlist, const DelayModel &model,
                                  const std::vector<AgingLevel> &levels);

} // namespace aq
