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

#include "aq/netlist.hpp"

#include <array>
#include <vector>

namespace aq {

// Threshold-voltage shift in millivolts. 0 = fresh silicon; the canonical
// lifetime sweep is {0, 10, 20, 30, 40, 50} mV.
struct AgingLevel {
    double dvth_mv = 0.0;
};

constexpr double kMaxDvthMv = 100.0;

inline std::vector<AgingLevel> canonical_levels() {
    return {{0.0}, {10.0}, {20.0}, {30.0}, {40.0}, {50.0}};
}

// Gate delay model: unitless base delays per gate kind scaled by the
// overdrive loss caused by a threshold-voltage shift. Defaults are
// calibrated so that 50 mV gives ~23% delay degradation.
struct DelayModel {
    double vdd = 0.50;  // V
    double vth0 = 0.23; // V
    std::array<double, kGateKindCount> base_delay = {
        /*NOT*/ 1.0, /*AND2*/ 1.4, /*OR2*/ 1.4, /*NAND2*/ 1.0,
        /*NOR2*/ 1.0, /*XOR2*/ 1.8, /*XNOR2*/ 1.8};

    double base(GateKind kind) const { return base_delay[static_cast<int>(kind)]; }
};

// Multiplicative delay degradation (vdd - vth0) / (vdd - vth0 - dvth).
// >= 1, strictly increasing in dvth. Throws std::invalid_argument if the
// level is out of range or the remaining overdrive is not positive.
double delay_scale(const DelayModel &model, const AgingLevel &level);

// Per-gate delays, indexed like netlist.gates.
using DelayTable = std::vector<double>;

// Worst-case uniform degradation: every gate scaled by delay_scale.
DelayTable annotate(const Netlist &netlist, const DelayModel &model, const AgingLevel &level);

} // namespace aq
