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
#include "aq/sta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aq {

namespace {

uint32_t zero_mask(int removed, int width, Padding padding) {
    if (removed <= 0)
        return 0;
    removed = std::min(removed, width);
    const uint32_t band = (removed >= 32) ? ~0u : ((1u << removed) - 1u);
    return (padding == Padding::Lsb) ? band : band << (width - removed);
}

} // namespace

ConstantBits constant_bits(const CompressionConfig &config) {
    if (config.alpha < 0 || config.alpha > 8 || config.beta < 0 || config.beta > 8)
        throw std::invalid_argument("constant_bits: alpha/beta must be in [0, 8]");
    ConstantBits bits;
    bits.a_mask = zero_mask(config.alpha, 8, config.padding);
    bits.b_mask = zero_mask(config.beta, 8, config.padding);
    bits.c_mask = zero_mask(config.alpha + config.beta, 22, config.padding);
    return bits;
}

std::vector<int8_t> propagate_constants(const Netlist &netlist, const ConstantBits &zeros) {
    std::vector<int8_t> value(netlist.net_count, -1);
    const auto seed_port = [&](const std::vector<NetId> &port, uint32_t mask) {
        for (size_t i = 0; i < port.size(); ++i)
            if (mask & (1u << i))
                value[port[i]] = 0;
    };
    seed_port(netlist.port_a, zeros.a_mask);
    seed_port(netlist.port_b, zeros.b_mask);
    if (netlist.has_c_port())
        seed_port(netlist.port_c, zeros.c_mask);

    for (const Gate &g : netlist.gates) {
        const int8_t a = value[g.a];
        const int8_t b = (g.b == kNoNet) ? -1 : value[g.b];
        int8_t v = -1;
        switch (g.kind) {
        case GateKind::Not:
            if (a >= 0)
                v = a ^ 1;
            break;
        case GateKind::And2:
            if (a == 0 || b == 0)
                v = 0;
            else if (a == 1 && b == 1)
                v = 1;
            break;
        case GateKind::Or2:
            if (a == 1 || b == 1)
                v = 1;
            else if (a == 0 && b == 0)
                v = 0;
            break;
        case GateKind::Nand2:
            if (a == 0 || b == 0)
                v = 1;
            else if (a == 1 && b == 1)
                v = 0;
            break;
        case GateKind::Nor2:
            if (a == 1 || b == 1)
                v = 0;
            else if (a == 0 && b == 0)
                v = 1;
            break;
        case GateKind::Xor2:
            if (a >= 0 && b >= 0)
                v = a ^ b;
            break;
        case GateKind::Xnor2:
            if (a >= 0 && b >= 0)
                v = (a ^ b) ^ 1;
            break;
        }
        value[g.out] = v;
    }
    return value;
}

TimingReport analyze(const Netlist &netlist, const DelayTable &delays,
                     const CompressionConfig &config) {
    if (delays.size() != netlist.gates.size())
        throw std::invalid_argument("analyze: delay table does not cover all gates");

    const auto constants = propagate_constants(netlist, constant_bits(config));

    TimingReport report;
    report.arrival.assign(netlist.net_count, 0.0);
    std::vector<int32_t> pred_gate(netlist.net_count, -1); // driver of the arrival argmax input
    std::vector<int32_t> driver(netlist.net_count, -1);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (NetId n = 0; n < netlist.net_count; ++n)
        if (constants[n] >= 0) {
            report.constant_nets.push_back(n);
            report.arrival[n] = nan;
        }

    for (size_t gi = 0; gi < netlist.gates.size(); ++gi) {
        const Gate &g = netlist.gates[gi];
        driver[g.out] = static_cast<int32_t>(gi);
        if (constants[g.out] >= 0)
            continue;
        // At least one input is non-constant here, else the output would
        // have folded to a constant.
        double best = -1.0;
        NetId best_net = kNoNet;
        for (NetId in : {g.a, g.b}) {
            if (in == kNoNet || constants[in] >= 0)
                continue;
            const double t = report.arrival[in];
            const int32_t d = driver[in];
            if (t > best || (t == best && best_net != kNoNet && d < driver[best_net])) {
                best = t;
                best_net = in;
            }
        }
        report.arrival[g.out] = best + delays[gi];
        pred_gate[g.out] = static_cast<int32_t>(gi);
        // Remember which input the max came from for the witness walk.
        if (best_net != kNoNet)
            driver[g.out] = static_cast<int32_t>(gi);
        report.arrival[g.out] = best + delays[gi];
        pred_gate[g.out] = best_net != kNoNet ? driver[best_net] : -1;
    }

    // Critical output: max arrival over non-constant output port nets,
    // lowest net id on ties.
    double critical = 0.0;
    NetId critical_net = kNoNet;
    for (NetId n : netlist.port_out) {
        if (constants[n] >= 0)
            continue;
        const double t = report.arrival[n];
        if (critical_net == kNoNet || t > critical) {
            critical = t;
            critical_net = n;
        }
    }
    report.critical_delay = (critical_net == kNoNet) ? 0.0 : critical;

    // Witness walk from the critical output back to a primary input.
    NetId n = critical_net;
    while (n != kNoNet && driver[n] >= 0) {
        const int32_t gi = driver[n];
        report.critical_gates.push_back(gi);
        const Gate &g = netlist.gates[gi];
        double best = -1.0;
        NetId best_net = kNoNet;
        int32_t best_driver = 0;
        for (NetId in : {g.a, g.b}) {
            if (in == kNoNet || constants[in] >= 0)
                continue;
            const double t = report.arrival[in];
            const int32_t d = driver[in];
            if (best_net == kNoNet || t > best || (t == best && d < best_driver)) {
                best = t;
                best_net = in;
                best_driver = d;
            }
        }
        n = best_net;
    }
    std::reverse(report.critical_gates.begin(), report.critical_gates.end());
    return report;
}

std::vector<SweepRow> delay_sweep(const Netlist &netlist, const DelayModel &model,
                                  const std::vector<AgingLevel> &levels) {
    const DelayTable fresh = annotate(netlist, model, AgingLevel{0.0});
    const double d_fresh = analyze(netlist, fresh, CompressionConfig{}).critical_delay;

    std::vector<SweepRow> rows;
    rows.reserve(levels.size() * 81 * 2);
    for (const AgingLevel &level : levels) {
        const DelayTable delays = annotate(netlist, model, level);
        for (int alpha = 0; alpha <= 8; ++alpha)
            for (int beta = 0; beta <= 8; ++beta)
                for (Padding padding : {Padding::Msb, Padding::Lsb}) {
                    const CompressionConfig config{alpha, beta, padding};
                    const double d = analyze(netlist, delays, config).critical_delay;
                    rows.push_back({level.dvth_mv, alpha, beta, padding, d, d / d_fresh});
                }
    }
    return rows;
}

} // namespace aq
