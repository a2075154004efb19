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
#include "aq/netlist.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <stdexcept>

namespace aq {

namespace {

const std::array<const char *, kGateKindCount> kKindNames = {
    "NOT", "AND2", "OR2", "NAND2", "NOR2", "XOR2", "XNOR2"};

class Builder {
public:
    explicit Builder(std::string name) { netlist_.name = std::move(name); }

    NetId input() {
        netlist_.input_count++;
        return netlist_.net_count++;
    }

    NetId gate(GateKind kind, NetId a, NetId b = kNoNet) {
        const NetId out = netlist_.net_count++;
        netlist_.gates.push_back({kind, a, b, out});
        return out;
    }

    struct SumCarry {
        NetId sum;
        NetId carry;
    };

    SumCarry half_adder(NetId a, NetId b) {
        return {gate(GateKind::Xor2, a, b), gate(GateKind::And2, a, b)};
    }

    SumCarry full_adder(NetId a, NetId b, NetId cin) {
        const NetId s1 = gate(GateKind::Xor2, a, b);
        const NetId sum = gate(GateKind::Xor2, s1, cin);
        const NetId c1 = gate(GateKind::And2, a, b);
        const NetId c2 = gate(GateKind::And2, s1, cin);
        return {sum, gate(GateKind::Or2, c1, c2)};
    }

    // Reduce up to three bits of equal weight; absent inputs are kNoNet.
    SumCarry reduce(NetId x, NetId y, NetId z) {
        std::vector<NetId> bits;
        for (NetId n : {x, y, z})
            if (n != kNoNet)
                bits.push_back(n);
        switch (bits.size()) {
        case 3:
            return full_adder(bits[0], bits[1], bits[2]);
        case 2:
            return half_adder(bits[0], bits[1]);
        case 1:
            return {bits[0], kNoNet};
        default:
            throw std::logic_error("reduce: no input bits");
        }
    }

    Netlist take() { return std::move(netlist_); }
    Netlist netlist_;
};

// Appends the array-multiplier structure for ports a/b onto the builder and
// returns the 2*width product nets.
std::vector<NetId> append_multiplier(Builder &b, const std::vector<NetId> &a,
                                     const std::vector<NetId> &bport) {
    const int width = static_cast<int>(a.size());
    std::vector<std::vector<NetId>> pp(width, std::vector<NetId>(width));
    for (int i = 0; i < width; ++i)
        for (int j = 0; j < width; ++j)
            pp[i][j] = b.gate(GateKind::And2, a[j], bport[i]);

    std::vector<NetId> product(2 * width, kNoNet);
    std::vector<NetId> sum(pp[0]);
    std::vector<NetId> carry(width, kNoNet);
    product[0] = sum[0];

    for (int i = 1; i < width; ++i) {
        std::vector<NetId> next_sum(width, kNoNet);
        std::vector<NetId> next_carry(width, kNoNet);
        for (int j = 0; j < width; ++j) {
            const NetId from_above = (j + 1 < width) ? sum[j + 1] : kNoNet;
            const auto sc = b.reduce(pp[i][j], from_above, carry[j]);
            next_sum[j] = sc.sum;
            next_carry[j] = sc.carry;
        }
        product[i] = next_sum[0];
        sum = std::move(next_sum);
        carry = std::move(next_carry);
    }

    NetId ripple = kNoNet;
    for (int k = 0; k < width; ++k) {
        const NetId from_sum = (k + 1 < width) ? sum[k + 1] : kNoNet;
        const auto sc = b.reduce(from_sum, carry[k], ripple);
        product[width + k] = sc.sum;
        ripple = sc.carry;
    }
    return product;
}

} // namespace

const char *gate_kind_name(GateKind kind) { return kKindNames[static_cast<int>(kind)]; }

std::optional<GateKind> gate_kind_from_name(const std::string &name) {
    for (int i = 0; i < kGateKindCount; ++i)
        if (name == kKindNames[i])
            return static_cast<GateKind>(i);
    return std::nullopt;
}

Netlist build_multiplier(int width) {
    if (width < 2 || width > 8)
        throw std::invalid_argument("build_multiplier: width must be in [2, 8]");
    Builder b("mul" + std::to_string(width));
    std::vector<NetId> a(width), bp(width);
    for (auto &n : a)
        n = b.input();
    for (auto &n : bp)
        n = b.input();
    auto product = append_multiplier(b, a, bp);
    b.netlist_.port_a = a;
    b.netlist_.port_b = bp;
    b.netlist_.port_out = product;
    return b.take();
}

Netlist build_mac() {
    Builder b("mac8x8c22");
    std::vector<NetId> a(8), bp(8), c(22);
    for (auto &n : a)
        n = b.input();
    for (auto &n : bp)
        n = b.input();
    for (auto &n : c)
        n = b.input();

    auto product = append_multiplier(b, a, bp);

    std::vector<NetId> out(22, kNoNet);
    NetId ripple = kNoNet;
    for (int k = 0; k < 22; ++k) {
        const NetId pbit = (k < 16) ? product[k] : kNoNet;
        const auto sc = b.reduce(c[k], pbit, ripple);
        out[k] = sc.sum;
        ripple = sc.carry; // carry out of bit 21 dropped
    }

    b.netlist_.port_a = a;
    b.netlist_.port_b = bp;
    b.netlist_.port_c = c;
    b.netlist_.port_out = out;
    return b.take();
}

static void assign_port(std::vector<uint8_t> &values, const std::vector<NetId> &port,
                        uint32_t value, const char *what) {
    if (port.size() < 32 && value >= (1u << port.size()))
        throw std::invalid_argument(std::string("evaluate: value does not fit port ") + what);
    for (size_t i = 0; i < port.size(); ++i)
        values[port[i]] = (value >> i) & 1u;
}

uint32_t evaluate(const Netlist &netlist, const InputVector &inputs, std::vector<uint8_t> &values) {
    values.assign(netlist.net_count, 0);
    assign_port(values, netlist.port_a, inputs.a, "A");
    assign_port(values, netlist.port_b, inputs.b, "B");
    if (netlist.has_c_port())
        assign_port(values, netlist.port_c, inputs.c, "C");
    else if (inputs.c != 0)
        throw std::invalid_argument("evaluate: netlist has no C port");

    for (const Gate &g : netlist.gates) {
        const uint8_t a = values[g.a];
        const uint8_t b = (g.b == kNoNet) ? 0 : values[g.b];
        uint8_t v = 0;
        switch (g.kind) {
        case GateKind::Not:
            v = a ^ 1u;
            break;
        case GateKind::And2:
            v = a & b;
            break;
        case GateKind::Or2:
            v = a | b;
            break;
        case GateKind::Nand2:
            v = (a & b) ^ 1u;
            break;
        case GateKind::Nor2:
            v = (a | b) ^ 1u;
            break;
        case GateKind::Xor2:
            v = a ^ b;
            break;
        case GateKind::Xnor2:
            v = (a ^ b) ^ 1u;
            break;
        }
        values[g.out] = v;
    }

    uint32_t result = 0;
    for (size_t i = 0; i < netlist.port_out.size(); ++i)
        result |= static_cast<uint32_t>(values[netlist.port_out[i]]) << i;
    return result;
}

uint32_t evaluate(const Netlist &netlist, const InputVector &inputs) {
    std::vector<uint8_t> values;
    return evaluate(netlist, inputs, values);
}

void validate(const Netlist &netlist) {
    const auto in_range = [&](NetId n) { return n >= 0 && n < netlist.net_count; };
    std::vector<int8_t> defined(netlist.net_count, 0);
    for (NetId n = 0; n < netlist.input_count; ++n)
        defined[n] = 1;

    for (const Gate &g : netlist.gates) {
        if (!in_range(g.a) || !defined[g.a])
            throw std::invalid_argument("netlist: gate input not yet driven (topological order broken)");
        if (gate_arity(g.kind) == 2) {
            if (!in_range(g.b) || !defined[g.b])
                throw std::invalid_argument("netlist: gate input not yet driven (topological order broken)");
        } else if (g.b != kNoNet) {
            throw std::invalid_argument("netlist: NOT gate with second input");
        }
        if (!in_range(g.out))
            throw std::invalid_argument("netlist: gate output net out of range");
        if (defined[g.out])
            throw std::invalid_argument("netlist: net has more than one driver");
        defined[g.out] = 1;
    }
    for (NetId n = 0; n < netlist.net_count; ++n)
        if (!defined[n])
            throw std::invalid_argument("netlist: undriven net");

    for (const auto *port : {&netlist.port_a, &netlist.port_b, &netlist.port_c, &netlist.port_out})
        for (NetId n : *port)
            if (!in_range(n))
                throw std::invalid_argument("netlist: port maps to net out of range");
}

std::string to_json(const Netlist &netlist) {
    nlohmann::json j;
    j["name"] = netlist.name;
    j["net_count"] = netlist.net_count;
    j["input_count"] = netlist.input_count;
    j["ports"]["a"] = netlist.port_a;
    j["ports"]["b"] = netlist.port_b;
    j["ports"]["c"] = netlist.port_c;
    j["ports"]["out"] = netlist.port_out;
    auto &gates = j["gates"] = nlohmann::json::array();
    for (const Gate &g : netlist.gates) {
        nlohmann::json jg;
        jg["kind"] = gate_kind_name(g.kind);
        jg["in"] = (g.b == kNoNet) ? std::vector<NetId>{g.a} : std::vector<NetId>{g.a, g.b};
        jg["out"] = g.out;
        gates.push_back(std::move(jg));
    }
    return j.dump(2);
}

Netlist netlist_from_json(const std::string &text) {
    const auto j = nlohmann::json::parse(text);
    Netlist n;
    n.name = j.at("name").get<std::string>();
    n.net_count = j.at("net_count").get<int32_t>();
    n.input_count = j.at("input_count").get<int32_t>();
    n.port_a = j.at("ports").at("a").get<std::vector<NetId>>();
    n.port_b = j.at("ports").at("b").get<std::vector<NetId>>();
    n.port_c = j.at("ports").at("c").get<std::vector<NetId>>();
    n.port_out = j.at("ports").at("out").get<std::vector<NetId>>();
    for (const auto &jg : j.at("gates")) {
        const auto kind = gate_kind_from_name(jg.at("kind").get<std::string>());
        if (!kind)
            throw std::invalid_argument("netlist: unknown gate kind in JSON");
        const auto in = jg.at("in").get<std::vector<NetId>>();
        if (static_cast<int>(in.size()) != gate_arity(*kind))
            throw std::invalid_argument("netlist: gate arity mismatch in JSON");
        n.gates.push_back({*kind, in[0], in.size() == 2 ? in[1] : kNoNet, jg.at("out").get<NetId>()});
    }
    validate(n);
    return n;
}

} // namespace aq
