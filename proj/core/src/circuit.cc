// Copyright 2026 The xstab Authors
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

#include "xstab/circuit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <memory>
#include <numbers>
#include <random>

#include "json.hpp"

namespace xstab {

namespace {

struct GateInfo {
    Gate gate;
    std::string_view name;
    std::size_t arity;
    bool parameterized;
    bool clifford;
};

constexpr std::array<GateInfo, 8> kGateInfo = {{
    {Gate::H, "h", 1, false, true},
    {Gate::S, "s", 1, false, true},
    {Gate::X, "x", 1, false, true},
    {Gate::SX, "sx", 1, false, true},
    {Gate::RX, "rx", 1, true, false},
    {Gate::RY, "ry", 1, true, false},
    {Gate::RZ, "rz", 1, true, false},
    {Gate::CX, "cx", 2, false, true},
}};

const GateInfo &info(Gate g) {
    return kGateInfo[static_cast<std::size_t>(g)];
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

std::optional<std::size_t> parse_wire(std::string_view token) {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

std::optional<double> parse_theta(std::string_view token) {
    double value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
            pos++;
        }
        std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
            pos++;
        }
        if (pos > start) {
            tokens.push_back(line.substr(start, pos - start));
        }
    }
    return tokens;
}

Instruction build_instruction(
    std::size_t line, std::string_view name, std::span<const std::size_t> wires, std::optional<double> theta) {
    std::string lowered(name);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    auto gate = gate_from_name(lowered);
    if (!gate) {
        throw ParseError(line, "unknown gate '" + std::string(name) + "'");
    }
    const GateInfo &gi = info(*gate);
    if (wires.size() != gi.arity) {
        throw ParseError(
            line, "gate '" + lowered + "' takes " + std::to_string(gi.arity) + " wire(s), got " + std::to_string(wires.size()));
    }
    if (theta && !gi.parameterized) {
        throw ParseError(line, "gate '" + lowered + "' does not take a parameter");
    }
    if (!theta && gi.parameterized) {
        throw ParseError(line, "gate '" + lowered + "' requires a parameter");
    }
    if (gi.arity == 2) {
        if (wires[0] == wires[1]) {
            throw ParseError(line, "cx control and target must differ");
        }
        return Instruction::cx(wires[0], wires[1]);
    }
    return Instruction::single(*gate, wires[0], theta.value_or(0.0));
}

std::vector<Instruction> parse_text(std::string_view text) {
    std::vector<Instruction> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        line_no++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }
        auto gate = gate_from_name(tokens[0]);
        std::size_t arity = gate ? gate_arity(*gate) : 1;
        std::vector<std::size_t> wires;
        std::optional<double> theta;
        std::size_t k = 1;
        for (; k < tokens.size() && wires.size() < arity; k++) {
            auto w = parse_wire(tokens[k]);
            if (!w) {
                throw ParseError(line_no, "malformed wire '" + std::string(tokens[k]) + "'");
            }
            wires.push_back(*w);
        }
        if (k < tokens.size()) {
            theta = parse_theta(tokens[k]);
            if (!theta) {
                throw ParseError(line_no, "malformed parameter '" + std::string(tokens[k]) + "'");
            }
            k++;
        }
        if (k < tokens.size()) {
            throw ParseError(line_no, "unexpected trailing token '" + std::string(tokens[k]) + "'");
        }
        out.push_back(build_instruction(line_no, tokens[0], wires, theta));
    }
    return out;
}

std::vector<Instruction> parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError(1, "JSON circuit must be an array");
    }
    std::vector<Instruction> out;
    std::size_t item = 0;
    for (const auto &entry : doc) {
        item++;
        if (!entry.is_object() || !entry.contains("gate") || !entry["gate"].is_string() || !entry.contains("wires") ||
            !entry["wires"].is_array()) {
            throw ParseError(item, "entry needs string 'gate' and array 'wires'");
        }
        std::vector<std::size_t> wires;
        for (const auto &w : entry["wires"]) {
            if (!w.is_number_unsigned() && !(w.is_number_integer() && w.get<long long>() >= 0)) {
                throw ParseError(item, "malformed wire");
            }
            wires.push_back(w.get<std::size_t>());
        }
        std::optional<double> theta;
        if (entry.contains("theta")) {
            if (!entry["theta"].is_number()) {
                throw ParseError(item, "malformed parameter");
            }
            double t = entry["theta"].get<double>();
            auto gate = gate_from_name(entry["gate"].get<std::string>());
            // JSON writers emit theta 0 for fixed gates.
            if (!(t == 0.0 && gate && !is_parameterized(*gate))) {
                theta = t;
            }
        }
        out.push_back(build_instruction(item, entry["gate"].get<std::string>(), wires, theta));
    }
    return out;
}

}  // namespace

std::string_view gate_name(Gate g) {
    return info(g).name;
}

std::optional<Gate> gate_from_name(std::string_view name) {
    for (const auto &gi : kGateInfo) {
        if (gi.name == name) {
            return gi.gate;
        }
    }
    return std::nullopt;
}

bool is_parameterized(Gate g) {
    return info(g).parameterized;
}

bool is_clifford(Gate g) {
    return info(g).clifford;
}

std::size_t gate_arity(Gate g) {
    return info(g).arity;
}

Instruction Instruction::single(Gate g, std::size_t wire, double theta) {
    if (gate_arity(g) != 1) {
        throw std::domain_error("Instruction::single used with a two-qubit gate.");
    }
    return Instruction{g, {wire, wire}, theta};
}

Instruction Instruction::cx(std::size_t control, std::size_t target) {
    return Instruction{Gate::CX, {control, target}, 0.0};
}

std::string Instruction::str() const {
    std::string out(gate_name(gate));
    out += ' ';
    out += std::to_string(wires[0]);
    if (arity() == 2) {
        out += ' ';
        out += std::to_string(wires[1]);
    }
    if (is_parameterized(gate)) {
        out += ' ';
        out += format_double(theta);
    }
    return out;
}

void validate(const Instruction &inst, std::size_t num_qubits) {
    if (inst.wires[0] >= num_qubits || (inst.arity() == 2 && inst.wires[1] >= num_qubits)) {
        throw std::domain_error("Instruction '" + inst.str() + "' has a wire outside [0, " + std::to_string(num_qubits) + ").");
    }
    if (inst.arity() == 2 && inst.wires[0] == inst.wires[1]) {
        throw std::domain_error("CX control and target must differ.");
    }
    if (!is_parameterized(inst.gate) && inst.theta != 0.0) {
        throw std::domain_error("Gate '" + std::string(gate_name(inst.gate)) + "' does not take a parameter.");
    }
}

void validate(std::span<const Instruction> instructions, std::size_t num_qubits) {
    for (const auto &inst : instructions) {
        validate(inst, num_qubits);
    }
}

std::vector<Instruction> OperatorPartition::flattened() const {
    std::vector<Instruction> out;
    std::size_t k_single = 0, k_two = 0;
    for (std::uint8_t kind : order) {
        if (kind == 0) {
            for (const auto &bucket : single[k_single].per_qubit) {
                out.insert(out.end(), bucket.begin(), bucket.end());
            }
            k_single++;
        } else {
            const auto &gates = two[k_two].gates;
            out.insert(out.end(), gates.begin(), gates.end());
            k_two++;
        }
    }
    return out;
}

OperatorPartition divide_instruction(std::span<const Instruction> instructions, std::size_t num_qubits) {
    validate(instructions, num_qubits);
    OperatorPartition part;
    part.num_qubits = num_qubits;
    std::size_t prev_arity = 0;
    for (const auto &inst : instructions) {
        std::size_t arity = inst.arity();
        if (arity != prev_arity) {
            if (arity == 1) {
                part.single.push_back({std::vector<std::vector<Instruction>>(num_qubits)});
                part.order.push_back(0);
            } else {
                part.two.emplace_back();
                part.order.push_back(1);
            }
            prev_arity = arity;
        }
        if (arity == 1) {
            part.single.back().per_qubit[inst.wire()].push_back(inst);
        } else {
            part.two.back().gates.push_back(inst);
        }
    }
    return part;
}

std::vector<std::uint8_t> create_chain(std::size_t num_single, std::size_t num_two, bool first_is_single) {
    std::size_t leading = first_is_single ? num_single : num_two;
    std::size_t trailing = first_is_single ? num_two : num_single;
    if (leading != trailing && leading != trailing + 1) {
        throw std::domain_error(
            "No alternating chain with " + std::to_string(num_single) + " single-qubit and " + std::to_string(num_two) +
            " two-qubit operators.");
    }
    std::vector<std::uint8_t> chain(num_single + num_two);
    std::uint8_t first = first_is_single ? 0 : 1;
    for (std::size_t i = 0; i < chain.size(); i++) {
        chain[i] = static_cast<std::uint8_t>((first + i) & 1);
    }
    return chain;
}

ThetaSource seeded_theta_source(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng]() {
        std::uniform_real_distribution<double> dist(0.0, 2 * std::numbers::pi);
        double t = 0.0;
        while (t == 0.0) {
            t = dist(*rng);
        }
        return t;
    };
}

std::vector<Instruction> gen_ghz(std::size_t num_qubits) {
    std::vector<Instruction> out;
    if (num_qubits == 0) {
        return out;
    }
    out.push_back(Instruction::single(Gate::H, 0));
    for (std::size_t q = 0; q + 1 < num_qubits; q++) {
        out.push_back(Instruction::cx(q, q + 1));
    }
    return out;
}

std::vector<Instruction> gen_graph(std::size_t num_qubits, std::span<const std::pair<std::size_t, std::size_t>> edges) {
    std::vector<Instruction> out;
    for (std::size_t q = 0; q < num_qubits; q++) {
        out.push_back(Instruction::single(Gate::H, q));
    }
    for (auto [a, b] : edges) {
        if (a >= num_qubits || b >= num_qubits || a == b) {
            throw std::domain_error("Invalid graph edge.");
        }
        out.push_back(Instruction::single(Gate::H, b));
        out.push_back(Instruction::cx(a, b));
        out.push_back(Instruction::single(Gate::H, b));
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ring_edges(std::size_t num_qubits) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (num_qubits < 2) {
        return edges;
    }
    for (std::size_t q = 0; q + 1 < num_qubits; q++) {
        edges.emplace_back(q, q + 1);
    }
    if (num_qubits > 2) {
        edges.emplace_back(num_qubits - 1, 0);
    }
    return edges;
}

std::vector<Instruction> gen_xyz_chain(
    std::size_t num_qubits, std::size_t layers, std::size_t repeats, const ThetaSource &thetas) {
    std::vector<Instruction> out;
    out.reserve(layers * (3 * num_qubits * repeats + (num_qubits > 0 ? num_qubits - 1 : 0)));
    for (std::size_t layer = 0; layer < layers; layer++) {
        for (std::size_t r = 0; r < repeats; r++) {
            for (std::size_t q = 0; q < num_qubits; q++) {
                out.push_back(Instruction::single(Gate::RX, q, thetas()));
                out.push_back(Instruction::single(Gate::RY, q, thetas()));
                out.push_back(Instruction::single(Gate::RZ, q, thetas()));
            }
        }
        for (std::size_t q = 0; q + 1 < num_qubits; q++) {
            out.push_back(Instruction::cx(q, q + 1));
        }
    }
    return out;
}

std::vector<Instruction> gen_xyz_chain(std::size_t num_qubits, std::size_t layers, std::size_t repeats, std::uint64_t seed) {
    return gen_xyz_chain(num_qubits, layers, repeats, seeded_theta_source(seed));
}

std::vector<Instruction> gen_random(std::size_t num_qubits, std::size_t num_gates, std::uint64_t seed, bool clifford_only) {
    std::mt19937_64 rng(seed);
    std::vector<Gate> pool = {Gate::H, Gate::S, Gate::X, Gate::SX};
    if (!clifford_only) {
        pool.insert(pool.end(), {Gate::RX, Gate::RY, Gate::RZ});
    }
    if (num_qubits >= 2) {
        pool.push_back(Gate::CX);
    }
    std::uniform_int_distribution<std::size_t> pick_gate(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_wire(0, num_qubits - 1);
    std::uniform_real_distribution<double> pick_theta(0.0, 2 * std::numbers::pi);
    std::vector<Instruction> out;
    out.reserve(num_gates);
    for (std::size_t i = 0; i < num_gates; i++) {
        Gate g = pool[pick_gate(rng)];
        if (g == Gate::CX) {
            std::size_t c = pick_wire(rng);
            std::size_t t = pick_wire(rng);
            while (t == c) {
                t = pick_wire(rng);
            }
            out.push_back(Instruction::cx(c, t));
        } else {
            std::size_t q = pick_wire(rng);
            double theta = is_parameterized(g) ? pick_theta(rng) : 0.0;
            out.push_back(Instruction::single(g, q, theta));
        }
    }
    return out;
}

ParseError::ParseError(std::size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {
}

std::vector<Instruction> parse_circuit(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        return parse_json(text);
    }
    return parse_text(text);
}

std::string serialize_circuit(std::span<const Instruction> instructions) {
    std::string out;
    for (const auto &inst : instructions) {
        out += inst.str();
        out += '\n';
    }
    return out;
}

std::string serialize_circuit_json(std::span<const Instruction> instructions) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto &inst : instructions) {
        nlohmann::json wires = nlohmann::json::array({inst.wires[0]});
        if (inst.arity() == 2) {
            wires.push_back(inst.wires[1]);
        }
        doc.push_back({{"gate", gate_name(inst.gate)}, {"wires", wires}, {"theta", inst.theta}});
    }
    return doc.dump();
}

std::size_t min_qubits(std::span<const Instruction> instructions) {
    std::size_t n = 0;
    for (const auto &inst : instructions) {
        n = std::max(n, inst.wires[0] + 1);
        if (inst.arity() == 2) {
            n = std::max(n, inst.wires[1] + 1);
        }
    }
    return n;
}

}  // namespace xstab
