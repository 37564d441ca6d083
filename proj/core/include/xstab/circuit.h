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

#ifndef XSTAB_CIRCUIT_H
#define XSTAB_CIRCUIT_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xstab {

enum class Gate : std::uint8_t { H, S, X, SX, RX, RY, RZ, CX };

inline constexpr std::array<Gate, 7> kSingleQubitGates = {Gate::H, Gate::S, Gate::X, Gate::SX, Gate::RX, Gate::RY, Gate::RZ};

/// Lowercase name as used in circuit files ("h", "sx", "rz", "cx", ...).
std::string_view gate_name(Gate g);
std::optional<Gate> gate_from_name(std::string_view name);
bool is_parameterized(Gate g);
bool is_clifford(Gate g);
std::size_t gate_arity(Gate g);

/// A gate tuple {gate, wires, theta}. For CX, wires = {control, target}. theta is 0 for non-parameterized gates.
struct Instruction {
    Gate gate = Gate::H;
    std::array<std::size_t, 2> wires{0, 0};
    double theta = 0.0;

    static Instruction single(Gate g, std::size_t wire, double theta = 0.0);
    static Instruction cx(std::size_t control, std::size_t target);

    std::size_t arity() const {
        return gate_arity(gate);
    }
    std::size_t wire() const {
        return wires[0];
    }
    std::size_t control() const {
        return wires[0];
    }
    std::size_t target() const {
        return wires[1];
    }

    bool operator==(const Instruction &) const = default;
    std::string str() const;
};

/// Throws std::domain_error if a wire is out of range, CX wires coincide, or theta is set on a fixed gate.
void validate(const Instruction &inst, std::size_t num_qubits);
void validate(std::span<const Instruction> instructions, std::size_t num_qubits);

/// A maximal run of single-qubit gates, bucketed by wire. per_qubit[j] keeps the original order.
struct SingleQubitOperator {
    std::vector<std::vector<Instruction>> per_qubit;
};

/// A maximal run of CX gates in circuit order.
struct TwoQubitOperator {
    std::vector<Instruction> gates;
};

enum class OperatorKind : std::uint8_t { SingleQubit = 0, TwoQubit = 1 };

/// Interleaved single-/two-qubit operators of a circuit.
struct OperatorPartition {
    std::size_t num_qubits = 0;
    std::vector<SingleQubitOperator> single;
    std::vector<TwoQubitOperator> two;
    /// Chain of operator kinds; 0 = single-qubit, 1 = two-qubit.
    std::vector<std::uint8_t> order;

    std::size_t num_single() const {
        return single.size();
    }
    std::size_t num_two() const {
        return two.size();
    }
    std::size_t num_operators() const {
        return order.size();
    }
    /// Replays the operators in chain order, emitting each U_k qubit by qubit.
    std::vector<Instruction> flattened() const;
};

OperatorPartition divide_instruction(std::span<const Instruction> instructions, std::size_t num_qubits);

/// Alternating chain of length K + K' starting with 0 when first_is_single. Throws std::domain_error if no
/// alternating chain with those counts and starting kind exists.
std::vector<std::uint8_t> create_chain(std::size_t num_single, std::size_t num_two, bool first_is_single);

/// Source of rotation angles for generated circuits.
using ThetaSource = std::function<double()>;

/// Uniform angles in (0, 2*pi) from a seeded mt19937_64.
ThetaSource seeded_theta_source(std::uint64_t seed);

std::vector<Instruction> gen_ghz(std::size_t num_qubits);

/// H on every qubit, then CZ(a, b) = H(b) CX(a, b) H(b) per edge.
std::vector<Instruction> gen_graph(std::size_t num_qubits, std::span<const std::pair<std::size_t, std::size_t>> edges);
std::vector<std::pair<std::size_t, std::size_t>> ring_edges(std::size_t num_qubits);

/// Per layer: `repeats` times {RX, RY, RZ on every qubit}, then CX(0,1) ... CX(n-2,n-1).
std::vector<Instruction> gen_xyz_chain(std::size_t num_qubits, std::size_t layers, std::size_t repeats, const ThetaSource &thetas);
std::vector<Instruction> gen_xyz_chain(std::size_t num_qubits, std::size_t layers, std::size_t repeats, std::uint64_t seed);

/// Uniformly random gates. With clifford_only, rotations are excluded.
std::vector<Instruction> gen_random(std::size_t num_qubits, std::size_t num_gates, std::uint64_t seed, bool clifford_only = false);

class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string &message);
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

/// Parses the text circuit format (one `<gate> <wire> [<wire2>] [<theta>]` per line, `#` comments) or, when the
/// first non-blank character is '[', a JSON array of {gate, wires, theta} objects.
std::vector<Instruction> parse_circuit(std::string_view text);
/// Text form with shortest round-trip theta formatting.
std::string serialize_circuit(std::span<const Instruction> instructions);
std::string serialize_circuit_json(std::span<const Instruction> instructions);

/// Smallest register size covering every wire.
std::size_t min_qubits(std::span<const Instruction> instructions);

}  // namespace xstab

#endif
