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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dense.h"
#include "xstab/oracle.h"

namespace xstab {
namespace {

TEST(GateTest, NamesRoundTrip) {
    for (Gate g : {Gate::H, Gate::S, Gate::X, Gate::SX, Gate::RX, Gate::RY, Gate::RZ, Gate::CX}) {
        EXPECT_EQ(gate_from_name(gate_name(g)), g);
    }
    EXPECT_FALSE(gate_from_name("cz").has_value());
    EXPECT_FALSE(gate_from_name("H").has_value());
    EXPECT_EQ(gate_arity(Gate::CX), 2u);
    EXPECT_TRUE(is_parameterized(Gate::RY));
    EXPECT_FALSE(is_clifford(Gate::RZ));
    EXPECT_TRUE(is_clifford(Gate::SX));
}

TEST(ValidateTest, Rejects) {
    EXPECT_THROW(validate(Instruction::single(Gate::H, 3), 3), std::domain_error);
    EXPECT_THROW(validate(Instruction::cx(1, 1), 3), std::domain_error);
    EXPECT_THROW(validate(Instruction::cx(0, 5), 3), std::domain_error);
    EXPECT_THROW(validate(Instruction::single(Gate::H, 0, 0.5), 3), std::domain_error);
    EXPECT_NO_THROW(validate(Instruction::single(Gate::RZ, 2, 0.5), 3));
}

std::vector<Instruction> example_circuit() {
    return {
        Instruction::single(Gate::H, 0),
        Instruction::single(Gate::RZ, 1, 0.3),
        Instruction::single(Gate::S, 0),
        Instruction::cx(0, 1),
        Instruction::cx(1, 2),
        Instruction::single(Gate::SX, 2),
        Instruction::cx(2, 0),
    };
}

TEST(PartitionTest, MaximalRuns) {
    auto circuit = example_circuit();
    OperatorPartition p = divide_instruction(circuit, 3);
    ASSERT_EQ(p.num_single(), 2u);
    ASSERT_EQ(p.num_two(), 2u);
    EXPECT_EQ(p.order, (std::vector<std::uint8_t>{0, 1, 0, 1}));
    EXPECT_EQ(p.single[0].per_qubit[0].size(), 2u);
    EXPECT_EQ(p.single[0].per_qubit[0][0].gate, Gate::H);
    EXPECT_EQ(p.single[0].per_qubit[0][1].gate, Gate::S);
    EXPECT_EQ(p.single[0].per_qubit[1].size(), 1u);
    EXPECT_TRUE(p.single[0].per_qubit[2].empty());
    EXPECT_EQ(p.two[0].gates.size(), 2u);
    EXPECT_EQ(p.two[1].gates.size(), 1u);
}

TEST(PartitionTest, FlattenedIsEquivalent) {
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        auto circuit = gen_random(4, 40, seed);
        OperatorPartition p = divide_instruction(circuit, 4);
        EXPECT_EQ(p.order, create_chain(p.num_single(), p.num_two(), p.order.empty() || p.order[0] == 0));
        auto replay = p.flattened();
        ASSERT_EQ(replay.size(), circuit.size());
        dense::Matrix diff = dense::unitary(circuit, 4) - dense::unitary(replay, 4);
        EXPECT_LT(diff.norm(), 1e-12) << "seed " << seed;
    }
}

TEST(PartitionTest, StartsWithTwoQubitOperator) {
    std::vector<Instruction> circuit = {Instruction::cx(0, 1), Instruction::single(Gate::H, 0)};
    OperatorPartition p = divide_instruction(circuit, 2);
    EXPECT_EQ(p.order, (std::vector<std::uint8_t>{1, 0}));
}

TEST(ChainTest, Alternates) {
    EXPECT_EQ(create_chain(3, 2, true), (std::vector<std::uint8_t>{0, 1, 0, 1, 0}));
    EXPECT_EQ(create_chain(2, 2, false), (std::vector<std::uint8_t>{1, 0, 1, 0}));
    EXPECT_EQ(create_chain(0, 0, true), (std::vector<std::uint8_t>{}));
    EXPECT_THROW(create_chain(3, 1, true), std::domain_error);
    EXPECT_THROW(create_chain(2, 3, true), std::domain_error);
}

TEST(GeneratorTest, GhzStructure) {
    auto c = gen_ghz(4);
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c[0], Instruction::single(Gate::H, 0));
    EXPECT_EQ(c[3], Instruction::cx(2, 3));
    EXPECT_EQ(gen_ghz(100).size(), 100u);
    dense::Vector psi = dense::state(gen_ghz(3), 3);
    EXPECT_NEAR(std::abs(psi(0)), 1 / std::numbers::sqrt2, 1e-12);
    EXPECT_NEAR(std::abs(psi(7)), 1 / std::numbers::sqrt2, 1e-12);
}

TEST(GeneratorTest, XyzChainCounts) {
    for (std::size_t n : {2, 3, 4}) {
        for (std::size_t layers : {1, 3}) {
            for (std::size_t repeats : {1, 5}) {
                auto c = gen_xyz_chain(n, layers, repeats, 1);
                EXPECT_EQ(c.size(), layers * (3 * n * repeats + n - 1));
                OperatorPartition p = divide_instruction(c, n);
                EXPECT_EQ(p.num_operators(), 2 * layers);
            }
        }
    }
    auto a = gen_xyz_chain(3, 2, 2, 99);
    auto b = gen_xyz_chain(3, 2, 2, 99);
    EXPECT_EQ(a, b);
    for (const auto &inst : a) {
        if (is_parameterized(inst.gate)) {
            EXPECT_GT(inst.theta, 0.0);
            EXPECT_LT(inst.theta, 2 * std::numbers::pi);
        }
    }
}

TEST(GeneratorTest, RingGraph) {
    auto edges = ring_edges(4);
    EXPECT_EQ(edges.size(), 4u);
    auto c = gen_graph(4, edges);
    EXPECT_EQ(c.size(), 4u + 3u * 4u);
    // The graph state has <X_a Z_{a-1} Z_{a+1}> = 1.
    dense::Vector psi = dense::state(c, 4);
    dense::Matrix k = dense::word("XZIZ");
    EXPECT_NEAR((psi.adjoint() * k * psi)(0).real(), 1.0, 1e-12);
}

TEST(GeneratorTest, RandomIsSeeded) {
    EXPECT_EQ(gen_random(5, 60, 3), gen_random(5, 60, 3));
    EXPECT_NE(gen_random(5, 60, 3), gen_random(5, 60, 4));
    for (const auto &inst : gen_random(3, 200, 5, true)) {
        EXPECT_TRUE(is_clifford(inst.gate));
    }
    EXPECT_NO_THROW(validate(gen_random(2, 200, 6), 2));
}

TEST(ParseTest, TextFormat) {
    auto c = parse_circuit("# example\nh 0\nrz 1 0.5   # trailing\n\ncx 0 1\nsx 2\n");
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c[0], Instruction::single(Gate::H, 0));
    EXPECT_EQ(c[1], Instruction::single(Gate::RZ, 1, 0.5));
    EXPECT_EQ(c[2], Instruction::cx(0, 1));
    EXPECT_EQ(min_qubits(c), 3u);
}

TEST(ParseTest, ErrorsCarryLineNumbers) {
    auto line_of = [](const std::string &text) {
        try {
            parse_circuit(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return std::size_t{0};
    };
    EXPECT_EQ(line_of("h 0\nfoo 1\n"), 2u);
    EXPECT_EQ(line_of("h 0\n\nrx 0\n"), 3u);
    EXPECT_EQ(line_of("h 0 0.5\n"), 1u);
    EXPECT_EQ(line_of("cx 0\n"), 1u);
    EXPECT_EQ(line_of("cx 1 1\n"), 1u);
    EXPECT_EQ(line_of("h x\n"), 1u);
    EXPECT_EQ(line_of("rz 0 0.1 7\n"), 1u);
}

TEST(ParseTest, JsonFormat) {
    auto c = parse_circuit(R"([{"gate":"h","wires":[0]},{"gate":"ry","wires":[1],"theta":1.25},{"gate":"cx","wires":[1,0]}])");
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[1], Instruction::single(Gate::RY, 1, 1.25));
    EXPECT_EQ(c[2], Instruction::cx(1, 0));
    EXPECT_THROW(parse_circuit(R"([{"gate":"h"}])"), ParseError);
    EXPECT_THROW(parse_circuit("[1,"), ParseError);
}

TEST(ParseTest, SerializeRoundTrip) {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        auto c = gen_random(4, 50, seed);
        EXPECT_EQ(parse_circuit(serialize_circuit(c)), c);
        EXPECT_EQ(parse_circuit(serialize_circuit_json(c)), c);
    }
}

}  // namespace
}  // namespace xstab
