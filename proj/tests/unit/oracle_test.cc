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

#include "xstab/oracle.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dense.h"
#include "xstab/engine.h"

namespace xstab {
namespace {

TEST(GateMatrixTest, MatchesReference) {
    for (Gate g : kSingleQubitGates) {
        for (double t : {0.0, 0.3, 2.2}) {
            double theta = is_parameterized(g) ? t : 0.0;
            GateMatrix m = gate_matrix(g, theta);
            dense::Matrix ref = dense::single_gate(g, theta);
            for (int r = 0; r < 2; r++) {
                for (int c = 0; c < 2; c++) {
                    EXPECT_NEAR(std::abs(m[r][c] - ref(r, c)), 0.0, 1e-15) << gate_name(g);
                }
            }
        }
    }
    EXPECT_THROW(gate_matrix(Gate::CX, 0), std::domain_error);
}

TEST(StateVectorTest, Ghz3) {
    StateVector s = sv_run(gen_ghz(3), 3);
    EXPECT_NEAR(s.amplitude(0).real(), 1 / std::numbers::sqrt2, 1e-15);
    EXPECT_NEAR(s.amplitude(7).real(), 1 / std::numbers::sqrt2, 1e-15);
    for (std::size_t i = 1; i < 7; i++) {
        EXPECT_EQ(std::abs(s.amplitude(i)), 0.0);
    }
}

TEST(StateVectorTest, NormAndReference) {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        std::size_t n = 1 + seed % 5;
        auto circuit = gen_random(n, 40, seed);
        StateVector s(n);
        for (const auto &inst : circuit) {
            s.apply(inst);
            EXPECT_NEAR(s.norm(), 1.0, 1e-12);
        }
        dense::Vector psi = dense::state(circuit, n);
        for (std::size_t i = 0; i < s.amplitudes().size(); i++) {
            EXPECT_NEAR(std::abs(s.amplitude(i) - psi(static_cast<Eigen::Index>(i))), 0.0, 1e-12);
        }
    }
}

TEST(StateVectorTest, RxExpectation) {
    for (double t : {0.2, 1.0, 2.8, 4.0}) {
        std::vector<Instruction> c = {Instruction::single(Gate::RX, 0, t)};
        StateVector s = sv_run(c, 2);
        EXPECT_NEAR(sv_expectation(s, PauliWord::from_string("ZI")), std::cos(t), 1e-14);
        EXPECT_NEAR(sv_expectation(s, PauliWord::from_string("YI")), -std::sin(t), 1e-14);
        EXPECT_NEAR(sv_prob_z(s, 0), (1 + std::cos(t)) / 2, 1e-14);
    }
}

TEST(StateVectorTest, ExpectationMatchesDense) {
    auto circuit = gen_random(3, 30, 77);
    StateVector s = sv_run(circuit, 3);
    dense::Vector psi = dense::state(circuit, 3);
    for (std::uint64_t idx = 0; idx < 64; idx++) {
        PauliWord w = PauliWord::from_index(idx, 3);
        double expected = (psi.adjoint() * dense::word(w) * psi)(0).real();
        EXPECT_NEAR(sv_expectation(s, w), expected, 1e-12) << w.str();
    }
}

TEST(StateVectorTest, SelfInverseGates) {
    auto prep = gen_random(3, 30, 4);
    StateVector ref = sv_run(prep, 3);
    auto same = [&](const StateVector &s) {
        double worst = 0;
        for (std::size_t i = 0; i < 8; i++) {
            worst = std::max(worst, std::abs(s.amplitude(i) - ref.amplitude(i)));
        }
        return worst;
    };
    StateVector s = ref;
    s.apply_cx(0, 2);
    s.apply_cx(0, 2);
    EXPECT_LT(same(s), 1e-15);
    s.apply(Instruction::single(Gate::H, 1));
    s.apply(Instruction::single(Gate::H, 1));
    EXPECT_LT(same(s), 1e-15);
    for (int k = 0; k < 4; k++) {
        s.apply(Instruction::single(Gate::S, 2));
    }
    EXPECT_LT(same(s), 1e-15);
}

TEST(StateVectorTest, Caps) {
    EXPECT_THROW(StateVector(kOracleMaxQubits + 1), ResourceError);
    EXPECT_NO_THROW(StateVector(3, 3));
    EXPECT_THROW(sv_prob_z(StateVector(2), 2), std::domain_error);
}

TEST(CompareTest, EngineMatchesOracle) {
    for (std::uint64_t seed = 0; seed < 30; seed++) {
        std::size_t n = 2 + seed % 4;
        auto circuit = gen_random(n, 40, seed + 1000);
        GeneratorSet gs = run(circuit, n, Mode::V3).final_state;
        DeviationReport r = compare(gs, sv_run(circuit, n));
        EXPECT_LT(r.max_prob_deviation, 1e-9);
        EXPECT_LT(r.max_expectation_deviation, 1e-9);
        EXPECT_EQ(r.words_checked, comparison_words(n).size());
    }
}

TEST(CompareTest, FaultIsDetected) {
    std::vector<Instruction> c = {Instruction::single(Gate::SX, 0), Instruction::single(Gate::S, 0), Instruction::single(Gate::H, 0)};
    GeneratorSet gs;
    {
        testing::ScopedLutFault fault;
        gs = run(c, 1, Mode::V2).final_state;
    }
    DeviationReport r = compare(gs, sv_run(c, 1));
    EXPECT_GT(r.max_prob_deviation, 0.9);
}

}  // namespace
}  // namespace xstab
