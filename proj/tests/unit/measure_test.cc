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

#include "xstab/measure.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dense.h"
#include "xstab/engine.h"

namespace xstab {
namespace {

TEST(DensityTest, GhzTwo) {
    GeneratorSet gs = run(gen_ghz(2), 2, Mode::V1).final_state;
    PauliExpansion rho = density_expansion(gs);
    EXPECT_EQ(rho.terms().size(), 4u);
    EXPECT_NEAR(rho.coefficient(PauliWord::from_string("II")), 0.25, 1e-15);
    EXPECT_NEAR(rho.coefficient(PauliWord::from_string("XX")), 0.25, 1e-15);
    EXPECT_NEAR(rho.coefficient(PauliWord::from_string("ZZ")), 0.25, 1e-15);
    EXPECT_NEAR(rho.coefficient(PauliWord::from_string("YY")), -0.25, 1e-15);
    EXPECT_NEAR(rho.purity(), 1.0, 1e-12);
}

TEST(DensityTest, MatchesOracleOuterProduct) {
    for (std::uint64_t seed = 0; seed < 25; seed++) {
        std::size_t n = 1 + seed % 4;
        auto circuit = gen_random(n, 25, seed);
        GeneratorSet gs = run(circuit, n, Mode::V3).final_state;
        PauliExpansion rho = density_expansion(gs);
        dense::Vector psi = dense::state(circuit, n);
        auto expected = dense::decompose(psi * psi.adjoint(), n);
        for (std::uint64_t idx = 0; idx < pow4(n); idx++) {
            double e = expected.count(idx) ? expected[idx].real() : 0.0;
            EXPECT_NEAR(rho.coefficient(idx), e, 1e-9) << "seed " << seed << " word " << idx;
        }
    }
}

TEST(ProbTest, GhzHalf) {
    for (std::size_t n : {2, 5, 9}) {
        GeneratorSet gs = run(gen_ghz(n), n, Mode::V2).final_state;
        for (std::size_t k = 0; k < n; k++) {
            ZProbabilities p = prob_z(gs, k);
            EXPECT_NEAR(p.p0, 0.5, 1e-12);
            EXPECT_NEAR(p.p0 + p.p1, 1.0, 1e-15);
        }
    }
}

TEST(ProbTest, InitialState) {
    GeneratorSet gs = init_z(3);
    for (std::size_t k = 0; k < 3; k++) {
        EXPECT_EQ(prob_z(gs, k).p0, 1.0);
    }
    EXPECT_THROW(prob_z(gs, 3), std::domain_error);
}

TEST(ProbTest, MatchesDenseDensity) {
    for (std::uint64_t seed = 0; seed < 30; seed++) {
        std::size_t n = 1 + seed % 4;
        auto circuit = gen_random(n, 30, seed + 500);
        GeneratorSet gs = run(circuit, n, Mode::V1).final_state;
        dense::Matrix rho = dense::density(gs);
        for (std::size_t k = 0; k < n; k++) {
            EXPECT_NEAR(prob_z(gs, k).p0, dense::prob0(rho, k, n), 1e-9);
        }
    }
}

TEST(ExpectationTest, ClosedForms) {
    GeneratorSet ghz = run(gen_ghz(2), 2, Mode::V1).final_state;
    EXPECT_NEAR(expectation(ghz, PauliWord::from_string("ZZ")), 1.0, 1e-12);
    EXPECT_NEAR(expectation(ghz, PauliWord::from_string("ZI")), 0.0, 1e-12);
    for (double t : {0.0, 0.4, 1.9, 3.0, 5.5}) {
        std::vector<Instruction> c = {Instruction::single(Gate::RX, 0, t)};
        GeneratorSet gs = run(c, 1, Mode::V3).final_state;
        EXPECT_NEAR(expectation(gs, PauliWord::from_string("Z")), std::cos(t), 1e-12);
    }
}

TEST(ResourceTest, Caps) {
    EXPECT_THROW(density_expansion(init_z(kMaxMeasureQubits + 1)), ResourceError);
    GeneratorSet gs = run(gen_ghz(4), 4, Mode::V1).final_state;
    EXPECT_THROW(density_expansion(gs, 2), ResourceError);
}

TEST(ConsistencyTest, ImaginaryCoefficientRejected) {
    // X and Z on one qubit are anticommuting "generators"; their product XZ = -iY is not Hermitian.
    GeneratorSet gs;
    gs.num_qubits = 1;
    gs.generators.push_back(SimpleGenerator::from_strings(std::vector<std::pair<double, std::string>>{{1.0, "X"}}));
    gs.generators.push_back(SimpleGenerator::from_strings(std::vector<std::pair<double, std::string>>{{1.0, "Z"}}));
    EXPECT_THROW(density_expansion(gs), ConsistencyError);
}

}  // namespace
}  // namespace xstab
