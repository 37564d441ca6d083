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

#include "xstab/pauli.h"

#include <gtest/gtest.h>

#include <random>

#include "dense.h"

namespace xstab {
namespace {

TEST(PauliAxisTest, Codes) {
    EXPECT_EQ(axis_to_index(PauliAxis::I), 0);
    EXPECT_EQ(axis_to_index(PauliAxis::X), 1);
    EXPECT_EQ(axis_to_index(PauliAxis::Y), 2);
    EXPECT_EQ(axis_to_index(PauliAxis::Z), 3);
    for (int i = 0; i < 4; i++) {
        EXPECT_EQ(axis_to_index(index_to_axis(i)), i);
    }
    EXPECT_THROW(index_to_axis(4), std::domain_error);
    EXPECT_THROW(index_to_axis(-1), std::domain_error);
    EXPECT_THROW(char_to_axis('Q'), std::domain_error);
}

TEST(PauliAxisTest, OneHotWeights) {
    EXPECT_EQ(axis_to_weight(PauliAxis::Y), (AxisWeights{0, 0, 1, 0}));
    for (PauliAxis a : kAllAxes) {
        EXPECT_EQ(weight_to_axis(axis_to_weight(a)), a);
    }
    EXPECT_THROW(weight_to_axis({0, 1, 1, 0}), std::domain_error);
    EXPECT_THROW(weight_to_axis({0, 0, 0, 0}), std::domain_error);
    EXPECT_THROW(weight_to_axis({0, 0.5, 0, 0}), std::domain_error);
}

TEST(PauliWordTest, IndexExamples) {
    EXPECT_EQ(PauliWord::from_string("XYZ").index(), 27u);
    EXPECT_EQ(PauliWord::from_index(27, 3).str(), "XYZ");
    EXPECT_EQ(index_to_word(27, 3), (std::vector<PauliAxis>{PauliAxis::X, PauliAxis::Y, PauliAxis::Z}));
    EXPECT_EQ(PauliWord::from_string("YZ").index(), 11u);
    EXPECT_EQ(PauliWord::from_string("ZZ").index(), 15u);
    EXPECT_EQ(PauliWord::from_string("IX").index(), 1u);
    EXPECT_EQ(PauliWord::from_string("IZ").index(), 3u);
    for (std::size_t n = 1; n <= 8; n++) {
        EXPECT_EQ(PauliWord::identity(n).index(), 0u);
        EXPECT_EQ(PauliWord::from_string(std::string(n, 'Z')).index(), pow4(n) - 1);
    }
}

TEST(PauliWordTest, RoundTripAllSmallWords) {
    for (std::size_t n = 1; n <= 5; n++) {
        for (std::uint64_t i = 0; i < pow4(n); i++) {
            PauliWord w = PauliWord::from_index(i, n);
            EXPECT_EQ(w.index(), i);
            EXPECT_EQ(word_to_index(w.axes()), i);
            EXPECT_EQ(PauliWord::from_string(w.str()), w);
        }
    }
    EXPECT_THROW(PauliWord::from_index(64, 3), std::domain_error);
    EXPECT_THROW(PauliWord::from_index(0, 33), std::domain_error);
}

TEST(PauliWordTest, MultiLimbWords) {
    std::mt19937_64 rng(7);
    for (std::size_t n : {33, 64, 65, 100}) {
        std::string s(n, 'I');
        for (auto &c : s) {
            c = "IXYZ"[rng() % 4];
        }
        PauliWord w = PauliWord::from_string(s);
        EXPECT_EQ(w.str(), s);
        EXPECT_EQ(w.limbs().size(), word_bits::limb_count(n));
        EXPECT_EQ(PauliWord::from_limbs(w.limbs(), n), w);
        EXPECT_THROW(w.index(), std::domain_error);
    }
}

TEST(PauliWordTest, OrderMatchesIndexOrder) {
    for (std::uint64_t a = 0; a < 64; a++) {
        for (std::uint64_t b = 0; b < 64; b++) {
            EXPECT_EQ(PauliWord::from_index(a, 3) < PauliWord::from_index(b, 3), a < b);
        }
    }
    // Lexicographic string order with I<X<Y<Z also holds across limbs.
    PauliWord lo = PauliWord::from_string(std::string(40, 'I') + "X");
    PauliWord hi = PauliWord::from_string("X" + std::string(40, 'I'));
    EXPECT_LT(lo, hi);
}

TEST(PauliWordTest, WeightAndSingle) {
    EXPECT_EQ(PauliWord::single(4, 1, PauliAxis::Z).str(), "IZII");
    EXPECT_EQ(PauliWord::from_string("XIYZ").weight(), 3u);
    EXPECT_TRUE(PauliWord::from_string("III").is_identity());
    EXPECT_FALSE(PauliWord::from_string("IIX").is_identity());
}

TEST(PhaseTest, GroupZ4) {
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            EXPECT_EQ((Phase(a) * Phase(b)).exponent(), (a + b) % 4);
        }
    }
    EXPECT_EQ(Phase(-1), Phase::minus_i());
    EXPECT_EQ(Phase::i() * Phase::i(), Phase::minus_one());
    EXPECT_TRUE(Phase::minus_one().is_real());
    EXPECT_EQ(Phase::minus_one().real_sign(), -1);
    EXPECT_FALSE(Phase::i().is_real());
}

TEST(PauliMulTest, AxisTableMatchesMatrices) {
    for (PauliAxis a : kAllAxes) {
        for (PauliAxis b : kAllAxes) {
            AxisProduct p = axis_mul(a, b);
            dense::Matrix lhs = dense::pauli(a) * dense::pauli(b);
            dense::Matrix rhs = p.phase.value() * dense::pauli(p.axis);
            EXPECT_LT((lhs - rhs).norm(), 1e-15) << axis_to_char(a) << axis_to_char(b);
        }
    }
}

TEST(PauliMulTest, XXTimesZZ) {
    WordProduct p = word_mul(PauliWord::from_string("XX"), PauliWord::from_string("ZZ"));
    EXPECT_EQ(p.phase, Phase::minus_one());
    EXPECT_EQ(p.word.str(), "YY");
    EXPECT_THROW(word_mul(PauliWord::from_string("XX"), PauliWord::from_string("X")), std::domain_error);
}

TEST(PauliMulTest, AllThreeQubitProductsMatchMatrices) {
    for (std::uint64_t a = 0; a < 64; a++) {
        for (std::uint64_t b = 0; b < 64; b++) {
            PauliWord pa = PauliWord::from_index(a, 3);
            PauliWord pb = PauliWord::from_index(b, 3);
            WordProduct p = word_mul(pa, pb);
            dense::Matrix diff = dense::word(pa) * dense::word(pb) - p.phase.value() * dense::word(p.word);
            ASSERT_LT(diff.norm(), 1e-14) << pa.str() << "*" << pb.str();
        }
    }
}

TEST(PauliMulTest, MultiLimbProductIsQubitwise) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t n = 70;
        std::vector<PauliAxis> a(n), b(n);
        for (std::size_t q = 0; q < n; q++) {
            a[q] = index_to_axis(static_cast<int>(rng() % 4));
            b[q] = index_to_axis(static_cast<int>(rng() % 4));
        }
        Phase expected;
        std::vector<PauliAxis> c(n);
        for (std::size_t q = 0; q < n; q++) {
            AxisProduct p = axis_mul(a[q], b[q]);
            expected *= p.phase;
            c[q] = p.axis;
        }
        WordProduct p = word_mul(PauliWord::from_axes(a), PauliWord::from_axes(b));
        EXPECT_EQ(p.phase, expected);
        EXPECT_EQ(p.word, PauliWord::from_axes(c));
    }
}

TEST(PauliMulTest, Closure) {
    // Products of Hermitian Paulis stay in the Pauli group up to a phase in {1, i, -1, -i}.
    for (std::uint64_t a = 0; a < 16; a++) {
        for (std::uint64_t b = 0; b < 16; b++) {
            for (std::uint64_t c = 0; c < 16; c++) {
                PauliWord x = PauliWord::from_index(a, 2), y = PauliWord::from_index(b, 2), z = PauliWord::from_index(c, 2);
                WordProduct xy = word_mul(x, y);
                WordProduct yz = word_mul(y, z);
                WordProduct left = word_mul(xy.word, z);
                WordProduct right = word_mul(x, yz.word);
                EXPECT_EQ(left.word, right.word);
                EXPECT_EQ(xy.phase * left.phase, yz.phase * right.phase);
            }
        }
    }
}

}  // namespace
}  // namespace xstab
