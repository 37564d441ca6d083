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

#ifndef XSTAB_LUT_H
#define XSTAB_LUT_H

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "xstab/circuit.h"
#include "xstab/pauli.h"

namespace xstab {

/// Weights over (X, Y, Z).
using WeightRow = std::array<double, 3>;

/// Row p (0=X, 1=Y, 2=Z) is the conjugated image of that axis as an (X, Y, Z) weight row.
using LutBlock = std::array<WeightRow, 3>;

inline constexpr LutBlock kIdentityBlock = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

/// Heisenberg update U p U^dag of a weight row under one single-qubit gate, with R_a(theta) = exp(-i theta a / 2).
/// Throws std::domain_error for CX.
WeightRow conjugate_axis(Gate gate, double theta, const WeightRow &w);

/// Folds conjugate_axis over a gate list in order.
WeightRow conjugate_axis(std::span<const Instruction> gates, const WeightRow &w);

/// One 3x3 block per (single-qubit operator k, qubit j).
class SingleQubitLut {
   public:
    SingleQubitLut() = default;
    SingleQubitLut(std::size_t num_operators, std::size_t num_qubits)
        : num_operators_(num_operators), num_qubits_(num_qubits), blocks_(num_operators * num_qubits, kIdentityBlock) {
    }

    std::size_t num_operators() const {
        return num_operators_;
    }
    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const LutBlock &block(std::size_t k, std::size_t j) const {
        return blocks_[k * num_qubits_ + j];
    }
    LutBlock &block(std::size_t k, std::size_t j) {
        return blocks_[k * num_qubits_ + j];
    }
    /// The n blocks of operator k.
    std::span<const LutBlock> operator_blocks(std::size_t k) const {
        return std::span<const LutBlock>(blocks_).subspan(k * num_qubits_, num_qubits_);
    }

    /// Nested K x n x 3 x 3 JSON array.
    std::string to_json() const;

   private:
    std::size_t num_operators_ = 0;
    std::size_t num_qubits_ = 0;
    std::vector<LutBlock> blocks_;
};

/// Builds every (k, j, p) cell independently; the result does not depend on the worker count.
SingleQubitLut create_lut_1q(const OperatorPartition &partition);

/// Conjugation tables for CX; row = control axis code, column = target axis code.
inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kCxLutControl = {{
    {0, 0, 3, 3},
    {1, 1, 2, 2},
    {2, 2, 1, 1},
    {3, 3, 0, 0},
}};
inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kCxLutTarget = {{
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {1, 0, 3, 2},
    {0, 1, 2, 3},
}};
inline constexpr std::array<std::array<std::int8_t, 4>, 4> kCxLutSign = {{
    {1, 1, 1, 1},
    {1, 1, 1, -1},
    {1, 1, -1, 1},
    {1, 1, 1, 1},
}};

struct CxImage {
    PauliAxis control;
    PauliAxis target;
    int sign;
    bool operator==(const CxImage &) const = default;
};

inline CxImage cx_lookup(PauliAxis c, PauliAxis t) {
    auto ci = static_cast<std::size_t>(c);
    auto ti = static_cast<std::size_t>(t);
    return {static_cast<PauliAxis>(kCxLutControl[ci][ti]), static_cast<PauliAxis>(kCxLutTarget[ci][ti]), kCxLutSign[ci][ti]};
}

namespace testing {

/// While alive, flips the sign of the S-gate Y row in conjugate_axis. Used to check that differential
/// verification catches a corrupted table. Not thread-safe to construct concurrently with simulation.
class ScopedLutFault {
   public:
    ScopedLutFault();
    ~ScopedLutFault();
    ScopedLutFault(const ScopedLutFault &) = delete;
    ScopedLutFault &operator=(const ScopedLutFault &) = delete;
};

bool lut_fault_active();

}  // namespace testing

}  // namespace xstab

#endif
