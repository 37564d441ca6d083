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

#ifndef XSTAB_ORACLE_H
#define XSTAB_ORACLE_H

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "xstab/circuit.h"
#include "xstab/errors.h"
#include "xstab/pauli.h"
#include "xstab/stabilizer.h"

namespace xstab {

/// Default largest register for the dense reference simulator.
inline constexpr std::size_t kOracleMaxQubits = 14;

using Amplitude = std::complex<double>;
using GateMatrix = std::array<std::array<Amplitude, 2>, 2>;

/// 2x2 unitary of a single-qubit gate; R_a(theta) = exp(-i theta a / 2), S = diag(1, i), SX = sqrt(X).
GateMatrix gate_matrix(Gate g, double theta);

/// Dense 2^n amplitudes. Basis index bit (n - 1 - q) is qubit q, so qubit 0 is the most significant bit.
class StateVector {
   public:
    StateVector() = default;
    /// |0...0>. Throws ResourceError above max_qubits.
    explicit StateVector(std::size_t num_qubits, std::size_t max_qubits = kOracleMaxQubits);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    std::span<Amplitude> amplitudes() {
        return amps_;
    }
    Amplitude amplitude(std::size_t basis) const {
        return amps_[basis];
    }
    double norm() const;

    void apply(const Instruction &inst);
    void apply_single(const GateMatrix &m, std::size_t qubit);
    void apply_cx(std::size_t control, std::size_t target);

   private:
    std::size_t bit(std::size_t qubit) const {
        return std::size_t{1} << (num_qubits_ - 1 - qubit);
    }

    std::size_t num_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

/// Applies the instructions in order to |0...0>.
StateVector sv_run(std::span<const Instruction> instructions, std::size_t num_qubits, std::size_t max_qubits = kOracleMaxQubits);

/// Probability of outcome 0 when measuring qubit k.
double sv_prob_z(const StateVector &state, std::size_t k);
/// <psi|P|psi>.
double sv_expectation(const StateVector &state, const PauliWord &word);

struct DeviationReport {
    /// max_k |p0(generators) - p0(state)|.
    double max_prob_deviation = 0;
    /// Max |<P>_generators - <P>_state| over the sampled words.
    double max_expectation_deviation = 0;
    std::size_t words_checked = 0;
};

/// Words checked by compare(): every single-qubit X/Y/Z, and XX/YY/ZZ on neighbouring qubits.
std::vector<PauliWord> comparison_words(std::size_t num_qubits);

/// Diagnostic comparison; never throws on disagreement.
DeviationReport compare(const GeneratorSet &gs, const StateVector &state);

}  // namespace xstab

#endif
