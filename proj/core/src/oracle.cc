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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "xstab/measure.h"
#include "xstab/parallel.h"

namespace xstab {

namespace {

constexpr std::size_t kAmplitudeGrain = 1 << 14;

}  // namespace

GateMatrix gate_matrix(Gate g, double theta) {
    using namespace std::complex_literals;
    const double r = 1.0 / std::numbers::sqrt2;
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    switch (g) {
        case Gate::H:
            return {{{r, r}, {r, -r}}};
        case Gate::S:
            return {{{1.0, 0.0}, {0.0, 1i}}};
        case Gate::X:
            return {{{0.0, 1.0}, {1.0, 0.0}}};
        case Gate::SX:
            return {{{0.5 + 0.5i, 0.5 - 0.5i}, {0.5 - 0.5i, 0.5 + 0.5i}}};
        case Gate::RX:
            return {{{c, -1i * s}, {-1i * s, c}}};
        case Gate::RY:
            return {{{c, -s}, {s, c}}};
        case Gate::RZ:
            return {{{std::exp(-0.5i * theta), 0.0}, {0.0, std::exp(0.5i * theta)}}};
        case Gate::CX:
            break;
    }
    throw std::domain_error("gate_matrix: CX is not a single-qubit gate.");
}

StateVector::StateVector(std::size_t num_qubits, std::size_t max_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > max_qubits) {
        throw ResourceError(
            "state vector limited to " + std::to_string(max_qubits) + " qubits, got " + std::to_string(num_qubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void StateVector::apply_single(const GateMatrix &m, std::size_t qubit) {
    std::size_t mask = bit(qubit);
    std::size_t half = amps_.size() / 2;
    // Pair index p enumerates basis states with the qubit's bit cleared.
    parallel_for(half, kAmplitudeGrain, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; p++) {
            std::size_t low = p & (mask - 1);
            std::size_t i0 = ((p - low) << 1) | low;
            std::size_t i1 = i0 | mask;
            Amplitude a0 = amps_[i0];
            Amplitude a1 = amps_[i1];
            amps_[i0] = m[0][0] * a0 + m[0][1] * a1;
            amps_[i1] = m[1][0] * a0 + m[1][1] * a1;
        }
    });
}

void StateVector::apply_cx(std::size_t control, std::size_t target) {
    std::size_t cmask = bit(control);
    std::size_t tmask = bit(target);
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amps_[i], amps_[i | tmask]);
        }
    }
}

void StateVector::apply(const Instruction &inst) {
    validate(inst, num_qubits_);
    if (inst.gate == Gate::CX) {
        apply_cx(inst.control(), inst.target());
    } else {
        apply_single(gate_matrix(inst.gate, inst.theta), inst.wire());
    }
}

StateVector sv_run(std::span<const Instruction> instructions, std::size_t num_qubits, std::size_t max_qubits) {
    StateVector state(num_qubits, max_qubits);
    for (const auto &inst : instructions) {
        state.apply(inst);
    }
    return state;
}

double sv_prob_z(const StateVector &state, std::size_t k) {
    std::size_t n = state.num_qubits();
    if (k >= n) {
        throw std::domain_error("sv_prob_z: qubit out of range.");
    }
    std::size_t mask = std::size_t{1} << (n - 1 - k);
    double p0 = 0;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        if ((i & mask) == 0) {
            p0 += std::norm(amps[i]);
        }
    }
    return p0;
}

double sv_expectation(const StateVector &state, const PauliWord &word) {
    using namespace std::complex_literals;
    std::size_t n = state.num_qubits();
    if (word.num_qubits() != n) {
        throw std::domain_error("sv_expectation: word has the wrong qubit count.");
    }
    // P|i> = phase(i) |i ^ flip>, with X and Y flipping, Y contributing i or -i and Z contributing -1 on a set bit.
    std::size_t flip = 0;
    std::size_t zmask = 0;
    std::size_t ymask = 0;
    for (std::size_t q = 0; q < n; q++) {
        std::size_t b = std::size_t{1} << (n - 1 - q);
        switch (word[q]) {
            case PauliAxis::X:
                flip |= b;
                break;
            case PauliAxis::Y:
                flip |= b;
                ymask |= b;
                break;
            case PauliAxis::Z:
                zmask |= b;
                break;
            case PauliAxis::I:
                break;
        }
    }
    auto amps = state.amplitudes();
    Amplitude total = 0;
    for (std::size_t i = 0; i < amps.size(); i++) {
        // Y|0> = i|1>, Y|1> = -i|0>.
        std::size_t ybits = i & ymask;
        std::size_t ones = static_cast<std::size_t>(std::popcount(ybits));
        std::size_t zeros = static_cast<std::size_t>(std::popcount(ymask)) - ones;
        int exponent = static_cast<int>((zeros + 3 * ones) % 4);
        static const Amplitude kPowers[4] = {1.0, 1i, -1.0, -1i};
        Amplitude phase = kPowers[exponent];
        if (std::popcount(i & zmask) % 2 == 1) {
            phase = -phase;
        }
        total += std::conj(amps[i ^ flip]) * phase * amps[i];
    }
    return total.real();
}

std::vector<PauliWord> comparison_words(std::size_t num_qubits) {
    std::vector<PauliWord> words;
    for (std::size_t q = 0; q < num_qubits; q++) {
        for (PauliAxis a : kNonIdentityAxes) {
            words.push_back(PauliWord::single(num_qubits, q, a));
        }
    }
    for (std::size_t q = 0; q + 1 < num_qubits; q++) {
        for (PauliAxis a : kNonIdentityAxes) {
            PauliWord w = PauliWord::identity(num_qubits);
            w.set(q, a);
            w.set(q + 1, a);
            words.push_back(std::move(w));
        }
    }
    return words;
}

DeviationReport compare(const GeneratorSet &gs, const StateVector &state) {
    DeviationReport report;
    if (gs.num_qubits != state.num_qubits()) {
        report.max_prob_deviation = 1.0;
        report.max_expectation_deviation = 2.0;
        return report;
    }
    std::size_t n = gs.num_qubits;
    PauliExpansion rho = density_expansion(gs);
    for (std::size_t k = 0; k < n; k++) {
        double dev = std::abs(prob_z(rho, k).p0 - sv_prob_z(state, k));
        report.max_prob_deviation = std::max(report.max_prob_deviation, dev);
    }
    for (const auto &w : comparison_words(n)) {
        double dev = std::abs(expectation(rho, w) - sv_expectation(state, w));
        report.max_expectation_deviation = std::max(report.max_expectation_deviation, dev);
        report.words_checked++;
    }
    return report;
}

}  // namespace xstab
