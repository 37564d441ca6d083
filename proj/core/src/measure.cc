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

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace xstab {

namespace {

constexpr double kImaginaryTolerance = 1e-10;
// Intermediate products smaller than this are cancellation residue. Generator coefficients satisfy
// sum lambda^2 = 1, so partial products stay O(1).
constexpr double kPruneTolerance = 1e-14;

using Accumulator = std::unordered_map<std::uint64_t, std::complex<double>>;

Accumulator multiply_by_generator(const Accumulator &current, const SimpleGenerator &g) {
    Accumulator next;
    next.reserve(current.size() * 2);
    for (const auto &[index, c] : current) {
        next[index] += c;
    }
    for (const auto &[index, c] : current) {
        for (std::size_t s = 0; s < g.rank(); s++) {
            std::uint64_t word = 0;
            std::uint64_t a = index;
            std::uint64_t b = g.index(s);
            Phase phase = word_mul_limbs({&a, 1}, {&b, 1}, {&word, 1});
            next[word] += c * g.lambda(s) * phase.value();
        }
    }
    for (auto it = next.begin(); it != next.end();) {
        if (std::abs(it->second) < kPruneTolerance) {
            it = next.erase(it);
        } else {
            ++it;
        }
    }
    return next;
}

}  // namespace

double PauliExpansion::coefficient(std::uint64_t index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? 0.0 : it->second;
}

double PauliExpansion::coefficient(const PauliWord &word) const {
    if (word.num_qubits() != num_qubits_) {
        throw std::domain_error("PauliExpansion: word has the wrong qubit count.");
    }
    return coefficient(word.index());
}

double PauliExpansion::purity() const {
    double total = 0;
    for (const auto &[index, c] : terms_) {
        total += c * c;
    }
    return std::ldexp(total, static_cast<int>(num_qubits_));
}

PauliExpansion density_expansion(const GeneratorSet &gs, std::size_t budget) {
    std::size_t n = gs.num_qubits;
    if (n > kMaxMeasureQubits) {
        throw ResourceError(
            "density expansion limited to " + std::to_string(kMaxMeasureQubits) + " qubits, got " + std::to_string(n));
    }
    Accumulator current;
    current[0] = 1.0;
    std::size_t used = 0;
    for (const auto &g : gs.generators) {
        std::size_t cost = current.size() * g.rank();
        if (cost > budget - std::min(budget, used)) {
            throw ResourceError("density expansion exceeded its budget of " + std::to_string(budget) + " word products");
        }
        used += cost;
        current = multiply_by_generator(current, g);
    }

    PauliExpansion rho(n);
    double scale = std::ldexp(1.0, -static_cast<int>(n));
    for (const auto &[index, c] : current) {
        std::complex<double> v = c * scale;
        if (std::abs(v.imag()) > kImaginaryTolerance) {
            throw ConsistencyError(
                "density expansion: coefficient of " + PauliWord::from_index(index, n).str() + " has imaginary part " +
                std::to_string(v.imag()));
        }
        rho.set(index, v.real());
    }
    return rho;
}

ZProbabilities prob_z(const PauliExpansion &rho, std::size_t k) {
    std::size_t n = rho.num_qubits();
    if (k >= n) {
        throw std::domain_error("prob_z: qubit " + std::to_string(k) + " out of range for " + std::to_string(n) + " qubits.");
    }
    double zk = rho.coefficient(PauliWord::single(n, k, PauliAxis::Z));
    double p0 = 0.5 + std::ldexp(zk, static_cast<int>(n) - 1);
    if (p0 < -kImaginaryTolerance || p0 > 1 + kImaginaryTolerance) {
        throw ConsistencyError("prob_z: probability " + std::to_string(p0) + " outside [0, 1]");
    }
    p0 = std::clamp(p0, 0.0, 1.0);
    return {p0, 1.0 - p0};
}

ZProbabilities prob_z(const GeneratorSet &gs, std::size_t k) {
    if (k >= gs.num_qubits) {
        throw std::domain_error(
            "prob_z: qubit " + std::to_string(k) + " out of range for " + std::to_string(gs.num_qubits) + " qubits.");
    }
    return prob_z(density_expansion(gs), k);
}

double expectation(const PauliExpansion &rho, const PauliWord &word) {
    return std::ldexp(rho.coefficient(word), static_cast<int>(rho.num_qubits()));
}

double expectation(const GeneratorSet &gs, const PauliWord &word) {
    return expectation(density_expansion(gs), word);
}

}  // namespace xstab
