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

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace xstab {

namespace {

constexpr std::uint64_t kLowBits = 0x5555555555555555ULL;

}  // namespace

int axis_to_index(PauliAxis p) {
    return static_cast<int>(p);
}

PauliAxis index_to_axis(int i) {
    if (i < 0 || i > 3) {
        throw std::domain_error("Pauli axis index out of range: " + std::to_string(i));
    }
    return static_cast<PauliAxis>(i);
}

char axis_to_char(PauliAxis p) {
    return "IXYZ"[static_cast<int>(p)];
}

PauliAxis char_to_axis(char c) {
    switch (c) {
        case 'I':
        case '_':
            return PauliAxis::I;
        case 'X':
            return PauliAxis::X;
        case 'Y':
            return PauliAxis::Y;
        case 'Z':
            return PauliAxis::Z;
        default:
            throw std::domain_error(std::string("Not a Pauli character: '") + c + "'");
    }
}

AxisWeights axis_to_weight(PauliAxis p) {
    AxisWeights w{};
    w[static_cast<int>(p)] = 1.0;
    return w;
}

PauliAxis weight_to_axis(const AxisWeights &w) {
    int hot = -1;
    for (int k = 0; k < 4; k++) {
        if (w[k] == 1.0) {
            if (hot >= 0) {
                throw std::domain_error("Weight vector is not one-hot.");
            }
            hot = k;
        } else if (w[k] != 0.0) {
            throw std::domain_error("Weight vector is not one-hot.");
        }
    }
    if (hot < 0) {
        throw std::domain_error("Weight vector is not one-hot.");
    }
    return static_cast<PauliAxis>(hot);
}

std::complex<double> Phase::value() const {
    switch (exponent_) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

std::string Phase::str() const {
    static constexpr const char *kNames[] = {"+1", "+i", "-1", "-i"};
    return kNames[exponent_];
}

AxisProduct axis_mul(PauliAxis a, PauliAxis b) {
    std::uint64_t out = 0;
    std::uint64_t pa = static_cast<std::uint64_t>(a);
    std::uint64_t pb = static_cast<std::uint64_t>(b);
    Phase phase = word_mul_limbs({&pa, 1}, {&pb, 1}, {&out, 1});
    return {phase, static_cast<PauliAxis>(out)};
}

PauliWord PauliWord::identity(std::size_t num_qubits) {
    PauliWord w;
    w.num_qubits_ = num_qubits;
    w.limbs_.assign(word_bits::limb_count(num_qubits), 0);
    return w;
}

PauliWord PauliWord::from_index(std::uint64_t index, std::size_t num_qubits) {
    if (num_qubits > word_bits::kQubitsPerLimb) {
        throw std::domain_error("Integer Pauli indices only cover up to 32 qubits.");
    }
    if (num_qubits < word_bits::kQubitsPerLimb && index >= pow4(num_qubits)) {
        throw std::domain_error(
            "Pauli index " + std::to_string(index) + " out of range for " + std::to_string(num_qubits) + " qubits.");
    }
    PauliWord w = identity(num_qubits);
    w.limbs_[0] = index;
    return w;
}

PauliWord PauliWord::from_axes(std::span<const PauliAxis> axes) {
    PauliWord w = identity(axes.size());
    for (std::size_t q = 0; q < axes.size(); q++) {
        w.set(q, axes[q]);
    }
    return w;
}

PauliWord PauliWord::from_string(std::string_view text) {
    PauliWord w = identity(text.size());
    for (std::size_t q = 0; q < text.size(); q++) {
        w.set(q, char_to_axis(text[q]));
    }
    return w;
}

PauliWord PauliWord::from_limbs(std::span<const std::uint64_t> limbs, std::size_t num_qubits) {
    if (limbs.size() != word_bits::limb_count(num_qubits)) {
        throw std::domain_error("Limb count does not match qubit count.");
    }
    PauliWord w;
    w.num_qubits_ = num_qubits;
    w.limbs_.assign(limbs.begin(), limbs.end());
    return w;
}

PauliWord PauliWord::single(std::size_t num_qubits, std::size_t qubit, PauliAxis axis) {
    if (qubit >= num_qubits) {
        throw std::domain_error("Qubit index out of range.");
    }
    PauliWord w = identity(num_qubits);
    w.set(qubit, axis);
    return w;
}

std::uint64_t PauliWord::index() const {
    if (num_qubits_ > word_bits::kQubitsPerLimb) {
        throw std::domain_error("Integer Pauli indices only cover up to 32 qubits.");
    }
    return limbs_[0];
}

std::vector<PauliAxis> PauliWord::axes() const {
    std::vector<PauliAxis> out(num_qubits_);
    for (std::size_t q = 0; q < num_qubits_; q++) {
        out[q] = (*this)[q];
    }
    return out;
}

std::size_t PauliWord::weight() const {
    std::size_t total = 0;
    for (std::uint64_t limb : limbs_) {
        total += static_cast<std::size_t>(std::popcount((limb | (limb >> 1)) & kLowBits));
    }
    return total;
}

bool PauliWord::is_identity() const {
    return std::all_of(limbs_.begin(), limbs_.end(), [](std::uint64_t limb) {
        return limb == 0;
    });
}

std::string PauliWord::str() const {
    std::string out(num_qubits_, 'I');
    for (std::size_t q = 0; q < num_qubits_; q++) {
        out[q] = axis_to_char((*this)[q]);
    }
    return out;
}

std::strong_ordering PauliWord::operator<=>(const PauliWord &other) const {
    if (auto c = num_qubits_ <=> other.num_qubits_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(limbs_.begin(), limbs_.end(), other.limbs_.begin(), other.limbs_.end());
}

std::uint64_t word_to_index(std::span<const PauliAxis> axes) {
    if (axes.size() > word_bits::kQubitsPerLimb) {
        throw std::domain_error("Integer Pauli indices only cover up to 32 qubits.");
    }
    std::uint64_t index = 0;
    for (PauliAxis p : axes) {
        index = (index << 2) | static_cast<std::uint64_t>(p);
    }
    return index;
}

std::vector<PauliAxis> index_to_word(std::uint64_t index, std::size_t num_qubits) {
    return PauliWord::from_index(index, num_qubits).axes();
}

Phase word_mul_limbs(std::span<const std::uint64_t> p, std::span<const std::uint64_t> q, std::span<std::uint64_t> out) {
    // Digit codes map to symplectic bits as x = b0 ^ b1, z = b1, with Y = i X Z. The product exponent per qubit is
    // x1 z1 + x2 z2 + 2 z1 x2 - x z (mod 4).
    int exponent = 0;
    for (std::size_t k = 0; k < p.size(); k++) {
        std::uint64_t a0 = p[k] & kLowBits, a1 = (p[k] >> 1) & kLowBits;
        std::uint64_t b0 = q[k] & kLowBits, b1 = (q[k] >> 1) & kLowBits;
        std::uint64_t x1 = a0 ^ a1, z1 = a1;
        std::uint64_t x2 = b0 ^ b1, z2 = b1;
        std::uint64_t x = x1 ^ x2, z = z1 ^ z2;
        exponent += std::popcount(x1 & z1) + std::popcount(x2 & z2) + 2 * std::popcount(z1 & x2) - std::popcount(x & z);
        out[k] = (z << 1) | (x ^ z);
    }
    return Phase(exponent);
}

WordProduct word_mul(const PauliWord &p, const PauliWord &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::domain_error("word_mul: mismatched qubit counts.");
    }
    std::vector<std::uint64_t> limbs(p.limbs().size());
    Phase phase = word_mul_limbs(p.limbs(), q.limbs(), limbs);
    return {phase, PauliWord::from_limbs(limbs, p.num_qubits())};
}

}  // namespace xstab
