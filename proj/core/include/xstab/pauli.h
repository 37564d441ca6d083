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

#ifndef XSTAB_PAULI_H
#define XSTAB_PAULI_H

#include <array>
#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xstab {

/// Single-qubit Pauli with canonical codes I=0, X=1, Y=2, Z=3.
enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<PauliAxis, 4> kAllAxes = {PauliAxis::I, PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
inline constexpr std::array<PauliAxis, 3> kNonIdentityAxes = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

int axis_to_index(PauliAxis p);
/// Throws std::domain_error unless i is in [0, 3].
PauliAxis index_to_axis(int i);
char axis_to_char(PauliAxis p);
/// Accepts "IXYZ" and '_' for identity. Throws std::domain_error otherwise.
PauliAxis char_to_axis(char c);

/// Weights over the (I, X, Y, Z) basis.
using AxisWeights = std::array<double, 4>;

AxisWeights axis_to_weight(PauliAxis p);
/// Inverse of axis_to_weight. Throws std::domain_error unless w is exactly one-hot.
PauliAxis weight_to_axis(const AxisWeights &w);

/// A power of i, stored as the exponent modulo 4.
class Phase {
   public:
    constexpr Phase() = default;
    constexpr explicit Phase(int exponent) : exponent_(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4)) {
    }

    static constexpr Phase one() {
        return Phase(0);
    }
    static constexpr Phase i() {
        return Phase(1);
    }
    static constexpr Phase minus_one() {
        return Phase(2);
    }
    static constexpr Phase minus_i() {
        return Phase(3);
    }

    constexpr int exponent() const {
        return exponent_;
    }
    constexpr bool is_real() const {
        return (exponent_ & 1) == 0;
    }
    /// +1 or -1. Only meaningful when is_real().
    constexpr int real_sign() const {
        return exponent_ == 0 ? 1 : -1;
    }
    std::complex<double> value() const;

    constexpr Phase operator*(Phase other) const {
        return Phase(exponent_ + other.exponent_);
    }
    constexpr Phase &operator*=(Phase other) {
        *this = *this * other;
        return *this;
    }
    constexpr bool operator==(const Phase &) const = default;

    std::string str() const;

   private:
    std::uint8_t exponent_ = 0;
};

struct AxisProduct {
    Phase phase;
    PauliAxis axis;
    bool operator==(const AxisProduct &) const = default;
};

/// Single-qubit Pauli product a*b = phase * axis.
AxisProduct axis_mul(PauliAxis a, PauliAxis b);

/// Bit-level layout of a Pauli word packed into 64-bit limbs.
///
/// A word over n qubits uses ceil(n / 32) limbs. Limb L holds qubits [32L, 32L + 32) as base-4 digits with the
/// lowest qubit in the most significant position, so the limb sequence read most-significant-limb-first is the
/// base-4 positional encoding with qubit 0 as the leading digit. Lexicographic limb comparison therefore agrees
/// with numeric comparison of the encoded index. For n <= 32 the single limb is the index itself.
namespace word_bits {

inline constexpr std::size_t kQubitsPerLimb = 32;

constexpr std::size_t limb_count(std::size_t num_qubits) {
    return num_qubits == 0 ? 1 : (num_qubits + kQubitsPerLimb - 1) / kQubitsPerLimb;
}

constexpr unsigned digit_shift(std::size_t num_qubits, std::size_t qubit) {
    std::size_t limb = qubit / kQubitsPerLimb;
    std::size_t base = limb * kQubitsPerLimb;
    std::size_t width = num_qubits - base < kQubitsPerLimb ? num_qubits - base : kQubitsPerLimb;
    return static_cast<unsigned>(2 * (width - 1 - (qubit - base)));
}

inline std::uint8_t get_digit(const std::uint64_t *limbs, std::size_t num_qubits, std::size_t qubit) {
    return static_cast<std::uint8_t>((limbs[qubit / kQubitsPerLimb] >> digit_shift(num_qubits, qubit)) & 3u);
}

inline void set_digit(std::uint64_t *limbs, std::size_t num_qubits, std::size_t qubit, std::uint8_t digit) {
    unsigned shift = digit_shift(num_qubits, qubit);
    std::uint64_t &limb = limbs[qubit / kQubitsPerLimb];
    limb = (limb & ~(std::uint64_t{3} << shift)) | (std::uint64_t{digit} << shift);
}

}  // namespace word_bits

/// An n-qubit Pauli string without phase, encoded base-4 with qubit 0 as the most significant digit.
class PauliWord {
   public:
    PauliWord() = default;

    static PauliWord identity(std::size_t num_qubits);
    /// Throws std::domain_error if num_qubits > 32 or index >= 4^num_qubits.
    static PauliWord from_index(std::uint64_t index, std::size_t num_qubits);
    static PauliWord from_axes(std::span<const PauliAxis> axes);
    /// Parses e.g. "XYZ" or "_XZ". Throws std::domain_error on other characters.
    static PauliWord from_string(std::string_view text);
    static PauliWord from_limbs(std::span<const std::uint64_t> limbs, std::size_t num_qubits);
    /// Single-axis word, e.g. single(4, 1, Z) = IZII.
    static PauliWord single(std::size_t num_qubits, std::size_t qubit, PauliAxis axis);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    PauliAxis operator[](std::size_t qubit) const {
        return static_cast<PauliAxis>(word_bits::get_digit(limbs_.data(), num_qubits_, qubit));
    }
    void set(std::size_t qubit, PauliAxis axis) {
        word_bits::set_digit(limbs_.data(), num_qubits_, qubit, static_cast<std::uint8_t>(axis));
    }

    /// Base-4 index. Throws std::domain_error if num_qubits > 32.
    std::uint64_t index() const;
    std::span<const std::uint64_t> limbs() const {
        return limbs_;
    }
    std::vector<PauliAxis> axes() const;
    std::size_t weight() const;
    bool is_identity() const;
    std::string str() const;

    bool operator==(const PauliWord &) const = default;
    std::strong_ordering operator<=>(const PauliWord &other) const;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<std::uint64_t> limbs_ = std::vector<std::uint64_t>(1, 0);
};

/// Base-4 encoding, qubit 0 most significant. Throws std::domain_error for more than 32 axes.
std::uint64_t word_to_index(std::span<const PauliAxis> axes);
/// Throws std::domain_error if num_qubits > 32 or index >= 4^num_qubits.
std::vector<PauliAxis> index_to_word(std::uint64_t index, std::size_t num_qubits);

/// 4^num_qubits; num_qubits must be at most 31.
constexpr std::uint64_t pow4(std::size_t num_qubits) {
    return std::uint64_t{1} << (2 * num_qubits);
}

struct WordProduct {
    Phase phase;
    PauliWord word;
    bool operator==(const WordProduct &) const = default;
};

/// Qubit-wise product with the accumulated phase. Throws std::domain_error on mismatched qubit counts.
WordProduct word_mul(const PauliWord &p, const PauliWord &q);

/// word_mul on raw limb spans of equal length; writes the product word to out.
Phase word_mul_limbs(std::span<const std::uint64_t> p, std::span<const std::uint64_t> q, std::span<std::uint64_t> out);

}  // namespace xstab

#endif
