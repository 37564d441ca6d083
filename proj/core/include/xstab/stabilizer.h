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

#ifndef XSTAB_STABILIZER_H
#define XSTAB_STABILIZER_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xstab/lut.h"
#include "xstab/pauli.h"

namespace xstab {

/// Terms with |lambda| below this are dropped by canonicalize.
inline constexpr double kDropTolerance = 1e-12;

/// A generator in simple form: sum_s lambda_s P_s over Pauli words P_s.
///
/// Words are stored flat, `stride()` limbs per term (see word_bits). Signs live in lambda, never in the word.
class SimpleGenerator {
   public:
    SimpleGenerator() = default;
    explicit SimpleGenerator(std::size_t num_qubits);

    /// Integer-index construction; requires num_qubits <= 32.
    static SimpleGenerator from_indices(
        std::size_t num_qubits, std::span<const double> lambdas, std::span<const std::uint64_t> indices);
    /// e.g. from_strings({{0.5, "XXI"}, {-0.75, "YXI"}}).
    static SimpleGenerator from_strings(std::span<const std::pair<double, std::string>> terms);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t stride() const {
        return stride_;
    }
    /// Number of terms, i.e. the stabilizer rank of this generator.
    std::size_t rank() const {
        return lambdas_.size();
    }
    /// True after canonicalize dropped every term.
    bool is_degenerate() const {
        return lambdas_.empty();
    }

    std::span<const double> lambdas() const {
        return lambdas_;
    }
    std::span<double> lambdas() {
        return lambdas_;
    }
    double lambda(std::size_t term) const {
        return lambdas_[term];
    }
    std::span<const std::uint64_t> word(std::size_t term) const {
        return std::span<const std::uint64_t>(words_).subspan(term * stride_, stride_);
    }
    std::span<std::uint64_t> word(std::size_t term) {
        return std::span<std::uint64_t>(words_).subspan(term * stride_, stride_);
    }
    std::span<const std::uint64_t> words() const {
        return words_;
    }
    std::span<std::uint64_t> words() {
        return words_;
    }
    PauliAxis axis(std::size_t term, std::size_t qubit) const {
        return static_cast<PauliAxis>(word_bits::get_digit(words_.data() + term * stride_, num_qubits_, qubit));
    }
    PauliWord pauli_word(std::size_t term) const;
    /// Requires num_qubits <= 32.
    std::uint64_t index(std::size_t term) const;
    std::vector<std::uint64_t> indices() const;

    void reserve(std::size_t terms);
    /// Resizes to `terms` terms; new terms are identity words with lambda 0.
    void resize(std::size_t terms);
    void push_back(double lambda, std::span<const std::uint64_t> word);
    void push_back(double lambda, const PauliWord &word);

    /// e.g. "+0.5*XXI -0.86602540378443860*YXI".
    std::string str() const;

    bool operator==(const SimpleGenerator &) const = default;

   private:
    std::size_t num_qubits_ = 0;
    std::size_t stride_ = 1;
    std::vector<double> lambdas_;
    std::vector<std::uint64_t> words_;
};

/// Complex form with the fixed one-hot weight layout: an (n' x n x 4) tensor, zero-padded.
class DenseComplexGenerator {
   public:
    DenseComplexGenerator() = default;
    DenseComplexGenerator(std::size_t num_qubits, std::size_t num_strings);

    /// nested[s][j] is the (I, X, Y, Z) weight vector of qubit j in source string s.
    static DenseComplexGenerator from_nested(
        std::span<const double> lambdas, const std::vector<std::vector<AxisWeights>> &nested);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t num_strings() const {
        return lambdas_.size();
    }
    std::span<const double> lambdas() const {
        return lambdas_;
    }
    std::span<double> lambdas() {
        return lambdas_;
    }
    const AxisWeights &weights(std::size_t s, std::size_t j) const {
        return weights_[s * num_qubits_ + j];
    }
    AxisWeights &weights(std::size_t s, std::size_t j) {
        return weights_[s * num_qubits_ + j];
    }

   private:
    std::size_t num_qubits_ = 0;
    std::vector<double> lambdas_;
    std::vector<AxisWeights> weights_;
};

/// Complex form with the ragged layout: per (s, j) a nonempty list of nonzero weights and their axis codes,
/// sorted by axis code, stored CSR-style.
class RaggedComplexGenerator {
   public:
    RaggedComplexGenerator() = default;

    /// values[s][j] and axes[s][j] are parallel lists. Throws std::domain_error if a list is empty, holds a zero,
    /// or is not strictly increasing in axis code.
    static RaggedComplexGenerator from_nested(
        std::span<const double> lambdas,
        const std::vector<std::vector<std::vector<double>>> &values,
        const std::vector<std::vector<std::vector<std::uint8_t>>> &axes);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t num_strings() const {
        return lambdas_.size();
    }
    std::span<const double> lambdas() const {
        return lambdas_;
    }
    std::span<const double> values(std::size_t s, std::size_t j) const {
        std::size_t cell = s * num_qubits_ + j;
        return std::span<const double>(values_).subspan(offsets_[cell], offsets_[cell + 1] - offsets_[cell]);
    }
    std::span<const std::uint8_t> axes(std::size_t s, std::size_t j) const {
        std::size_t cell = s * num_qubits_ + j;
        return std::span<const std::uint8_t>(axes_).subspan(offsets_[cell], offsets_[cell + 1] - offsets_[cell]);
    }
    std::size_t stored_values() const {
        return values_.size();
    }

   private:
    friend RaggedComplexGenerator sub_ragged(const SimpleGenerator &g, std::span<const LutBlock> blocks);
    friend RaggedComplexGenerator to_ragged(const DenseComplexGenerator &g);

    std::size_t num_qubits_ = 0;
    std::vector<double> lambdas_;
    std::vector<std::size_t> offsets_ = std::vector<std::size_t>(1, 0);
    std::vector<double> values_;
    std::vector<std::uint8_t> axes_;
};

/// Substitutes each non-identity axis of every term with its LUT row; identity axes stay one-hot on I.
/// `blocks` holds one 3x3 block per qubit.
DenseComplexGenerator sub_dense(const SimpleGenerator &g, std::span<const LutBlock> blocks);
RaggedComplexGenerator sub_ragged(const SimpleGenerator &g, std::span<const LutBlock> blocks);

DenseComplexGenerator to_dense(const RaggedComplexGenerator &g);
/// Drops exact zeros.
RaggedComplexGenerator to_ragged(const DenseComplexGenerator &g);

struct FlattenStats {
    /// Cartesian-product branches enumerated (terms emitted before merging).
    std::size_t branches = 0;
};

/// Number of branches flatten would enumerate: sum over strings of the product of per-qubit nonzero counts.
std::size_t count_branches(const DenseComplexGenerator &g);
std::size_t count_branches(const RaggedComplexGenerator &g);

/// Expands the per-qubit weight combinations into a canonical simple form.
SimpleGenerator flatten(const DenseComplexGenerator &g, double eps = kDropTolerance, FlattenStats *stats = nullptr);
SimpleGenerator flatten(const RaggedComplexGenerator &g, double eps = kDropTolerance, FlattenStats *stats = nullptr);

/// Conjugates every term by CX(control, target) via cx_lookup. Term order is preserved; the result is not
/// re-sorted. Throws std::domain_error if control == target or either is out of range.
SimpleGenerator apply_cx(const SimpleGenerator &g, std::size_t control, std::size_t target);
void apply_cx_inplace(SimpleGenerator &g, std::size_t control, std::size_t target);

/// Merges equal words by summing lambda, drops |lambda| < eps, sorts by word ascending. A generator whose
/// every term is dropped comes back empty (is_degenerate()).
SimpleGenerator canonicalize(const SimpleGenerator &g, double eps = kDropTolerance);

/// The n generators of a state.
struct GeneratorSet {
    std::size_t num_qubits = 0;
    std::vector<SimpleGenerator> generators;

    bool operator==(const GeneratorSet &) const = default;
};

/// Generators of |0...0>: Z on each qubit with lambda 1.
GeneratorSet init_z(std::size_t num_qubits);

struct RankStats {
    std::vector<std::size_t> ranks;
    double mean = 0.0;
    std::size_t max = 0;
};

RankStats rank_stats(const GeneratorSet &gs);

/// {"num_qubits": n, "generators": [{"lambda": [...], "index": [...]}, ...]}. For more than 32 qubits the
/// "index" entries are Pauli strings ("XIZ...") instead of integers.
std::string generator_set_to_json(const GeneratorSet &gs);
GeneratorSet generator_set_from_json(std::string_view text);

}  // namespace xstab

#endif
