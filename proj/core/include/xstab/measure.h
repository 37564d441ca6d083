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

#ifndef XSTAB_MEASURE_H
#define XSTAB_MEASURE_H

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "xstab/errors.h"
#include "xstab/pauli.h"
#include "xstab/stabilizer.h"

namespace xstab {

/// Largest register the exact density expansion accepts.
inline constexpr std::size_t kMaxMeasureQubits = 12;
/// Default cap on word products performed while expanding the generator product.
inline constexpr std::size_t kDefaultExpansionBudget = std::size_t{1} << 32;

/// rho = sum_P c_P P, with the 1/2^n prefactor folded into the coefficients.
class PauliExpansion {
   public:
    PauliExpansion() = default;
    explicit PauliExpansion(std::size_t num_qubits) : num_qubits_(num_qubits) {
    }

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    /// 0 for absent words.
    double coefficient(std::uint64_t index) const;
    double coefficient(const PauliWord &word) const;
    const std::unordered_map<std::uint64_t, double> &terms() const {
        return terms_;
    }
    void set(std::uint64_t index, double value) {
        terms_[index] = value;
    }
    /// 2^n * sum of squared coefficients; 1 for pure states.
    double purity() const;

   private:
    std::size_t num_qubits_ = 0;
    std::unordered_map<std::uint64_t, double> terms_;
};

/// Expands rho = (1/2^n) prod_j (I + G_j) over the simple-form generators with phase-tracked word products.
/// Throws ResourceError above kMaxMeasureQubits or when more than `budget` word products would be needed, and
/// ConsistencyError if an accumulated coefficient has imaginary part above 1e-10.
PauliExpansion density_expansion(const GeneratorSet &gs, std::size_t budget = kDefaultExpansionBudget);

struct ZProbabilities {
    double p0 = 1;
    double p1 = 0;
};

/// Outcome probabilities of measuring qubit k in the Z basis: p0 = 1/2 + 2^(n-1) c_{Z_k}.
/// Throws std::domain_error if k >= n.
ZProbabilities prob_z(const GeneratorSet &gs, std::size_t k);
ZProbabilities prob_z(const PauliExpansion &rho, std::size_t k);

/// Tr(P rho) = 2^n c_P.
double expectation(const GeneratorSet &gs, const PauliWord &word);
double expectation(const PauliExpansion &rho, const PauliWord &word);

}  // namespace xstab

#endif
