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

#ifndef XSTAB_ENGINE_H
#define XSTAB_ENGINE_H

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xstab/circuit.h"
#include "xstab/stabilizer.h"

namespace xstab {

/// V1: gate-by-gate on the simple form, no grouping or lookup tables.
/// V2: operator pipeline over the dense one-hot weight layout.
/// V3: operator pipeline over the ragged weight layout.
enum class Mode { V1, V2, V3 };

inline constexpr std::array<Mode, 3> kAllModes = {Mode::V1, Mode::V2, Mode::V3};

std::string_view mode_name(Mode m);
std::optional<Mode> mode_from_name(std::string_view name);

/// Thrown when canonicalization drops every term of a generator.
class NumericalCollapse : public std::runtime_error {
   public:
    NumericalCollapse(std::size_t generator, std::size_t step);
    std::size_t generator() const {
        return generator_;
    }
    std::size_t step() const {
        return step_;
    }

   private:
    std::size_t generator_;
    std::size_t step_;
};

/// Wall-clock seconds per pipeline phase.
struct PhaseTimings {
    double partition = 0;
    double lut = 0;
    double sub_flatten = 0;
    double cx = 0;

    double total() const {
        return partition + lut + sub_flatten + cx;
    }
};

struct OperationCounts {
    /// Single-qubit operators applied (each one sub + flatten over the whole generator set).
    std::size_t single_qubit_operators = 0;
    /// Two-qubit operators applied.
    std::size_t two_qubit_operators = 0;
    /// CX lookups over the generator set; one per CX gate.
    std::size_t cx_applications = 0;
    /// Individual single-qubit gates applied term-wise (V1 only).
    std::size_t single_gate_applications = 0;
    /// Cartesian branches enumerated by flatten, summed over generators and operators.
    std::size_t flatten_branches = 0;

    std::size_t operator_applications() const {
        return single_qubit_operators + two_qubit_operators;
    }
};

struct RunReport {
    Mode mode = Mode::V1;
    GeneratorSet final_state;
    /// Entry 0 is the initial state; one entry per operator (maximal same-arity run) after that.
    std::vector<RankStats> rank_trace;
    PhaseTimings timings;
    OperationCounts counts;
};

struct RunOptions {
    double eps = kDropTolerance;
};

/// Simulates `instructions` on |0...0> and returns the canonical simple-form generators.
/// Throws std::domain_error for invalid instructions and NumericalCollapse if a generator loses every term.
RunReport run(std::span<const Instruction> instructions, std::size_t num_qubits, Mode mode, const RunOptions &options = {});

struct AgreementReport {
    bool index_sets_equal = true;
    /// Max |lambda_a - lambda_b| over the union of words (a missing word counts as lambda 0).
    double max_lambda_delta = 0;
};

AgreementReport compare_generator_sets(const GeneratorSet &a, const GeneratorSet &b);

struct AllModesReport {
    std::array<RunReport, 3> reports;
    /// Worst case over the three mode pairs.
    AgreementReport agreement;
};

AllModesReport run_all_modes(std::span<const Instruction> instructions, std::size_t num_qubits, const RunOptions &options = {});

}  // namespace xstab

#endif
