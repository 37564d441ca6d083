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

#ifndef XSTAB_CLI_COMMANDS_H
#define XSTAB_CLI_COMMANDS_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "xstab/circuit.h"
#include "xstab/engine.h"

namespace xstab::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitNumerical = 3,
    kExitVerification = 4,
};

/// Fixed CSV header shared by run, bench and rank.
inline constexpr const char *kCsvHeader = "family,n,layers,repeats,mode,seed,phase,seconds,mean_rank,max_rank";

/// One simulated configuration. Serialized as one CSV row per phase.
struct BenchRecord {
    std::string family;
    std::size_t n = 0;
    std::size_t layers = 0;
    std::size_t repeats = 0;
    Mode mode = Mode::V1;
    std::uint64_t seed = 0;
    PhaseTimings timings;
    /// Mean over the rank trace of the per-step mean rank.
    double mean_rank = 0;
    /// Max over the rank trace.
    std::size_t max_rank = 0;
};

std::string to_csv_rows(const BenchRecord &r);
std::string to_json(const BenchRecord &r);
BenchRecord bench_record_from_json(const std::string &text);
/// Parses the rows written by to_csv_rows (header excluded) back into a record.
BenchRecord bench_record_from_csv(const std::string &rows);

/// A named generator family or a circuit file.
struct CircuitSpec {
    std::string source = "ghz";
    std::size_t qubits = 0;
    std::size_t layers = 1;
    std::size_t repeats = 1;
    std::size_t gates = 20;
    std::uint64_t seed = 1;
};

struct BuiltCircuit {
    /// "ghz", "graph", "xyz_chain", "random" or "file".
    std::string family;
    std::size_t num_qubits = 0;
    std::vector<Instruction> instructions;
};

/// Throws std::invalid_argument for unknown families or unreadable files, ParseError for malformed files.
BuiltCircuit build_circuit(const CircuitSpec &spec);

/// Parses "a..b", "a,b,c" or "a".
std::vector<std::size_t> parse_size_list(const std::string &text);

struct VerifyOptions {
    std::size_t min_qubits = 2;
    std::size_t max_qubits = 5;
    std::size_t count = 200;
    std::uint64_t seed = 1;
    std::size_t max_gates = 60;
    bool clifford_only = false;
    bool inject_lut_fault = false;
};

struct VerifyFailure {
    std::uint64_t seed = 0;
    std::size_t num_qubits = 0;
    std::size_t num_gates = 0;
    std::string reason;
};

struct VerifyResult {
    std::size_t circuits = 0;
    double max_prob_deviation = 0;
    double max_expectation_deviation = 0;
    double max_lambda_delta = 0;
    std::vector<VerifyFailure> failures;
    bool ok() const {
        return failures.empty();
    }
};

/// Mode-agreement and oracle campaign. Circuit i uses a seed drawn from a generator seeded with `seed`.
VerifyResult verify(const VerifyOptions &options);

/// Full command-line entry point; returns the process exit code.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace xstab::cli

#endif
