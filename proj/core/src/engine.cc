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

#include "xstab/engine.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "xstab/lut.h"

namespace xstab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_collapse(const GeneratorSet &gs, std::size_t step) {
    for (std::size_t j = 0; j < gs.generators.size(); j++) {
        if (gs.generators[j].is_degenerate()) {
            throw NumericalCollapse(j, step);
        }
    }
}

/// Term-wise conjugation of one generator by a single-qubit gate. A rotation splits a term into at most two.
SimpleGenerator apply_single_gate(const SimpleGenerator &g, const Instruction &inst, double eps) {
    std::size_t n = g.num_qubits();
    std::size_t q = inst.wire();
    std::array<WeightRow, 3> images;
    for (std::size_t p = 0; p < 3; p++) {
        WeightRow w{};
        w[p] = 1.0;
        images[p] = conjugate_axis(inst.gate, inst.theta, w);
    }
    SimpleGenerator out(n);
    out.reserve(g.rank() * 2);
    std::vector<std::uint64_t> word(g.stride());
    for (std::size_t s = 0; s < g.rank(); s++) {
        auto src = g.word(s);
        std::uint8_t digit = word_bits::get_digit(src.data(), n, q);
        if (digit == 0) {
            out.push_back(g.lambda(s), src);
            continue;
        }
        std::copy(src.begin(), src.end(), word.begin());
        const WeightRow &row = images[digit - 1];
        for (std::uint8_t p = 0; p < 3; p++) {
            if (row[p] != 0.0) {
                word_bits::set_digit(word.data(), n, q, static_cast<std::uint8_t>(p + 1));
                out.push_back(g.lambda(s) * row[p], word);
            }
        }
    }
    return canonicalize(out, eps);
}

RunReport run_v1(std::span<const Instruction> instructions, std::size_t n, const RunOptions &options) {
    RunReport report;
    report.mode = Mode::V1;
    GeneratorSet gs = init_z(n);
    report.rank_trace.push_back(rank_stats(gs));
    std::size_t step = 0;
    for (std::size_t i = 0; i < instructions.size(); i++) {
        const Instruction &inst = instructions[i];
        auto start = Clock::now();
        if (inst.arity() == 1) {
            for (auto &g : gs.generators) {
                g = apply_single_gate(g, inst, options.eps);
            }
            report.counts.single_gate_applications++;
            report.timings.sub_flatten += seconds_since(start);
        } else {
            for (auto &g : gs.generators) {
                apply_cx_inplace(g, inst.control(), inst.target());
                // CX permutes words, so a single term needs no re-sorting.
                if (g.rank() > 1) {
                    g = canonicalize(g, options.eps);
                }
            }
            report.counts.cx_applications++;
            report.timings.cx += seconds_since(start);
        }
        check_collapse(gs, step);
        bool run_ends = i + 1 == instructions.size() || instructions[i + 1].arity() != inst.arity();
        if (run_ends) {
            report.rank_trace.push_back(rank_stats(gs));
            step++;
        }
    }
    report.final_state = std::move(gs);
    return report;
}

RunReport run_operator_pipeline(
    std::span<const Instruction> instructions, std::size_t n, Mode mode, const RunOptions &options) {
    RunReport report;
    report.mode = mode;

    auto start = Clock::now();
    OperatorPartition partition = divide_instruction(instructions, n);
    report.timings.partition = seconds_since(start);

    start = Clock::now();
    SingleQubitLut lut = create_lut_1q(partition);
    report.timings.lut = seconds_since(start);

    GeneratorSet gs = init_z(n);
    report.rank_trace.push_back(rank_stats(gs));
    std::size_t next_single = 0;
    std::size_t next_two = 0;
    for (std::size_t step = 0; step < partition.order.size(); step++) {
        start = Clock::now();
        if (partition.order[step] == 0) {
            auto blocks = lut.operator_blocks(next_single++);
            for (auto &g : gs.generators) {
                FlattenStats stats;
                if (mode == Mode::V2) {
                    g = flatten(sub_dense(g, blocks), options.eps, &stats);
                } else {
                    g = flatten(sub_ragged(g, blocks), options.eps, &stats);
                }
                report.counts.flatten_branches += stats.branches;
            }
            report.counts.single_qubit_operators++;
            report.timings.sub_flatten += seconds_since(start);
        } else {
            const auto &gates = partition.two[next_two++].gates;
            for (auto &g : gs.generators) {
                for (const auto &inst : gates) {
                    apply_cx_inplace(g, inst.control(), inst.target());
                }
                if (g.rank() > 1) {
                    g = canonicalize(g, options.eps);
                }
            }
            report.counts.cx_applications += gates.size();
            report.counts.two_qubit_operators++;
            report.timings.cx += seconds_since(start);
        }
        check_collapse(gs, step);
        report.rank_trace.push_back(rank_stats(gs));
    }
    report.final_state = std::move(gs);
    return report;
}

AgreementReport compare_generators(const SimpleGenerator &a, const SimpleGenerator &b) {
    AgreementReport report;
    std::size_t i = 0, k = 0;
    while (i < a.rank() || k < b.rank()) {
        int cmp;
        if (i == a.rank()) {
            cmp = 1;
        } else if (k == b.rank()) {
            cmp = -1;
        } else {
            auto wa = a.word(i);
            auto wb = b.word(k);
            auto c = std::lexicographical_compare_three_way(wa.begin(), wa.end(), wb.begin(), wb.end());
            cmp = c < 0 ? -1 : (c > 0 ? 1 : 0);
        }
        if (cmp == 0) {
            report.max_lambda_delta = std::max(report.max_lambda_delta, std::abs(a.lambda(i) - b.lambda(k)));
            i++;
            k++;
        } else if (cmp < 0) {
            report.index_sets_equal = false;
            report.max_lambda_delta = std::max(report.max_lambda_delta, std::abs(a.lambda(i)));
            i++;
        } else {
            report.index_sets_equal = false;
            report.max_lambda_delta = std::max(report.max_lambda_delta, std::abs(b.lambda(k)));
            k++;
        }
    }
    return report;
}

}  // namespace

std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::V1:
            return "v1";
        case Mode::V2:
            return "v2";
        case Mode::V3:
            return "v3";
    }
    return "?";
}

std::optional<Mode> mode_from_name(std::string_view name) {
    for (Mode m : kAllModes) {
        if (mode_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

NumericalCollapse::NumericalCollapse(std::size_t generator, std::size_t step)
    : std::runtime_error(
          "numerical collapse: generator " + std::to_string(generator) + " lost every term at operator step " +
          std::to_string(step)),
      generator_(generator),
      step_(step) {
}

RunReport run(std::span<const Instruction> instructions, std::size_t num_qubits, Mode mode, const RunOptions &options) {
    validate(instructions, num_qubits);
    if (mode == Mode::V1) {
        return run_v1(instructions, num_qubits, options);
    }
    return run_operator_pipeline(instructions, num_qubits, mode, options);
}

AgreementReport compare_generator_sets(const GeneratorSet &a, const GeneratorSet &b) {
    AgreementReport report;
    if (a.num_qubits != b.num_qubits || a.generators.size() != b.generators.size()) {
        report.index_sets_equal = false;
        report.max_lambda_delta = INFINITY;
        return report;
    }
    for (std::size_t j = 0; j < a.generators.size(); j++) {
        AgreementReport one = compare_generators(a.generators[j], b.generators[j]);
        report.index_sets_equal = report.index_sets_equal && one.index_sets_equal;
        report.max_lambda_delta = std::max(report.max_lambda_delta, one.max_lambda_delta);
    }
    return report;
}

AllModesReport run_all_modes(std::span<const Instruction> instructions, std::size_t num_qubits, const RunOptions &options) {
    AllModesReport out;
    for (std::size_t m = 0; m < kAllModes.size(); m++) {
        out.reports[m] = run(instructions, num_qubits, kAllModes[m], options);
    }
    for (std::size_t a = 0; a < 3; a++) {
        for (std::size_t b = a + 1; b < 3; b++) {
            AgreementReport pair = compare_generator_sets(out.reports[a].final_state, out.reports[b].final_state);
            out.agreement.index_sets_equal = out.agreement.index_sets_equal && pair.index_sets_equal;
            out.agreement.max_lambda_delta = std::max(out.agreement.max_lambda_delta, pair.max_lambda_delta);
        }
    }
    return out;
}

}  // namespace xstab
