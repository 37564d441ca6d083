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

#include "xstab/lut.h"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "xstab/parallel.h"

namespace xstab {

namespace {

std::atomic<int> g_fault_depth{0};

}  // namespace

WeightRow conjugate_axis(Gate gate, double theta, const WeightRow &w) {
    const auto [w0, w1, w2] = w;
    switch (gate) {
        case Gate::H:
            return {w2, -w1, w0};
        case Gate::S:
            // S X S^dag = Y, S Y S^dag = -X.
            if (testing::lut_fault_active()) {
                return {w1, w0, w2};
            }
            return {-w1, w0, w2};
        case Gate::X:
            return {w0, -w1, -w2};
        case Gate::SX:
            return {w0, -w2, w1};
        case Gate::RX: {
            double c = std::cos(theta), s = std::sin(theta);
            return {w0, w1 * c - w2 * s, w1 * s + w2 * c};
        }
        case Gate::RY: {
            double c = std::cos(theta), s = std::sin(theta);
            return {w0 * c + w2 * s, w1, w2 * c - w0 * s};
        }
        case Gate::RZ: {
            double c = std::cos(theta), s = std::sin(theta);
            return {w0 * c - w1 * s, w1 * c + w0 * s, w2};
        }
        case Gate::CX:
            break;
    }
    throw std::domain_error("conjugate_axis: unsupported gate '" + std::string(gate_name(gate)) + "'");
}

WeightRow conjugate_axis(std::span<const Instruction> gates, const WeightRow &w) {
    WeightRow out = w;
    for (const auto &inst : gates) {
        out = conjugate_axis(inst.gate, inst.theta, out);
    }
    return out;
}

std::string SingleQubitLut::to_json() const {
    nlohmann::json doc = nlohmann::json::array();
    for (std::size_t k = 0; k < num_operators_; k++) {
        nlohmann::json op = nlohmann::json::array();
        for (std::size_t j = 0; j < num_qubits_; j++) {
            op.push_back(block(k, j));
        }
        doc.push_back(std::move(op));
    }
    return doc.dump();
}

SingleQubitLut create_lut_1q(const OperatorPartition &partition) {
    SingleQubitLut lut(partition.num_single(), partition.num_qubits);
    std::size_t n = partition.num_qubits;
    std::size_t cells = partition.num_single() * n * 3;
    parallel_for(cells, 64, [&](std::size_t begin, std::size_t end) {
        for (std::size_t cell = begin; cell < end; cell++) {
            std::size_t k = cell / (3 * n);
            std::size_t j = (cell / 3) % n;
            std::size_t p = cell % 3;
            WeightRow w{};
            w[p] = 1.0;
            lut.block(k, j)[p] = conjugate_axis(partition.single[k].per_qubit[j], w);
        }
    });
    return lut;
}

namespace testing {

ScopedLutFault::ScopedLutFault() {
    g_fault_depth.fetch_add(1);
}

ScopedLutFault::~ScopedLutFault() {
    g_fault_depth.fetch_sub(1);
}

bool lut_fault_active() {
    return g_fault_depth.load(std::memory_order_relaxed) > 0;
}

}  // namespace testing

}  // namespace xstab
