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

#include "xstab/stabilizer.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "xstab/parallel.h"

namespace xstab {

namespace {

constexpr std::size_t kTermGrain = 2048;
constexpr std::size_t kStringGrain = 64;

/// Per-qubit nonzero (axis, weight) choices of one source string.
struct QubitChoices {
    std::uint8_t count = 0;
    std::array<std::uint8_t, 4> axes{};
    std::array<double, 4> weights{};
};

void gather_choices(const DenseComplexGenerator &g, std::size_t s, std::span<QubitChoices> out) {
    for (std::size_t j = 0; j < g.num_qubits(); j++) {
        const AxisWeights &w = g.weights(s, j);
        QubitChoices &c = out[j];
        c.count = 0;
        for (std::uint8_t a = 0; a < 4; a++) {
            if (w[a] != 0.0) {
                c.axes[c.count] = a;
                c.weights[c.count] = w[a];
                c.count++;
            }
        }
    }
}

void gather_choices(const RaggedComplexGenerator &g, std::size_t s, std::span<QubitChoices> out) {
    for (std::size_t j = 0; j < g.num_qubits(); j++) {
        auto values = g.values(s, j);
        auto axes = g.axes(s, j);
        QubitChoices &c = out[j];
        c.count = static_cast<std::uint8_t>(values.size());
        for (std::size_t l = 0; l < values.size(); l++) {
            c.axes[l] = axes[l];
            c.weights[l] = values[l];
        }
    }
}

std::size_t branches_of(std::span<const QubitChoices> choices) {
    std::size_t total = 1;
    for (const auto &c : choices) {
        if (c.count == 0) {
            return 0;
        }
        if (total > std::numeric_limits<std::size_t>::max() / c.count) {
            throw std::length_error("flatten: branch count overflows size_t");
        }
        total *= c.count;
    }
    return total;
}

template <typename Complex>
std::size_t count_branches_impl(const Complex &g) {
    std::vector<QubitChoices> choices(g.num_qubits());
    std::size_t total = 0;
    for (std::size_t s = 0; s < g.num_strings(); s++) {
        gather_choices(g, s, choices);
        total += branches_of(choices);
    }
    return total;
}

/// Enumerates the Cartesian product of one string's per-qubit choices, last qubit varying fastest.
void expand_string(
    std::size_t num_qubits,
    double lambda,
    std::span<const QubitChoices> choices,
    double *out_lambdas,
    std::uint64_t *out_words,
    std::size_t stride) {
    std::size_t n = num_qubits;
    std::vector<std::uint8_t> pick(n, 0);
    std::vector<std::uint64_t> word(stride, 0);
    // prefix[j] = lambda * prod_{i<j} chosen weight.
    std::vector<double> prefix(n + 1);
    prefix[0] = lambda;
    for (std::size_t j = 0; j < n; j++) {
        word_bits::set_digit(word.data(), n, j, choices[j].axes[0]);
        prefix[j + 1] = prefix[j] * choices[j].weights[0];
    }
    std::size_t emitted = 0;
    while (true) {
        out_lambdas[emitted] = prefix[n];
        std::copy(word.begin(), word.end(), out_words + emitted * stride);
        emitted++;

        std::size_t j = n;
        while (j > 0) {
            j--;
            if (pick[j] + 1u < choices[j].count) {
                break;
            }
            pick[j] = 0;
            word_bits::set_digit(word.data(), n, j, choices[j].axes[0]);
            if (j == 0) {
                return;
            }
        }
        if (n == 0) {
            return;
        }
        pick[j]++;
        word_bits::set_digit(word.data(), n, j, choices[j].axes[pick[j]]);
        for (std::size_t i = j; i < n; i++) {
            prefix[i + 1] = prefix[i] * choices[i].weights[pick[i]];
        }
    }
}

template <typename Complex>
SimpleGenerator flatten_impl(const Complex &g, double eps, FlattenStats *stats) {
    std::size_t n = g.num_qubits();
    std::size_t strings = g.num_strings();

    std::vector<std::size_t> offsets(strings + 1, 0);
    parallel_for(strings, kStringGrain, [&](std::size_t begin, std::size_t end) {
        std::vector<QubitChoices> choices(n);
        for (std::size_t s = begin; s < end; s++) {
            gather_choices(g, s, choices);
            offsets[s + 1] = branches_of(choices);
        }
    });
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    std::size_t total = offsets.back();
    if (stats != nullptr) {
        stats->branches = total;
    }

    SimpleGenerator raw(n);
    raw.resize(total);
    std::size_t stride = raw.stride();
    double *lambdas = raw.lambdas().data();
    // Each string writes only its own [offsets[s], offsets[s+1]) slice.
    std::uint64_t *words = raw.words().data();
    parallel_for(strings, kStringGrain, [&](std::size_t begin, std::size_t end) {
        std::vector<QubitChoices> choices(n);
        for (std::size_t s = begin; s < end; s++) {
            if (offsets[s + 1] == offsets[s]) {
                continue;
            }
            gather_choices(g, s, choices);
            expand_string(n, g.lambdas()[s], choices, lambdas + offsets[s], words + offsets[s] * stride, stride);
        }
    });
    return canonicalize(raw, eps);
}

void check_qubit_count(std::size_t expected, std::size_t blocks) {
    if (expected != blocks) {
        throw std::domain_error(
            "LUT slice has " + std::to_string(blocks) + " blocks for a " + std::to_string(expected) + "-qubit generator.");
    }
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

}  // namespace

SimpleGenerator::SimpleGenerator(std::size_t num_qubits)
    : num_qubits_(num_qubits), stride_(word_bits::limb_count(num_qubits)) {
}

SimpleGenerator SimpleGenerator::from_indices(
    std::size_t num_qubits, std::span<const double> lambdas, std::span<const std::uint64_t> indices) {
    if (lambdas.size() != indices.size()) {
        throw std::domain_error("from_indices: lambdas and indices differ in length.");
    }
    SimpleGenerator g(num_qubits);
    g.reserve(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); i++) {
        g.push_back(lambdas[i], PauliWord::from_index(indices[i], num_qubits));
    }
    return g;
}

SimpleGenerator SimpleGenerator::from_strings(std::span<const std::pair<double, std::string>> terms) {
    if (terms.empty()) {
        throw std::domain_error("from_strings: need at least one term to infer the qubit count.");
    }
    SimpleGenerator g(terms[0].second.size());
    for (const auto &[lambda, text] : terms) {
        g.push_back(lambda, PauliWord::from_string(text));
    }
    return g;
}

PauliWord SimpleGenerator::pauli_word(std::size_t term) const {
    return PauliWord::from_limbs(word(term), num_qubits_);
}

std::uint64_t SimpleGenerator::index(std::size_t term) const {
    if (num_qubits_ > word_bits::kQubitsPerLimb) {
        throw std::domain_error("Integer Pauli indices only cover up to 32 qubits.");
    }
    return words_[term];
}

std::vector<std::uint64_t> SimpleGenerator::indices() const {
    std::vector<std::uint64_t> out(rank());
    for (std::size_t i = 0; i < rank(); i++) {
        out[i] = index(i);
    }
    return out;
}

void SimpleGenerator::reserve(std::size_t terms) {
    lambdas_.reserve(terms);
    words_.reserve(terms * stride_);
}

void SimpleGenerator::resize(std::size_t terms) {
    lambdas_.resize(terms, 0.0);
    words_.resize(terms * stride_, 0);
}

void SimpleGenerator::push_back(double lambda, std::span<const std::uint64_t> word) {
    if (word.size() != stride_) {
        throw std::domain_error("push_back: word has the wrong limb count.");
    }
    lambdas_.push_back(lambda);
    words_.insert(words_.end(), word.begin(), word.end());
}

void SimpleGenerator::push_back(double lambda, const PauliWord &word) {
    if (word.num_qubits() != num_qubits_) {
        throw std::domain_error("push_back: word has the wrong qubit count.");
    }
    push_back(lambda, word.limbs());
}

std::string SimpleGenerator::str() const {
    std::string out;
    for (std::size_t i = 0; i < rank(); i++) {
        if (i > 0) {
            out += ' ';
        }
        if (lambdas_[i] >= 0) {
            out += '+';
        }
        out += format_double(lambdas_[i]);
        out += '*';
        out += pauli_word(i).str();
    }
    return out;
}

DenseComplexGenerator::DenseComplexGenerator(std::size_t num_qubits, std::size_t num_strings)
    : num_qubits_(num_qubits), lambdas_(num_strings, 0.0), weights_(num_strings * num_qubits, AxisWeights{}) {
}

DenseComplexGenerator DenseComplexGenerator::from_nested(
    std::span<const double> lambdas, const std::vector<std::vector<AxisWeights>> &nested) {
    if (lambdas.size() != nested.size() || nested.empty()) {
        throw std::domain_error("from_nested: need one weight row per lambda.");
    }
    DenseComplexGenerator g(nested[0].size(), lambdas.size());
    for (std::size_t s = 0; s < lambdas.size(); s++) {
        if (nested[s].size() != g.num_qubits()) {
            throw std::domain_error("from_nested: ragged qubit count.");
        }
        g.lambdas_[s] = lambdas[s];
        for (std::size_t j = 0; j < g.num_qubits(); j++) {
            g.weights(s, j) = nested[s][j];
        }
    }
    return g;
}

RaggedComplexGenerator RaggedComplexGenerator::from_nested(
    std::span<const double> lambdas,
    const std::vector<std::vector<std::vector<double>>> &values,
    const std::vector<std::vector<std::vector<std::uint8_t>>> &axes) {
    if (lambdas.size() != values.size() || values.size() != axes.size() || values.empty()) {
        throw std::domain_error("from_nested: need one value/axis list per lambda.");
    }
    RaggedComplexGenerator g;
    g.num_qubits_ = values[0].size();
    g.lambdas_.assign(lambdas.begin(), lambdas.end());
    for (std::size_t s = 0; s < values.size(); s++) {
        if (values[s].size() != g.num_qubits_ || axes[s].size() != g.num_qubits_) {
            throw std::domain_error("from_nested: ragged qubit count.");
        }
        for (std::size_t j = 0; j < g.num_qubits_; j++) {
            const auto &vs = values[s][j];
            const auto &as = axes[s][j];
            if (vs.empty() || vs.size() != as.size() || vs.size() > 4) {
                throw std::domain_error("from_nested: each (string, qubit) needs 1-4 matching values and axes.");
            }
            for (std::size_t l = 0; l < vs.size(); l++) {
                if (vs[l] == 0.0 || as[l] > 3 || (l > 0 && as[l] <= as[l - 1])) {
                    throw std::domain_error("from_nested: zero weight or unsorted/invalid axis code.");
                }
                g.values_.push_back(vs[l]);
                g.axes_.push_back(as[l]);
            }
            g.offsets_.push_back(g.values_.size());
        }
    }
    return g;
}

DenseComplexGenerator sub_dense(const SimpleGenerator &g, std::span<const LutBlock> blocks) {
    std::size_t n = g.num_qubits();
    check_qubit_count(n, blocks.size());
    DenseComplexGenerator out(n, g.rank());
    std::copy(g.lambdas().begin(), g.lambdas().end(), out.lambdas().begin());
    parallel_for(g.rank(), kTermGrain / std::max<std::size_t>(n, 1), [&](std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; s++) {
            for (std::size_t j = 0; j < n; j++) {
                auto axis = static_cast<std::size_t>(g.axis(s, j));
                AxisWeights &w = out.weights(s, j);
                if (axis == 0) {
                    w = {1.0, 0.0, 0.0, 0.0};
                } else {
                    const WeightRow &row = blocks[j][axis - 1];
                    w = {0.0, row[0], row[1], row[2]};
                }
            }
        }
    });
    return out;
}

RaggedComplexGenerator sub_ragged(const SimpleGenerator &g, std::span<const LutBlock> blocks) {
    std::size_t n = g.num_qubits();
    check_qubit_count(n, blocks.size());
    std::size_t cells = g.rank() * n;

    // Pass 1: nonzero count per (string, qubit) cell.
    std::vector<std::size_t> offsets(cells + 1, 0);
    parallel_for(g.rank(), kTermGrain / std::max<std::size_t>(n, 1), [&](std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; s++) {
            for (std::size_t j = 0; j < n; j++) {
                auto axis = static_cast<std::size_t>(g.axis(s, j));
                std::size_t count = 1;
                if (axis != 0) {
                    const WeightRow &row = blocks[j][axis - 1];
                    count = static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](double v) {
                        return v != 0.0;
                    }));
                }
                offsets[s * n + j + 1] = count;
            }
        }
    });
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

    RaggedComplexGenerator out;
    out.num_qubits_ = n;
    out.lambdas_.assign(g.lambdas().begin(), g.lambdas().end());
    out.values_.resize(offsets.back());
    out.axes_.resize(offsets.back());
    parallel_for(g.rank(), kTermGrain / std::max<std::size_t>(n, 1), [&](std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; s++) {
            for (std::size_t j = 0; j < n; j++) {
                std::size_t at = offsets[s * n + j];
                auto axis = static_cast<std::size_t>(g.axis(s, j));
                if (axis == 0) {
                    out.values_[at] = 1.0;
                    out.axes_[at] = 0;
                    continue;
                }
                const WeightRow &row = blocks[j][axis - 1];
                for (std::uint8_t p = 0; p < 3; p++) {
                    if (row[p] != 0.0) {
                        out.values_[at] = row[p];
                        out.axes_[at] = static_cast<std::uint8_t>(p + 1);
                        at++;
                    }
                }
            }
        }
    });
    out.offsets_ = std::move(offsets);
    return out;
}

DenseComplexGenerator to_dense(const RaggedComplexGenerator &g) {
    DenseComplexGenerator out(g.num_qubits(), g.num_strings());
    std::copy(g.lambdas().begin(), g.lambdas().end(), out.lambdas().begin());
    for (std::size_t s = 0; s < g.num_strings(); s++) {
        for (std::size_t j = 0; j < g.num_qubits(); j++) {
            auto values = g.values(s, j);
            auto axes = g.axes(s, j);
            for (std::size_t l = 0; l < values.size(); l++) {
                out.weights(s, j)[axes[l]] = values[l];
            }
        }
    }
    return out;
}

RaggedComplexGenerator to_ragged(const DenseComplexGenerator &g) {
    RaggedComplexGenerator out;
    out.num_qubits_ = g.num_qubits();
    out.lambdas_.assign(g.lambdas().begin(), g.lambdas().end());
    for (std::size_t s = 0; s < g.num_strings(); s++) {
        for (std::size_t j = 0; j < g.num_qubits(); j++) {
            const AxisWeights &w = g.weights(s, j);
            for (std::uint8_t a = 0; a < 4; a++) {
                if (w[a] != 0.0) {
                    out.values_.push_back(w[a]);
                    out.axes_.push_back(a);
                }
            }
            out.offsets_.push_back(out.values_.size());
        }
    }
    return out;
}

std::size_t count_branches(const DenseComplexGenerator &g) {
    return count_branches_impl(g);
}

std::size_t count_branches(const RaggedComplexGenerator &g) {
    return count_branches_impl(g);
}

SimpleGenerator flatten(const DenseComplexGenerator &g, double eps, FlattenStats *stats) {
    return flatten_impl(g, eps, stats);
}

SimpleGenerator flatten(const RaggedComplexGenerator &g, double eps, FlattenStats *stats) {
    return flatten_impl(g, eps, stats);
}

void apply_cx_inplace(SimpleGenerator &g, std::size_t control, std::size_t target) {
    std::size_t n = g.num_qubits();
    if (control == target) {
        throw std::domain_error("apply_cx: control and target must differ.");
    }
    if (control >= n || target >= n) {
        throw std::domain_error("apply_cx: qubit out of range.");
    }
    parallel_for(g.rank(), kTermGrain, [&](std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; s++) {
            std::uint64_t *word = g.word(s).data();
            auto c = static_cast<PauliAxis>(word_bits::get_digit(word, n, control));
            auto t = static_cast<PauliAxis>(word_bits::get_digit(word, n, target));
            CxImage image = cx_lookup(c, t);
            word_bits::set_digit(word, n, control, static_cast<std::uint8_t>(image.control));
            word_bits::set_digit(word, n, target, static_cast<std::uint8_t>(image.target));
            if (image.sign < 0) {
                g.lambdas()[s] = -g.lambdas()[s];
            }
        }
    });
}

SimpleGenerator apply_cx(const SimpleGenerator &g, std::size_t control, std::size_t target) {
    SimpleGenerator out = g;
    apply_cx_inplace(out, control, target);
    return out;
}

SimpleGenerator canonicalize(const SimpleGenerator &g, double eps) {
    std::size_t stride = g.stride();
    std::vector<std::size_t> order(g.rank());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto words = g.words();
    if (stride == 1) {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return words[a] < words[b];
        });
    } else {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            auto wa = g.word(a);
            auto wb = g.word(b);
            return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
        });
    }

    SimpleGenerator out(g.num_qubits());
    out.reserve(g.rank());
    std::size_t i = 0;
    while (i < order.size()) {
        auto head = g.word(order[i]);
        double sum = g.lambda(order[i]);
        std::size_t k = i + 1;
        while (k < order.size() && std::equal(head.begin(), head.end(), g.word(order[k]).begin())) {
            sum += g.lambda(order[k]);
            k++;
        }
        if (std::abs(sum) >= eps) {
            out.push_back(sum, head);
        }
        i = k;
    }
    return out;
}

GeneratorSet init_z(std::size_t num_qubits) {
    GeneratorSet gs;
    gs.num_qubits = num_qubits;
    gs.generators.reserve(num_qubits);
    for (std::size_t j = 0; j < num_qubits; j++) {
        SimpleGenerator g(num_qubits);
        g.push_back(1.0, PauliWord::single(num_qubits, j, PauliAxis::Z));
        gs.generators.push_back(std::move(g));
    }
    return gs;
}

RankStats rank_stats(const GeneratorSet &gs) {
    RankStats stats;
    stats.ranks.reserve(gs.generators.size());
    std::size_t total = 0;
    for (const auto &g : gs.generators) {
        stats.ranks.push_back(g.rank());
        total += g.rank();
        stats.max = std::max(stats.max, g.rank());
    }
    if (!stats.ranks.empty()) {
        stats.mean = static_cast<double>(total) / static_cast<double>(stats.ranks.size());
    }
    return stats;
}

std::string generator_set_to_json(const GeneratorSet &gs) {
    bool integer_index = gs.num_qubits <= word_bits::kQubitsPerLimb;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto &g : gs.generators) {
        nlohmann::json lambdas = nlohmann::json::array();
        nlohmann::json index = nlohmann::json::array();
        for (std::size_t i = 0; i < g.rank(); i++) {
            lambdas.push_back(g.lambda(i));
            if (integer_index) {
                index.push_back(g.index(i));
            } else {
                index.push_back(g.pauli_word(i).str());
            }
        }
        gens.push_back({{"lambda", std::move(lambdas)}, {"index", std::move(index)}});
    }
    nlohmann::json doc = {{"num_qubits", gs.num_qubits}, {"generators", std::move(gens)}};
    return doc.dump();
}

GeneratorSet generator_set_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::domain_error(std::string("generator set JSON: ") + e.what());
    }
    GeneratorSet gs;
    try {
        gs.num_qubits = doc.at("num_qubits").get<std::size_t>();
        for (const auto &entry : doc.at("generators")) {
            const auto &lambdas = entry.at("lambda");
            const auto &index = entry.at("index");
            if (lambdas.size() != index.size()) {
                throw std::domain_error("generator set JSON: lambda/index length mismatch");
            }
            SimpleGenerator g(gs.num_qubits);
            for (std::size_t i = 0; i < lambdas.size(); i++) {
                PauliWord w = index[i].is_string() ? PauliWord::from_string(index[i].get<std::string>())
                                                   : PauliWord::from_index(index[i].get<std::uint64_t>(), gs.num_qubits);
                g.push_back(lambdas[i].get<double>(), w);
            }
            gs.generators.push_back(std::move(g));
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::domain_error(std::string("generator set JSON: ") + e.what());
    }
    return gs;
}

}  // namespace xstab
