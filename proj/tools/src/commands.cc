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

#include "xstab_cli/commands.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "xstab/errors.h"
#include "xstab/lut.h"
#include "xstab/measure.h"
#include "xstab/oracle.h"
#include "xstab/parallel.h"

namespace xstab::cli {

namespace {

using nlohmann::json;

constexpr double kOracleTolerance = 1e-9;
constexpr double kAgreementTolerance = 1e-10;
constexpr std::size_t kMinBenchIters = 10;

const std::vector<std::string> kFamilies = {"ghz", "graph", "xyz_chain", "random"};

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

double parse_double(const std::string &s) {
    double v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return v;
}

std::uint64_t parse_u64(const std::string &s) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
        throw std::invalid_argument("not an unsigned integer: '" + s + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

bool uses_layers(const std::string &family) {
    return family == "xyz_chain";
}

RankStats summarize(const std::vector<RankStats> &trace, double &mean) {
    RankStats out;
    double total = 0;
    for (const auto &rs : trace) {
        total += rs.mean;
        out.max = std::max(out.max, rs.max);
    }
    mean = trace.empty() ? 0.0 : total / static_cast<double>(trace.size());
    return out;
}

BenchRecord make_record(const BuiltCircuit &c, const CircuitSpec &spec, const RunReport &rep) {
    BenchRecord r;
    r.family = c.family;
    r.n = c.num_qubits;
    r.layers = uses_layers(c.family) ? spec.layers : 0;
    r.repeats = uses_layers(c.family) ? spec.repeats : 0;
    r.mode = rep.mode;
    r.seed = spec.seed;
    r.timings = rep.timings;
    r.max_rank = summarize(rep.rank_trace, r.mean_rank).max;
    return r;
}

json record_json(const BenchRecord &r) {
    return {
        {"family", r.family},
        {"n", r.n},
        {"layers", r.layers},
        {"repeats", r.repeats},
        {"mode", std::string(mode_name(r.mode))},
        {"seed", r.seed},
        {"seconds",
         {{"partition", r.timings.partition},
          {"lut", r.timings.lut},
          {"sub_flatten", r.timings.sub_flatten},
          {"cx", r.timings.cx},
          {"total", r.timings.total()}}},
        {"mean_rank", r.mean_rank},
        {"max_rank", r.max_rank},
    };
}

std::string csv_prefix(const BenchRecord &r) {
    return r.family + "," + std::to_string(r.n) + "," + std::to_string(r.layers) + "," + std::to_string(r.repeats) + "," +
           std::string(mode_name(r.mode)) + "," + std::to_string(r.seed) + ",";
}

json trace_json(const std::vector<RankStats> &trace) {
    json steps = json::array();
    for (std::size_t k = 0; k < trace.size(); k++) {
        steps.push_back({{"step", k}, {"mean_rank", trace[k].mean}, {"max_rank", trace[k].max}});
    }
    return steps;
}

Mode parse_mode(const std::string &name) {
    auto m = mode_from_name(name);
    if (!m) {
        throw std::invalid_argument("unknown mode '" + name + "'");
    }
    return *m;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot write '" + path + "'");
    }
    f << text << "\n";
}

void add_circuit_options(CLI::App *cmd, CircuitSpec &spec) {
    cmd->add_option("--circuit", spec.source, "Family (ghz, graph, xyz_chain, random) or circuit file")
        ->capture_default_str();
    cmd->add_option("--qubits,-n", spec.qubits, "Qubit count (files default to the highest wire + 1)");
    cmd->add_option("--layers", spec.layers, "xyz_chain layers")->capture_default_str();
    cmd->add_option("--repeats", spec.repeats, "xyz_chain repeats per layer")->capture_default_str();
    cmd->add_option("--gates", spec.gates, "random circuit gate count")->capture_default_str();
    cmd->add_option("--seed", spec.seed, "Seed for rotation angles and random circuits")->capture_default_str();
}

struct RunArgs {
    CircuitSpec spec;
    std::string mode = "v3";
    std::string out = "json";
    std::string lut_json;
    double eps = kDropTolerance;
};

int cmd_run(const RunArgs &a, std::ostream &out) {
    BuiltCircuit c = build_circuit(a.spec);
    Mode mode = parse_mode(a.mode);
    if (!a.lut_json.empty()) {
        OperatorPartition p = divide_instruction(c.instructions, c.num_qubits);
        write_file(a.lut_json, create_lut_1q(p).to_json());
    }
    RunOptions opts;
    opts.eps = a.eps;
    RunReport rep = run(c.instructions, c.num_qubits, mode, opts);
    BenchRecord rec = make_record(c, a.spec, rep);
    if (a.out == "csv") {
        out << kCsvHeader << "\n" << to_csv_rows(rec);
        return kExitOk;
    }
    json doc;
    doc["record"] = record_json(rec);
    doc["gates"] = c.instructions.size();
    doc["rank_trace"] = trace_json(rep.rank_trace);
    doc["counts"] = {
        {"single_qubit_operators", rep.counts.single_qubit_operators},
        {"two_qubit_operators", rep.counts.two_qubit_operators},
        {"cx_applications", rep.counts.cx_applications},
        {"single_gate_applications", rep.counts.single_gate_applications},
        {"flatten_branches", rep.counts.flatten_branches},
    };
    if (c.num_qubits <= kMaxMeasureQubits) {
        PauliExpansion rho = density_expansion(rep.final_state);
        json probs = json::array();
        for (std::size_t k = 0; k < c.num_qubits; k++) {
            ZProbabilities p = prob_z(rho, k);
            probs.push_back({{"qubit", k}, {"p0", p.p0}, {"p1", p.p1}});
        }
        doc["probabilities"] = probs;
    } else {
        doc["probabilities"] = nullptr;
    }
    doc["generators"] = json::parse(generator_set_to_json(rep.final_state));
    out << doc.dump(2) << "\n";
    return kExitOk;
}

struct RankArgs {
    CircuitSpec spec;
    std::string mode = "v1";
    std::string out = "csv";
};

int cmd_rank(const RankArgs &a, std::ostream &out) {
    BuiltCircuit c = build_circuit(a.spec);
    RunReport rep = run(c.instructions, c.num_qubits, parse_mode(a.mode));
    BenchRecord rec = make_record(c, a.spec, rep);
    if (a.out == "json") {
        json doc = record_json(rec);
        doc.erase("seconds");
        doc["trace"] = trace_json(rep.rank_trace);
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << kCsvHeader << "\n";
    for (std::size_t k = 0; k < rep.rank_trace.size(); k++) {
        out << csv_prefix(rec) << "step_" << k << ",," << format_double(rep.rank_trace[k].mean) << ","
            << rep.rank_trace[k].max << "\n";
    }
    return kExitOk;
}

struct BenchArgs {
    CircuitSpec spec;
    std::string qubits = "2..4";
    std::string repeats = "100,1000";
    std::string modes = "v1,v2,v3";
    std::size_t iters = kMinBenchIters;
    std::string out = "csv";
};

int cmd_bench(const BenchArgs &a, std::ostream &out) {
    if (std::find(kFamilies.begin(), kFamilies.end(), a.spec.source) == kFamilies.end()) {
        throw std::invalid_argument("bench needs a circuit family, got '" + a.spec.source + "'");
    }
    std::vector<std::size_t> qubits = parse_size_list(a.qubits);
    std::vector<std::size_t> repeats = uses_layers(a.spec.source) ? parse_size_list(a.repeats) : std::vector<std::size_t>{1};
    std::vector<Mode> modes;
    for (const auto &m : split(a.modes, ',')) {
        modes.push_back(parse_mode(m));
    }
    std::vector<BenchRecord> records;
    for (std::size_t n : qubits) {
        for (std::size_t r : repeats) {
            CircuitSpec spec = a.spec;
            spec.qubits = n;
            spec.repeats = r;
            BuiltCircuit c = build_circuit(spec);
            for (Mode m : modes) {
                PhaseTimings sum;
                RunReport rep;
                for (std::size_t i = 0; i < a.iters; i++) {
                    rep = run(c.instructions, n, m);
                    sum.partition += rep.timings.partition;
                    sum.lut += rep.timings.lut;
                    sum.sub_flatten += rep.timings.sub_flatten;
                    sum.cx += rep.timings.cx;
                }
                BenchRecord rec = make_record(c, spec, rep);
                double k = static_cast<double>(a.iters);
                rec.timings = {sum.partition / k, sum.lut / k, sum.sub_flatten / k, sum.cx / k};
                records.push_back(rec);
            }
        }
    }
    if (a.out == "json") {
        json doc = json::array();
        for (const auto &r : records) {
            doc.push_back(record_json(r));
        }
        out << doc.dump(2) << "\n";
    } else {
        out << kCsvHeader << "\n";
        for (const auto &r : records) {
            out << to_csv_rows(r);
        }
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string qubits = "2..5";
    VerifyOptions options;
    std::string out = "text";
};

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    VerifyOptions o = a.options;
    std::vector<std::size_t> q = parse_size_list(a.qubits);
    o.min_qubits = *std::min_element(q.begin(), q.end());
    o.max_qubits = *std::max_element(q.begin(), q.end());
    VerifyResult r = verify(o);
    if (a.out == "json") {
        json fails = json::array();
        for (const auto &f : r.failures) {
            fails.push_back({{"seed", f.seed}, {"n", f.num_qubits}, {"gates", f.num_gates}, {"reason", f.reason}});
        }
        json doc = {
            {"circuits", r.circuits},
            {"ok", r.ok()},
            {"max_prob_deviation", r.max_prob_deviation},
            {"max_expectation_deviation", r.max_expectation_deviation},
            {"max_lambda_delta", r.max_lambda_delta},
            {"failures", fails},
        };
        out << doc.dump(2) << "\n";
    } else {
        for (const auto &f : r.failures) {
            out << "FAIL seed=" << f.seed << " n=" << f.num_qubits << " gates=" << f.num_gates << ": " << f.reason << "\n";
        }
        out << (r.ok() ? "PASS" : "FAIL") << " " << r.circuits << " circuits, max |dp| " << r.max_prob_deviation
            << ", max |d<P>| " << r.max_expectation_deviation << ", max |dlambda| " << r.max_lambda_delta << "\n";
    }
    return r.ok() ? kExitOk : kExitVerification;
}

}  // namespace

std::string to_csv_rows(const BenchRecord &r) {
    std::string prefix = csv_prefix(r);
    std::string tail = "," + format_double(r.mean_rank) + "," + std::to_string(r.max_rank) + "\n";
    const std::pair<const char *, double> phases[] = {
        {"partition", r.timings.partition},
        {"lut", r.timings.lut},
        {"sub_flatten", r.timings.sub_flatten},
        {"cx", r.timings.cx},
        {"total", r.timings.total()},
    };
    std::string rows;
    for (const auto &[name, seconds] : phases) {
        rows += prefix + name + "," + format_double(seconds) + tail;
    }
    return rows;
}

std::string to_json(const BenchRecord &r) {
    return record_json(r).dump();
}

BenchRecord bench_record_from_json(const std::string &text) {
    json j = json::parse(text);
    BenchRecord r;
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.layers = j.at("layers").get<std::size_t>();
    r.repeats = j.at("repeats").get<std::size_t>();
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.seed = j.at("seed").get<std::uint64_t>();
    const json &s = j.at("seconds");
    r.timings = {s.at("partition").get<double>(), s.at("lut").get<double>(), s.at("sub_flatten").get<double>(),
                 s.at("cx").get<double>()};
    r.mean_rank = j.at("mean_rank").get<double>();
    r.max_rank = j.at("max_rank").get<std::size_t>();
    return r;
}

BenchRecord bench_record_from_csv(const std::string &rows) {
    BenchRecord r;
    bool seen = false;
    for (const auto &line : split(rows, '\n')) {
        if (line.empty()) {
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 10) {
            throw std::invalid_argument("expected 10 CSV fields, got " + std::to_string(f.size()));
        }
        if (!seen) {
            r.family = f[0];
            r.n = parse_u64(f[1]);
            r.layers = parse_u64(f[2]);
            r.repeats = parse_u64(f[3]);
            r.mode = parse_mode(f[4]);
            r.seed = parse_u64(f[5]);
            r.mean_rank = parse_double(f[8]);
            r.max_rank = parse_u64(f[9]);
            seen = true;
        }
        double s = parse_double(f[7]);
        if (f[6] == "partition") {
            r.timings.partition = s;
        } else if (f[6] == "lut") {
            r.timings.lut = s;
        } else if (f[6] == "sub_flatten") {
            r.timings.sub_flatten = s;
        } else if (f[6] == "cx") {
            r.timings.cx = s;
        } else if (f[6] != "total") {
            throw std::invalid_argument("unknown phase '" + f[6] + "'");
        }
    }
    return r;
}

BuiltCircuit build_circuit(const CircuitSpec &spec) {
    BuiltCircuit c;
    const std::string &s = spec.source;
    if (std::find(kFamilies.begin(), kFamilies.end(), s) != kFamilies.end()) {
        if (spec.qubits == 0) {
            throw std::invalid_argument("--qubits is required for family '" + s + "'");
        }
        c.family = s;
        c.num_qubits = spec.qubits;
        if (s == "ghz") {
            c.instructions = gen_ghz(spec.qubits);
        } else if (s == "graph") {
            c.instructions = gen_graph(spec.qubits, ring_edges(spec.qubits));
        } else if (s == "xyz_chain") {
            c.instructions = gen_xyz_chain(spec.qubits, spec.layers, spec.repeats, spec.seed);
        } else {
            c.instructions = gen_random(spec.qubits, spec.gates, spec.seed);
        }
        return c;
    }
    std::ifstream f(s);
    if (!f) {
        throw std::invalid_argument("'" + s + "' is neither a circuit family nor a readable file");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    c.family = "file";
    c.instructions = parse_circuit(buf.str());
    c.num_qubits = spec.qubits == 0 ? std::max<std::size_t>(1, min_qubits(c.instructions)) : spec.qubits;
    validate(c.instructions, c.num_qubits);
    return c;
}

std::vector<std::size_t> parse_size_list(const std::string &text) {
    std::vector<std::size_t> out;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        std::size_t a = parse_u64(text.substr(0, dots));
        std::size_t b = parse_u64(text.substr(dots + 2));
        if (a > b) {
            throw std::invalid_argument("empty range '" + text + "'");
        }
        for (std::size_t v = a; v <= b; v++) {
            out.push_back(v);
        }
        return out;
    }
    for (const auto &part : split(text, ',')) {
        out.push_back(parse_u64(part));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty list");
    }
    return out;
}

VerifyResult verify(const VerifyOptions &o) {
    if (o.min_qubits < 1 || o.min_qubits > o.max_qubits || o.max_qubits > kMaxMeasureQubits) {
        throw std::invalid_argument(
            "verify needs 1 <= qubits <= " + std::to_string(kMaxMeasureQubits) + " and a nonempty range");
    }
    if (o.max_gates < 1) {
        throw std::invalid_argument("--max-gates must be at least 1");
    }
    std::optional<testing::ScopedLutFault> fault;
    if (o.inject_lut_fault) {
        fault.emplace();
    }
    VerifyResult r;
    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.count; i++) {
        std::size_t n = o.min_qubits + rng() % (o.max_qubits - o.min_qubits + 1);
        std::size_t m = 1 + rng() % o.max_gates;
        std::uint64_t seed = rng();
        auto circuit = gen_random(n, m, seed, o.clifford_only);
        r.circuits++;
        VerifyFailure fail{seed, n, m, ""};
        try {
            AllModesReport all = run_all_modes(circuit, n);
            r.max_lambda_delta = std::max(r.max_lambda_delta, all.agreement.max_lambda_delta);
            StateVector sv = sv_run(circuit, n);
            for (const auto &rep : all.reports) {
                DeviationReport d = compare(rep.final_state, sv);
                r.max_prob_deviation = std::max(r.max_prob_deviation, d.max_prob_deviation);
                r.max_expectation_deviation = std::max(r.max_expectation_deviation, d.max_expectation_deviation);
                if (fail.reason.empty() &&
                    (d.max_prob_deviation >= kOracleTolerance || d.max_expectation_deviation >= kOracleTolerance)) {
                    fail.reason = std::string(mode_name(rep.mode)) + " deviates from the oracle by " +
                                  format_double(std::max(d.max_prob_deviation, d.max_expectation_deviation));
                }
            }
            if (fail.reason.empty() && !all.agreement.index_sets_equal) {
                fail.reason = "modes disagree on Pauli index sets";
            }
            if (fail.reason.empty() && all.agreement.max_lambda_delta >= kAgreementTolerance) {
                fail.reason = "modes disagree on coefficients by " + format_double(all.agreement.max_lambda_delta);
            }
        } catch (const std::exception &e) {
            fail.reason = e.what();
        }
        if (!fail.reason.empty()) {
            r.failures.push_back(fail);
        }
    }
    return r;
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Extended-stabilizer simulator for near-Clifford circuits", "xstab"};
    app.require_subcommand(1);
    std::size_t threads = 0;
    app.add_option("--threads", threads, "Worker count; overrides the XSTAB_NUM_THREADS environment variable");

    RunArgs run_args;
    CLI::App *run_cmd = app.add_subcommand("run", "Simulate a circuit and dump the final generators");
    add_circuit_options(run_cmd, run_args.spec);
    run_cmd->add_option("--mode", run_args.mode, "v1, v2 or v3")
        ->check(CLI::IsMember({"v1", "v2", "v3"}))
        ->capture_default_str();
    run_cmd->add_option("--out", run_args.out, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    run_cmd->add_option("--lut-json", run_args.lut_json, "Write the single-qubit lookup table as JSON to this path");
    run_cmd->add_option("--eps", run_args.eps, "Drop tolerance for coefficients")->check(CLI::NonNegativeNumber)->capture_default_str();

    BenchArgs bench_args;
    bench_args.spec.source = "xyz_chain";
    CLI::App *bench_cmd = app.add_subcommand("bench", "Time circuit families across sizes and modes");
    bench_cmd->add_option("--circuit", bench_args.spec.source, "ghz, graph, xyz_chain or random")
        ->check(CLI::IsMember(kFamilies))
        ->capture_default_str();
    bench_cmd->add_option("--qubits,-n", bench_args.qubits, "Qubit counts: a..b or a,b,c")->capture_default_str();
    bench_cmd->add_option("--repeats", bench_args.repeats, "xyz_chain repeats list")->capture_default_str();
    bench_cmd->add_option("--layers", bench_args.spec.layers, "xyz_chain layers")->capture_default_str();
    bench_cmd->add_option("--gates", bench_args.spec.gates, "random circuit gate count")->capture_default_str();
    bench_cmd->add_option("--seed", bench_args.spec.seed, "Seed")->capture_default_str();
    bench_cmd->add_option("--modes", bench_args.modes, "Comma-separated modes")->capture_default_str();
    bench_cmd->add_option("--iters", bench_args.iters, "Runs per configuration (at least 10)")
        ->check(CLI::Range(kMinBenchIters, std::size_t{1} << 30))
        ->capture_default_str();
    bench_cmd->add_option("--out", bench_args.out, "csv or json")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    VerifyArgs verify_args;
    CLI::App *verify_cmd = app.add_subcommand("verify", "Differential check of all modes against the state-vector oracle");
    verify_cmd->add_option("--qubits,-n", verify_args.qubits, "Qubit range a..b")->capture_default_str();
    verify_cmd->add_option("--count", verify_args.options.count, "Number of random circuits")->capture_default_str();
    verify_cmd->add_option("--seed", verify_args.options.seed, "Campaign seed")->capture_default_str();
    verify_cmd->add_option("--max-gates", verify_args.options.max_gates, "Maximum gates per circuit")->capture_default_str();
    verify_cmd->add_flag("--clifford-only", verify_args.options.clifford_only, "Exclude rotation gates");
    verify_cmd->add_flag("--inject-lut-fault", verify_args.options.inject_lut_fault, "Corrupt the S-gate table (self-test)")
        ->group("");
    verify_cmd->add_option("--out", verify_args.out, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    RankArgs rank_args;
    CLI::App *rank_cmd = app.add_subcommand("rank", "Stabilizer rank after each operator");
    add_circuit_options(rank_cmd, rank_args.spec);
    rank_cmd->add_option("--mode", rank_args.mode, "v1, v2 or v3")->check(CLI::IsMember({"v1", "v2", "v3"}))->capture_default_str();
    rank_cmd->add_option("--out", rank_args.out, "csv or json")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (threads > 0) {
        set_worker_count(threads);
    }
    try {
        if (*run_cmd) {
            return cmd_run(run_args, out);
        }
        if (*bench_cmd) {
            return cmd_bench(bench_args, out);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_args, out);
        }
        return cmd_rank(rank_args, out);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalCollapse &e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ConsistencyError &e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace xstab::cli
