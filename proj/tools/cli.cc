// Copyright 2026 The tsynth Authors
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

#include "cli.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsynth/error_budget.h"
#include "tsynth/reconstruction.h"
#include "tsynth/search.h"
#include "tsynth/unitary_library.h"

namespace tsynth::cli {

namespace {

using json = nlohmann::ordered_json;

/// Empirical single-qubit R_z T-count fit and its controlled-R_z counterpart.
constexpr double kRzSlope = 3.067;
constexpr double kRzOffset = -4.322;
constexpr double kCrzOffset = 2.678;

/// Error carrying its exit code.
struct CliError : std::runtime_error {
    CliError(ExitCode code, const std::string &what) : std::runtime_error(what), code(code) {}
    ExitCode code;
};

struct TargetOptions {
    std::string builtin;
    std::string matrix_path;
    double theta = 0;
    bool theta_set = false;
    int n = 2;
    std::string convention = "swap";
};

struct SearchOptions {
    double epsilon = 1e-4;
    std::string mode = "count";
    int max_m = 8;
    int threads = 1;
};

std::string format_double(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

QftConvention parse_convention(const std::string &s) {
    if (s == "swap") {
        return QftConvention::Swap;
    }
    if (s == "noswap") {
        return QftConvention::NoSwap;
    }
    throw CliError(kUsageError, "--convention must be swap or noswap, got '" + s + "'");
}

SearchMode parse_mode(const std::string &s) {
    if (s == "count") {
        return SearchMode::Count;
    }
    if (s == "depth") {
        return SearchMode::Depth;
    }
    throw CliError(kUsageError, "--mode must be count or depth, got '" + s + "'");
}

BudgetRule parse_rule(const std::string &s) {
    if (s == "tensor") {
        return BudgetRule::Tensor;
    }
    if (s == "mult2") {
        return BudgetRule::Mult2;
    }
    if (s == "sequence") {
        return BudgetRule::Sequence;
    }
    throw CliError(kUsageError, "--rule must be tensor, mult2 or sequence, got '" + s + "'");
}

TargetSpec resolve_target(const TargetOptions &t, std::optional<double> theta_override = std::nullopt) {
    if (t.builtin.empty() == t.matrix_path.empty()) {
        throw CliError(kUsageError, "exactly one of --builtin and --matrix is required");
    }
    if (!t.matrix_path.empty()) {
        return load_matrix(t.matrix_path);
    }
    double theta = theta_override.value_or(t.theta);
    TargetSpec spec;
    if (t.builtin == "crz" || t.builtin == "givens") {
        if (!t.theta_set && !theta_override) {
            throw CliError(kUsageError, "--builtin " + t.builtin + " needs --theta");
        }
        spec.source = t.builtin + "(theta=" + format_double(theta) + ")";
        spec.num_qubits = 2;
        spec.matrix = t.builtin == "crz" ? crz(theta) : givens(theta);
        return spec;
    }
    if (t.builtin == "qft") {
        if (t.n < 1 || t.n > 4) {
            throw CliError(kInvalidInput, "--n " + std::to_string(t.n) + " is outside [1, 4] for qft");
        }
        spec.source = "qft(n=" + std::to_string(t.n) + ",convention=" + t.convention + ")";
        spec.num_qubits = t.n;
        spec.matrix = qft(t.n, parse_convention(t.convention));
        return spec;
    }
    throw CliError(kUsageError, "--builtin must be crz, givens or qft, got '" + t.builtin + "'");
}

SearchConfig make_config(const SearchOptions &s, int num_qubits) {
    if (s.max_m < 0) {
        throw CliError(kUsageError, "--max-m must be nonnegative, got " + std::to_string(s.max_m));
    }
    if (s.threads < 1) {
        throw CliError(kUsageError, "--threads must be at least 1, got " + std::to_string(s.threads));
    }
    SearchConfig cfg = SearchConfig::standard(parse_mode(s.mode), num_qubits, s.epsilon);
    cfg.m_max = s.max_m;
    cfg.thread_count = s.threads;
    return cfg;
}

void check_epsilon(double epsilon) {
    if (!check_epsilon_regime(epsilon)) {
        throw EpsilonRegimeError(epsilon);
    }
}

/// Writes via a sibling temporary so a failed run never leaves a partial file.
void write_file_atomic(const std::string &path, const std::string &content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out || !(out << content) || !out.flush()) {
            std::remove(tmp.c_str());
            throw CliError(kInvalidInput, path + ": cannot write file");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw CliError(kInvalidInput, path + ": cannot write file");
    }
}

int run_synth(const TargetOptions &t, const SearchOptions &s, const std::string &out_circuit,
              const std::string &out_json, bool timing, std::ostream &out) {
    check_epsilon(s.epsilon);
    TargetSpec target = resolve_target(t);
    SearchConfig cfg = make_config(s, target.num_qubits);

    auto start = std::chrono::steady_clock::now();
    SynthesisResult result = min_resource(target.matrix, cfg);
    double wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    json report;
    report["target"] = target.source;
    report["qubits"] = target.num_qubits;
    report["mode"] = mode_name(cfg.mode);
    report["epsilon"] = s.epsilon;
    report["m"] = result.m;
    report["generator_indices"] = result.generator_indices;
    report["achieved_distance"] = result.achieved_distance;
    report["certified"] = result.certified;
    report["t_count"] = result.circuit.t_count();
    report["t_depth"] = result.circuit.t_depth();
    report["gate_count"] = result.circuit.size();
    report["circuit_path"] = out_circuit.empty() ? json(nullptr) : json(out_circuit);
    if (t.builtin == "crz") {
        double log_term = s.epsilon > 0 ? kRzSlope * std::log2(1 / s.epsilon) : 0;
        report["baselines"] = {{"rz_fit", s.epsilon > 0 ? json(log_term + kRzOffset) : json(nullptr)},
                               {"crz_fit", s.epsilon > 0 ? json(log_term + kCrzOffset) : json(nullptr)}};
    }
    if (timing) {
        report["wall_ms"] = wall_ms;
        report["threads"] = cfg.thread_count;
        report["candidates_examined"] = result.candidates_examined;
    }

    std::string text = report.dump(2) + "\n";
    if (!out_circuit.empty()) {
        write_file_atomic(out_circuit, result.circuit.to_text());
    }
    if (!out_json.empty()) {
        write_file_atomic(out_json, text);
    } else {
        out << text;
    }
    return kOk;
}

std::vector<double> parse_list(const std::string &s) {
    std::vector<double> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw CliError(kUsageError, "--list entry '" + item + "' is not a number");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw CliError(kUsageError, "--list is empty");
    }
    return out;
}

int run_budget(int qft_n, double eps_r, const std::string &list, const std::string &rule,
               std::optional<double> avg_t, std::ostream &out) {
    out << std::setprecision(10);
    if (qft_n > 0) {
        if (!list.empty()) {
            throw CliError(kUsageError, "--qft-n and --list are mutually exclusive");
        }
        if (qft_n < 2) {
            throw CliError(kInvalidInput, "--qft-n must be at least 2, got " + std::to_string(qft_n));
        }
        QftBudget b = qft_budget(qft_n, eps_r);
        out << "rotations " << b.rotations << "\n";
        out << "epsilon " << b.epsilon << "\n";
        if (avg_t) {
            out << "t_total " << *avg_t * static_cast<double>(b.rotations) << "\n";
        }
        return kOk;
    }
    if (list.empty()) {
        throw CliError(kUsageError, "budget needs --qft-n with --eps-r, or --list");
    }
    std::vector<double> eps = parse_list(list);
    ErrorBudget b = compose(eps, parse_rule(rule));
    out << "blocks " << b.block_epsilons.size() << "\n";
    out << "rule " << rule_name(b.rule) << "\n";
    out << "epsilon " << b.composed_epsilon << "\n";
    if (avg_t) {
        out << "t_total " << *avg_t * static_cast<double>(b.block_epsilons.size()) << "\n";
    }
    return kOk;
}

int run_sweep(const TargetOptions &t, const SearchOptions &s, const std::string &thetas, const std::string &out_csv,
              std::ostream &out, std::ostream &err) {
    check_epsilon(s.epsilon);
    if (t.builtin != "crz" && t.builtin != "givens") {
        throw CliError(kUsageError, "sweep needs --builtin crz or givens");
    }
    std::vector<double> grid = thetas.empty() ? theta_grid() : parse_list(thetas);
    SearchConfig cfg = make_config(s, 2);

    std::ostringstream csv;
    csv << "theta,m,wall_ms\n";
    int solved = 0;
    int total_m = 0;
    for (double theta : grid) {
        TargetSpec target = resolve_target(t, theta);
        auto start = std::chrono::steady_clock::now();
        int m = -1;
        try {
            m = min_resource(target.matrix, cfg).m;
        } catch (const BudgetExceeded &) {
        } catch (const ReconstructionError &) {
        }
        double wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        csv << format_double(theta) << "," << m << "," << std::fixed << std::setprecision(3) << wall_ms
            << std::defaultfloat << "\n";
        if (m >= 0) {
            solved++;
            total_m += m;
        }
    }
    std::ostringstream summary;
    summary << "points " << grid.size() << " solved " << solved << " average_m "
            << (solved > 0 ? format_double(static_cast<double>(total_m) / solved) : std::string("nan")) << "\n";
    if (out_csv.empty()) {
        out << csv.str();
        err << summary.str();
    } else {
        write_file_atomic(out_csv, csv.str());
        out << summary.str();
    }
    return kOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Clifford+T synthesis with minimal T-count or T-depth within a distance budget"};
    app.require_subcommand(1);

    TargetOptions target;
    SearchOptions search;
    auto add_target = [&](CLI::App *cmd) {
        cmd->add_option("--builtin", target.builtin, "Builtin target: crz, givens or qft");
        cmd->add_option("--matrix", target.matrix_path, "Matrix file path");
        cmd->add_option("--n", target.n, "Qubit count for qft");
        cmd->add_option("--convention", target.convention, "QFT convention: swap or noswap");
    };
    auto add_search = [&](CLI::App *cmd) {
        cmd->add_option("--epsilon", search.epsilon, "Distance budget");
        cmd->add_option("--mode", search.mode, "count or depth");
        cmd->add_option("--max-m", search.max_m, "Largest generator count to try");
        cmd->add_option("--threads", search.threads, "Worker threads");
    };

    auto *synth = app.add_subcommand("synth", "Synthesize one target");
    add_target(synth);
    add_search(synth);
    synth->add_option("--theta", target.theta, "Rotation angle in radians")
        ->each([&](const std::string &) { target.theta_set = true; });
    std::string out_circuit;
    std::string out_json;
    bool timing = false;
    synth->add_option("--out-circuit", out_circuit, "Circuit output path");
    synth->add_option("--out-json", out_json, "JSON report path (default stdout)");
    synth->add_flag("--timing", timing, "Add wall time, thread count and candidate count to the report");

    auto *budget = app.add_subcommand("budget", "Compose per-block distance budgets");
    int qft_n = 0;
    double eps_r = 3e-3;
    std::string list;
    std::string rule = "sequence";
    std::optional<double> avg_t;
    budget->add_option("--qft-n", qft_n, "QFT qubit count");
    budget->add_option("--eps-r", eps_r, "Per-rotation epsilon for --qft-n");
    budget->add_option("--list", list, "Comma-separated block epsilons");
    budget->add_option("--rule", rule, "tensor, mult2 or sequence");
    budget->add_option("--avg-t", avg_t, "Average T-count per block, for a total estimate");

    auto *sweep = app.add_subcommand("sweep", "Run a theta sweep and print CSV");
    add_target(sweep);
    add_search(sweep);
    std::string thetas;
    std::string out_csv;
    sweep->add_option("--thetas", thetas, "Comma-separated angles (default: the 20-point grid)");
    sweep->add_option("--out-csv", out_csv, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (synth->parsed()) {
            return run_synth(target, search, out_circuit, out_json, timing, out);
        }
        if (budget->parsed()) {
            return run_budget(qft_n, eps_r, list, rule, avg_t, out);
        }
        return run_sweep(target, search, thetas, out_csv, out, err);
    } catch (const CliError &e) {
        err << "error: " << e.what() << "\n";
        return e.code;
    } catch (const EpsilonRegimeError &e) {
        err << "error: " << e.what() << "\n";
        return kEpsilonRegime;
    } catch (const UnsupportedError &e) {
        err << "error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const BudgetExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const NonUnitaryError &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const MatrixParseError &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace tsynth::cli
