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

#include "tsynth/search.h"

#include <sstream>

#include "tsynth/reconstruction.h"

namespace tsynth {

const char *mode_name(SearchMode mode) { return mode == SearchMode::Count ? "count" : "depth"; }

EpsilonRegimeError::EpsilonRegimeError(double epsilon)
    : std::invalid_argument([&] {
          std::ostringstream msg;
          msg.precision(12);
          msg << "epsilon " << epsilon << " outside the supported range [0, " << kMaxEpsilon << "]";
          return msg.str();
      }()),
      epsilon_(epsilon) {}

BudgetExceeded::BudgetExceeded(int m_max)
    : std::runtime_error("no decomposition found with at most " + std::to_string(m_max) +
                         " generators; raise --max-m or epsilon"),
      m_max_(m_max) {}

SearchConfig SearchConfig::standard(SearchMode mode, int num_qubits, double epsilon) {
    SearchConfig cfg;
    cfg.mode = mode;
    cfg.epsilon = epsilon;
    if (mode == SearchMode::Count) {
        cfg.generator_set = tcount_generators(num_qubits);
    } else {
        if (num_qubits > 2) {
            throw UnsupportedError("depth mode supports at most 2 qubits, got " + std::to_string(num_qubits));
        }
        cfg.generator_set = build_vn(num_qubits);
    }
    return cfg;
}

uint64_t count_sequences(uint64_t alphabet, int length) {
    if (length <= 0) {
        return 1;
    }
    uint64_t total = alphabet;
    for (int k = 1; k < length; k++) {
        total *= alphabet - 1;
    }
    return total;
}

std::optional<Candidate> evaluate_residual(const DenseUnitary &residual, double epsilon, ConjugationBounds bounds) {
    auto report = amplitude_test(residual, epsilon);
    if (!report || !conjugation_test(residual, epsilon, *report, bounds)) {
        return std::nullopt;
    }
    Candidate c;
    try {
        c.clifford = recover_clifford(residual, *report);
    } catch (const ReconstructionError &) {
        return std::nullopt;
    }
    // d(U~ C, W) with W^dag U~ = residual.
    c.distance = distance(adjoint(residual), c.clifford);
    if (!(c.distance <= epsilon)) {
        return std::nullopt;
    }
    c.residual = residual;
    c.report = std::move(*report);
    return c;
}

std::optional<Candidate> decide(const DenseUnitary &target, int m, const SearchConfig &cfg, DecideStats *stats) {
    if (m == 0) {
        if (stats != nullptr) {
            stats->leaves = 1;
        }
        return evaluate_residual(adjoint(target), effective_epsilon(cfg.epsilon), cfg.conjugation);
    }
    return decide_parallel(target, m, cfg, stats);
}

SynthesisResult min_resource(const DenseUnitary &target, const SearchConfig &cfg) {
    if (!check_epsilon_regime(cfg.epsilon)) {
        throw EpsilonRegimeError(cfg.epsilon);
    }
    if (cfg.m_max < 0) {
        throw std::invalid_argument("m_max must be >= 0");
    }
    if (!target.is_unitary()) {
        throw NonUnitaryError("min_resource: target is not unitary", target.unitarity_deviation());
    }
    const SearchConfig *active = &cfg;
    SearchConfig standard;
    if (cfg.generator_set.empty()) {
        standard = SearchConfig::standard(cfg.mode, target.num_qubits(), cfg.epsilon);
        standard.m_max = cfg.m_max;
        standard.thread_count = cfg.thread_count;
        standard.conjugation = cfg.conjugation;
        active = &standard;
    }
    uint64_t examined = 0;
    for (int m = 0; m <= active->m_max; m++) {
        DecideStats stats;
        auto found = decide(target, m, *active, &stats);
        examined += stats.leaves;
        if (found) {
            SynthesisResult result = assemble(target, *found, *active);
            result.candidates_examined = examined;
            return result;
        }
    }
    throw BudgetExceeded(active->m_max);
}

}  // namespace tsynth
