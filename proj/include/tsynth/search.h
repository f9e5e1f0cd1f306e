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

#ifndef TSYNTH_SEARCH_H
#define TSYNTH_SEARCH_H

#include <cstdint>
#include <optional>
#include <vector>

#include "tsynth/synthesis_types.h"

namespace tsynth {

struct DecideStats {
    /// Complete length-m sequences whose residual was tested.
    uint64_t leaves = 0;
};

/// |S| * (|S| - 1)^(m - 1): adjacent-distinct sequences of length m over |S| symbols.
uint64_t count_sequences(uint64_t alphabet, int length);

/// Runs the amplitude test, conjugation test, Clifford recovery and the final
/// distance check on one residual W^dag * U~. Nullopt when any stage rejects.
std::optional<Candidate> evaluate_residual(const DenseUnitary &residual, double epsilon,
                                           ConjugationBounds bounds = ConjugationBounds::Rigorous);

/// Depth-first reference walk over all adjacent-distinct sequences of length m
/// in lexicographic order. Returns the first (smallest) accepted candidate.
std::optional<Candidate> decide_serial(const DenseUnitary &target, int m, const SearchConfig &cfg,
                                       DecideStats *stats = nullptr);

/// Same result as decide_serial. The first generator index is distributed over
/// cfg.thread_count OpenMP threads; each worker owns its prefix stack and the
/// lowest accepted first index wins.
std::optional<Candidate> decide_parallel(const DenseUnitary &target, int m, const SearchConfig &cfg,
                                         DecideStats *stats = nullptr);

/// decide_parallel for m >= 1; m == 0 tests W^dag alone.
std::optional<Candidate> decide(const DenseUnitary &target, int m, const SearchConfig &cfg,
                                DecideStats *stats = nullptr);

/// Smallest m <= cfg.m_max with an accepted candidate, reconstructed into a
/// full circuit. Throws EpsilonRegimeError, BudgetExceeded or UnsupportedError.
SynthesisResult min_resource(const DenseUnitary &target, const SearchConfig &cfg);

}  // namespace tsynth

#endif
