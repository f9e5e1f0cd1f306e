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

#ifndef TSYNTH_SEARCH_KERNEL_H
#define TSYNTH_SEARCH_KERNEL_H

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "tsynth/search.h"

namespace tsynth {

inline void apply_generator_right(DenseUnitary &u, const Generator &g) {
    for (const auto &f : g.factors) {
        apply_factor_right(u, f);
    }
}

struct LeafScratch {
    std::vector<double> values;
};

/// Cheap amplitude prefilter; full evaluation only for residuals that pass it.
inline std::optional<Candidate> test_leaf(const DenseUnitary &residual, double epsilon, ConjugationBounds bounds,
                                          LeafScratch &scratch) {
    size_t count = residual.dim() * residual.dim();
    scratch.values.resize(count);
    abs_pauli_coefficients(residual, scratch.values);
    std::sort(scratch.values.begin(), scratch.values.end(), std::greater<>());
    if (amplitude_support(scratch.values, epsilon) == 0) {
        return std::nullopt;
    }
    return evaluate_residual(residual, epsilon, bounds);
}

}  // namespace tsynth

#endif
