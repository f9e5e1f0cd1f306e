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

// Serial reference kernel for the generator-sequence search. Kept deliberately
// plain: the OpenMP kernel in search_omp.cc is tested against it.

#include <algorithm>
#include <vector>

#include "search_kernel.h"
#include "tsynth/search.h"

namespace tsynth {

namespace {

struct SerialWalk {
    const SearchConfig &cfg;
    double epsilon;
    int m;
    std::vector<DenseUnitary> prefixes;
    std::vector<int> indices;
    LeafScratch scratch;
    uint64_t leaves = 0;

    std::optional<Candidate> run(int level) {
        int size = static_cast<int>(cfg.generator_set.size());
        for (int g = 0; g < size; g++) {
            if (level > 0 && indices[level - 1] == g) {
                continue;
            }
            indices[level] = g;
            prefixes[level + 1] = prefixes[level];
            apply_generator_right(prefixes[level + 1], cfg.generator_set[g]);
            if (level + 1 == m) {
                leaves++;
                if (auto c = test_leaf(prefixes[m], epsilon, cfg.conjugation, scratch)) {
                    c->indices = indices;
                    return c;
                }
            } else if (auto c = run(level + 1)) {
                return c;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<Candidate> decide_serial(const DenseUnitary &target, int m, const SearchConfig &cfg,
                                       DecideStats *stats) {
    if (m < 1) {
        throw std::invalid_argument("decide_serial: m must be >= 1, got " + std::to_string(m));
    }
    SerialWalk walk{cfg, effective_epsilon(cfg.epsilon), m, {}, std::vector<int>(m, -1), {}, 0};
    walk.prefixes.assign(m + 1, adjoint(target));
    auto found = cfg.generator_set.empty() ? std::nullopt : walk.run(0);
    if (stats != nullptr) {
        stats->leaves = walk.leaves;
    }
    return found;
}

}  // namespace tsynth
