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

#include <omp.h>

#include <atomic>
#include <vector>

#include "search_kernel.h"
#include "tsynth/search.h"

namespace tsynth {

namespace {

/// Depth-first walk below a fixed first index. Abandons the subtree as soon as
/// another worker has accepted a smaller first index.
struct PinnedWalk {
    const SearchConfig &cfg;
    double epsilon;
    int m;
    int first;
    const std::atomic<int> &best_first;
    std::vector<DenseUnitary> prefixes;
    std::vector<int> indices;
    LeafScratch scratch;
    uint64_t leaves = 0;
    bool abandoned = false;

    std::optional<Candidate> run(int level) {
        int size = static_cast<int>(cfg.generator_set.size());
        for (int g = 0; g < size; g++) {
            if (indices[level - 1] == g) {
                continue;
            }
            if (best_first.load(std::memory_order_relaxed) < first) {
                abandoned = true;
                return std::nullopt;
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

std::optional<Candidate> decide_parallel(const DenseUnitary &target, int m, const SearchConfig &cfg,
                                         DecideStats *stats) {
    if (m < 1) {
        throw std::invalid_argument("decide_parallel: m must be >= 1, got " + std::to_string(m));
    }
    const int size = static_cast<int>(cfg.generator_set.size());
    const double epsilon = effective_epsilon(cfg.epsilon);
    const DenseUnitary start = adjoint(target);
    std::atomic<int> best_first{size};
    std::atomic<uint64_t> leaves{0};
    std::vector<std::optional<Candidate>> found(size);
    int threads = std::max(1, cfg.thread_count);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int first = 0; first < size; first++) {
        if (best_first.load(std::memory_order_relaxed) < first) {
            continue;
        }
        PinnedWalk walk{cfg, epsilon, m, first, best_first, {}, std::vector<int>(m, -1), {}, 0, false};
        walk.indices[0] = first;
        walk.prefixes.assign(m + 1, start);
        apply_generator_right(walk.prefixes[1], cfg.generator_set[first]);
        std::optional<Candidate> hit;
        if (m == 1) {
            walk.leaves++;
            hit = test_leaf(walk.prefixes[1], epsilon, cfg.conjugation, walk.scratch);
            if (hit) {
                hit->indices = walk.indices;
            }
        } else {
            hit = walk.run(1);
        }
        leaves.fetch_add(walk.leaves, std::memory_order_relaxed);
        if (hit) {
            found[first] = std::move(hit);
            int current = best_first.load();
            while (first < current && !best_first.compare_exchange_weak(current, first)) {
            }
        }
    }

    if (stats != nullptr) {
        stats->leaves = leaves.load();
    }
    int winner = best_first.load();
    if (winner >= size) {
        return std::nullopt;
    }
    return std::move(found[winner]);
}

}  // namespace tsynth
