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

#ifndef TSYNTH_ERROR_BUDGET_H
#define TSYNTH_ERROR_BUDGET_H

#include <cstdint>
#include <span>
#include <vector>

namespace tsynth {

enum class BudgetRule { Tensor, Mult2, Sequence };

const char *rule_name(BudgetRule rule);

struct ErrorBudget {
    std::vector<double> block_epsilons;
    double composed_epsilon = 0;
    BudgetRule rule = BudgetRule::Sequence;
};

/// Distance bound for a tensor product of blocks at distances eps_i:
/// sqrt(1 - prod(1 - eps_i^2)).
double compose_tensor(std::span<const double> eps);

/// Distance bound for a product V2 V1 of two blocks at distances e1, e2.
double compose_mult2(double e1, double e2);

/// Estimate for a product of blocks:
/// e^2 = sum e_i^2 + 2 sum_{i>=2} e_i S_i sqrt(max(0, 1 - e_i^2 - S_i^2)), S_i = sum_{j<i} e_j,
/// clamped to [0, 1]. This is a heuristic upper estimate rather than a proven bound.
double compose_sequence(std::span<const double> eps);

/// Applies `rule` to `eps`. Mult2 folds left to right over the list.
ErrorBudget compose(std::span<const double> eps, BudgetRule rule);

struct QftBudget {
    /// n(n - 1) / 2 two-qubit controlled rotations.
    int64_t rotations = 0;
    double epsilon = 0;
};

/// Budget for an n-qubit QFT split into controlled rotations at eps_r each.
QftBudget qft_budget(int num_qubits, double eps_r);

}  // namespace tsynth

#endif
