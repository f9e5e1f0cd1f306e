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

#include "tsynth/error_budget.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tsynth {

namespace {

void check_range(double e) {
    if (!(e >= 0 && e < 1)) {
        throw std::out_of_range("block epsilon " + std::to_string(e) + " is outside [0, 1)");
    }
}

void check_range(std::span<const double> eps) {
    for (double e : eps) {
        check_range(e);
    }
}

}  // namespace

const char *rule_name(BudgetRule rule) {
    switch (rule) {
        case BudgetRule::Tensor:
            return "tensor";
        case BudgetRule::Mult2:
            return "mult2";
        case BudgetRule::Sequence:
            return "sequence";
    }
    return "?";
}

double compose_tensor(std::span<const double> eps) {
    check_range(eps);
    double keep = 1;
    for (double e : eps) {
        keep *= 1 - e * e;
    }
    return std::sqrt(std::max(0.0, 1 - keep));
}

double compose_mult2(double e1, double e2) {
    check_range(e1);
    check_range(e2);
    double sq = 1 - (1 - e1 * e1) * (1 - e2 * e2) +
                2 * e1 * e2 * std::sqrt((1 - e1 * e1 / 2) * (1 - e2 * e2 / 2));
    return std::min(1.0, std::sqrt(sq));
}

double compose_sequence(std::span<const double> eps) {
    check_range(eps);
    double sq = 0;
    double prefix = 0;
    for (size_t i = 0; i < eps.size(); i++) {
        double e = eps[i];
        sq += e * e;
        if (i > 0) {
            sq += 2 * e * prefix * std::sqrt(std::max(0.0, 1 - e * e - prefix * prefix));
        }
        prefix += e;
    }
    return std::sqrt(std::clamp(sq, 0.0, 1.0));
}

ErrorBudget compose(std::span<const double> eps, BudgetRule rule) {
    ErrorBudget out;
    out.block_epsilons.assign(eps.begin(), eps.end());
    out.rule = rule;
    switch (rule) {
        case BudgetRule::Tensor:
            out.composed_epsilon = compose_tensor(eps);
            break;
        case BudgetRule::Mult2: {
            check_range(eps);
            double acc = 0;
            for (double e : eps) {
                // A running value of 1 is outside the rule's domain but already saturated.
                acc = acc >= 1 ? 1.0 : compose_mult2(acc, e);
            }
            out.composed_epsilon = acc;
            break;
        }
        case BudgetRule::Sequence:
            out.composed_epsilon = compose_sequence(eps);
            break;
    }
    return out;
}

QftBudget qft_budget(int num_qubits, double eps_r) {
    if (num_qubits < 2) {
        throw std::invalid_argument("qft_budget needs at least 2 qubits, got " + std::to_string(num_qubits));
    }
    QftBudget out;
    out.rotations = static_cast<int64_t>(num_qubits) * (num_qubits - 1) / 2;
    std::vector<double> eps(static_cast<size_t>(out.rotations), eps_r);
    out.epsilon = compose_sequence(eps);
    return out;
}

}  // namespace tsynth
