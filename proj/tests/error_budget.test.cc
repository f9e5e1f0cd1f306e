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

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace tsynth;
using namespace tsynth::testing;

TEST(error_budget, tensor_examples) {
    ASSERT_EQ(compose_tensor(std::vector<double>{0}), 0);
    ASSERT_NEAR(compose_tensor(std::vector<double>{0.03, 0, 0}), 0.03, 1e-15);
    ASSERT_NEAR(compose_tensor(std::vector<double>{0.1, 0.1}), std::sqrt(1 - 0.99 * 0.99), 1e-15);
    ASSERT_NEAR(compose_tensor(std::vector<double>{0.1, 0.1}), 0.141067, 1e-6);
}

TEST(error_budget, mult2_examples) {
    ASSERT_NEAR(compose_mult2(0, 0.2), 0.2, 1e-15);
    double v = compose_mult2(0.1, 0.1);
    double expected = std::sqrt(1 - 0.99 * 0.99 + 2 * 0.01 * (1 - 0.005));
    ASSERT_NEAR(v, expected, 1e-15);
    ASSERT_LT(v, 0.2);
    ASSERT_EQ(compose_mult2(0.9, 0.9), 1.0);
}

TEST(error_budget, sequence_examples) {
    ASSERT_NEAR(compose_sequence(std::vector<double>{0.07}), 0.07, 1e-15);
    std::vector<double> eps(190, 3e-3);
    ASSERT_NEAR(compose_sequence(eps), 0.545137, 1e-6);
}

TEST(error_budget, sequence_matches_literal_formula) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(0, 0.05);
    for (int k = 0; k < 100; k++) {
        std::vector<double> eps(1 + k % 12);
        for (auto &e : eps) {
            e = u(rng);
        }
        double sq = 0;
        for (double e : eps) {
            sq += e * e;
        }
        for (size_t i = 1; i < eps.size(); i++) {
            double prefix = 0;
            for (size_t j = 0; j < i; j++) {
                prefix += eps[j];
            }
            sq += 2 * eps[i] * prefix * std::sqrt(std::max(0.0, 1 - eps[i] * eps[i] - prefix * prefix));
        }
        ASSERT_NEAR(compose_sequence(eps), std::sqrt(std::min(1.0, sq)), 1e-14);
    }
}

TEST(error_budget, sequence_below_sum) {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> u(0, 0.1);
    for (int k = 0; k < 500; k++) {
        std::vector<double> eps(2 + k % 8);
        double sum = 0;
        for (auto &e : eps) {
            e = u(rng);
            sum += e;
        }
        if (sum < 1) {
            ASSERT_LT(compose_sequence(eps), sum);
        }
        ASSERT_LT(compose_tensor(eps), sum);
    }
}

TEST(error_budget, sequence_and_mult2_agree_to_leading_order) {
    // Two blocks: the estimate and the lemma share all terms up to O(eps^4).
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(0, 0.1);
    for (int k = 0; k < 200; k++) {
        double a = u(rng);
        double b = u(rng);
        double seq = compose_sequence(std::vector<double>{a, b});
        double m2 = compose_mult2(a, b);
        ASSERT_LE(std::abs(seq * seq - m2 * m2), (a * a + b * b) * (a * a + b * b));
    }
}

TEST(error_budget, monotone) {
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> u(0, 0.2);
    for (int k = 0; k < 200; k++) {
        std::vector<double> eps(3);
        for (auto &e : eps) {
            e = u(rng);
        }
        std::vector<double> bigger = eps;
        bigger[k % 3] += 0.01;
        ASSERT_LE(compose_tensor(eps), compose_tensor(bigger));
        ASSERT_LE(compose_sequence(eps), compose_sequence(bigger));
        ASSERT_LE(compose_mult2(eps[0], eps[1]), compose_mult2(bigger[0], bigger[1]) + 1e-15);
    }
}

TEST(error_budget, range_errors) {
    ASSERT_THROW(compose_tensor(std::vector<double>{1.0}), std::out_of_range);
    ASSERT_THROW(compose_sequence(std::vector<double>{-0.1}), std::out_of_range);
    ASSERT_THROW(compose_mult2(0.1, 1.5), std::out_of_range);
}

TEST(error_budget, qft_examples) {
    QftBudget b20 = qft_budget(20, 3e-3);
    ASSERT_EQ(b20.rotations, 190);
    ASSERT_NEAR(b20.epsilon, 0.545137, 1e-5);
    QftBudget b2 = qft_budget(2, 0.0123);
    ASSERT_EQ(b2.rotations, 1);
    ASSERT_NEAR(b2.epsilon, 0.0123, 1e-15);
    QftBudget b3 = qft_budget(3, 3e-3);
    ASSERT_EQ(b3.rotations, 3);
    ASSERT_NEAR(b3.epsilon, compose_sequence(std::vector<double>{3e-3, 3e-3, 3e-3}), 1e-15);
    ASSERT_THROW(qft_budget(1, 1e-3), std::invalid_argument);
}

TEST(error_budget, compose_dispatch) {
    std::vector<double> eps = {0.1, 0.05, 0.02};
    ASSERT_EQ(compose(eps, BudgetRule::Tensor).composed_epsilon, compose_tensor(eps));
    ASSERT_EQ(compose(eps, BudgetRule::Sequence).composed_epsilon, compose_sequence(eps));
    ASSERT_EQ(compose(eps, BudgetRule::Mult2).composed_epsilon, compose_mult2(compose_mult2(0.1, 0.05), 0.02));
    ASSERT_EQ(compose(eps, BudgetRule::Mult2).block_epsilons, eps);
}

TEST(error_budget, lemma_bounds_hold_on_samples) {
    std::mt19937_64 rng(55);
    for (int k = 0; k < 500; k++) {
        int n = 1 + k % 2;
        DenseUnitary u1 = haar(n, rng);
        DenseUnitary u2 = haar(n, rng);
        DenseUnitary v1 = u1 * near_identity(n, 0.2 * (k % 7 + 1) / 7.0, rng);
        DenseUnitary v2 = near_identity(n, 0.2 * (k % 5 + 1) / 5.0, rng) * u2;
        double e1 = distance(u1, v1);
        double e2 = distance(u2, v2);
        ASSERT_LE(distance(u2 * u1, v2 * v1), compose_mult2(e1, e2) + 1e-12);
        ASSERT_LE(distance(tensor(u1, u2), tensor(v1, v2)), compose_tensor(std::vector<double>{e1, e2}) + 1e-12);
    }
}
