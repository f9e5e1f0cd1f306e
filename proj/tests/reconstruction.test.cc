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

#include "tsynth/reconstruction.h"

#include "gtest/gtest.h"
#include "test_util.h"
#include "tsynth/search.h"
#include "tsynth/unitary_library.h"

using namespace tsynth;
using namespace tsynth::testing;

namespace {

TestReport passing_report(const DenseUnitary &wp, double eps) {
    auto report = amplitude_test(wp, eps);
    EXPECT_TRUE(report.has_value());
    EXPECT_TRUE(conjugation_test(wp, eps, *report));
    return *report;
}

}  // namespace

TEST(reconstruction, identity_residual) {
    DenseUnitary id = DenseUnitary::identity(2);
    DenseUnitary c = recover_clifford(id, passing_report(id, 1e-4));
    ASSERT_LE(max_abs_diff(c, id), 1e-12);
}

TEST(reconstruction, hadamard_residual_without_identity_term) {
    DenseUnitary h = from_mat(h_matrix());
    DenseUnitary wp = adjoint(h);
    TestReport report = passing_report(wp, 1e-4);
    ASSERT_EQ(report.m_support, 2);
    DenseUnitary c = recover_clifford(wp, report);
    ASSERT_LE(distance(c, h), 1e-12);
    ASSERT_TRUE(c.is_unitary());
}

TEST(reconstruction, recovers_perturbed_cliffords) {
    std::mt19937_64 rng(41);
    double eps = 1e-4;
    for (int k = 0; k < 100; k++) {
        int n = 1 + k % 2;
        DenseUnitary c0 = random_clifford(n, rng);
        DenseUnitary e = near_identity(n, eps * (k % 10 + 1) / 10.0, rng);
        DenseUnitary wp = adjoint(e) * adjoint(c0);
        DenseUnitary c = recover_clifford(wp, passing_report(wp, eps));
        ASSERT_LE(distance(c, c0), 5 * eps) << k;
        ASSERT_LE(distance(c, c0), 1e-10) << k;
        ASSERT_TRUE(is_clifford(c, 1e-8));
        ASSERT_TRUE(c.is_unitary(1e-10));
    }
}

TEST(reconstruction, reference_invariance) {
    std::mt19937_64 rng(42);
    double eps = 1e-6;
    for (int k = 0; k < 30; k++) {
        DenseUnitary c0 = random_clifford(2, rng);
        DenseUnitary wp = adjoint(near_identity(2, eps / 2, rng)) * adjoint(c0);
        TestReport report = passing_report(wp, eps);
        DenseUnitary base = recover_clifford(wp, report);
        for (const auto &[p, mag] : report.s1) {
            DenseUnitary other = recover_clifford(wp, report, p);
            ASSERT_LE(distance(base, other), 1e-6);
        }
    }
}

TEST(reconstruction, rejects_reference_outside_s1) {
    DenseUnitary h = from_mat(h_matrix());
    TestReport report = passing_report(h, 1e-4);
    ASSERT_THROW(recover_clifford(h, report, PauliOp::from_string("Y")), ReconstructionError);
}

TEST(reconstruction, rejects_inconsistent_report) {
    // CNOT = (II + ZI + IX - ZX) / 2; keeping only {II, ZI} sums to a projector.
    DenseUnitary cx = from_mat(cnot_naive(0, 1, 2));
    TestReport fake;
    fake.m_support = 2;
    fake.s1 = {{PauliOp::from_string("II"), 0.5}, {PauliOp::from_string("ZI"), 0.5}};
    ASSERT_THROW(recover_clifford(cx, fake), ReconstructionError);
    ASSERT_THROW(recover_clifford(cx, TestReport{}), ReconstructionError);
}

TEST(reconstruction, tableau_of_hadamard_and_cnot) {
    auto h = clifford_tableau(from_mat(h_matrix()));
    ASSERT_TRUE(h.has_value());
    ASSERT_EQ(h->x_images[0].str(), "+Z");
    ASSERT_EQ(h->z_images[0].str(), "+X");
    auto cx = clifford_tableau(from_mat(cnot_naive(0, 1, 2)));
    ASSERT_TRUE(cx.has_value());
    ASSERT_EQ(cx->x_images[0].str(), "+XX");
    ASSERT_EQ(cx->x_images[1].str(), "+IX");
    ASSERT_EQ(cx->z_images[0].str(), "+ZI");
    ASSERT_EQ(cx->z_images[1].str(), "+ZZ");
    ASSERT_FALSE(clifford_tableau(from_mat(t_matrix())).has_value());
}

TEST(reconstruction, clifford_to_circuit_examples) {
    ASSERT_TRUE(clifford_to_circuit(DenseUnitary::identity(2)).empty());
    Circuit h = clifford_to_circuit(from_mat(h_matrix()));
    ASSERT_LE(distance(h.unitary(), from_mat(h_matrix())), 1e-8);
    DenseUnitary c = from_mat(mat_mul_naive(cnot_naive(0, 1, 2), embed1(h_matrix(), 0, 2)));
    ASSERT_LE(distance(clifford_to_circuit(c).unitary(), c), 1e-8);
    ASSERT_THROW(clifford_to_circuit(from_mat(t_matrix())), std::invalid_argument);
}

TEST(reconstruction, clifford_round_trip_random) {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 300; k++) {
        int n = 1 + k % 3;
        DenseUnitary c = random_clifford(n, rng, 60);
        Circuit circ = clifford_to_circuit(c);
        ASSERT_LE(distance(circ.unitary(), c), 1e-8) << k;
        ASSERT_EQ(circ.t_count(), 0);
    }
}

TEST(reconstruction, assemble_examples) {
    SearchConfig cfg = SearchConfig::standard(SearchMode::Count, 1, 1e-4);
    DenseUnitary t = from_mat(t_matrix());
    SynthesisResult r = min_resource(t, cfg);
    ASSERT_EQ(r.circuit.to_text(), "qubits 1\nT 0\n");
    ASSERT_TRUE(r.certified);

    std::mt19937_64 rng(44);
    DenseUnitary c = random_clifford(2, rng);
    SynthesisResult rc = min_resource(c, SearchConfig::standard(SearchMode::Count, 2, 1e-4));
    ASSERT_EQ(rc.circuit.t_count(), 0);
    ASSERT_LE(distance(rc.circuit.unitary(), c), 1e-8);

    SynthesisResult q = min_resource(qft(2), SearchConfig::standard(SearchMode::Count, 2, 1e-3));
    ASSERT_EQ(q.circuit.t_count(), 3);
    ASSERT_LE(q.achieved_distance, 1e-3);
}

TEST(reconstruction, end_to_end_contract) {
    std::mt19937_64 rng(45);
    auto gens = tcount_generators(2);
    for (int k = 0; k < 20; k++) {
        DenseUnitary w = random_clifford(2, rng) * gens[k % 15].matrix * near_identity(2, 5e-4, rng);
        SearchConfig cfg = SearchConfig::standard(SearchMode::Count, 2, 1e-3);
        SynthesisResult r = min_resource(w, cfg);
        ASSERT_LE(r.m, 1);
        ASSERT_LE(r.achieved_distance, 1e-3);
        ASSERT_NEAR(distance(r.phase_free_unitary, w), r.achieved_distance, 1e-12);
        ASSERT_LE(distance(r.circuit.unitary(), r.phase_free_unitary), 1e-8);
        ASSERT_EQ(r.circuit.t_count(), r.m);
        ASSERT_TRUE(is_clifford(r.clifford, 1e-8));
    }
}

TEST(reconstruction, assemble_rejects_bad_candidate) {
    SearchConfig cfg = SearchConfig::standard(SearchMode::Count, 1, 1e-4);
    Candidate bogus;
    bogus.indices = {1};
    bogus.clifford = DenseUnitary::identity(1);
    ASSERT_THROW(assemble(from_mat(t_matrix()), bogus, cfg), ReconstructionError);
}
