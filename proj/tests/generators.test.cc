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

#include "tsynth/generators.h"

#include "gtest/gtest.h"
#include "test_util.h"
#include "tsynth/circuit.h"

using namespace tsynth;
using namespace tsynth::testing;

namespace {

const cplx kOmega = std::polar(1.0, std::numbers::pi / 4);

/// ((1 + w)/2) I + ((1 - w)/2) P, straight from the closed form.
Mat r_closed_form(const Mat &p, bool dagger) {
    cplx w = dagger ? std::conj(kOmega) : kOmega;
    Mat out = p;
    for (size_t i = 0; i < p.size(); i++) {
        for (size_t j = 0; j < p.size(); j++) {
            out[i][j] = (1.0 - w) / 2.0 * p[i][j] + (i == j ? (1.0 + w) / 2.0 : 0.0);
        }
    }
    return out;
}

Mat conj_by(const Mat &c, const Mat &p) { return mat_mul_naive(mat_mul_naive(c, p), dagger_naive(c)); }

}  // namespace

TEST(circuit, text_round_trip) {
    Circuit c(3);
    c.h(0);
    c.s(1);
    c.sdg(2);
    c.x(0);
    c.t(1);
    c.tdg(2);
    c.cnot(0, 2);
    std::string text = c.to_text();
    ASSERT_EQ(text, "qubits 3\nH 0\nS 1\nSDG 2\nX 0\nT 1\nTDG 2\nCNOT 0 2\n");
    ASSERT_EQ(Circuit::from_text(text), c);
    ASSERT_THROW(Circuit::from_text("H 0\n"), std::invalid_argument);
    ASSERT_THROW(Circuit::from_text("qubits 1\nFOO 0\n"), std::invalid_argument);
    ASSERT_THROW(Circuit::from_text("qubits 1\nH 3\n"), std::invalid_argument);
}

TEST(circuit, rejects_bad_qubits) {
    Circuit c(2);
    ASSERT_THROW(c.h(2), std::invalid_argument);
    ASSERT_THROW(c.cnot(1, 1), std::invalid_argument);
}

TEST(circuit, unitary_matches_gate_oracles) {
    Circuit c(2);
    c.h(0);
    c.cnot(0, 1);
    c.t(1);
    c.s(0);
    Mat expected = embed1(h_matrix(), 0, 2);
    expected = mat_mul_naive(cnot_naive(0, 1, 2), expected);
    expected = mat_mul_naive(embed1(t_matrix(), 1, 2), expected);
    expected = mat_mul_naive(embed1(s_matrix(), 0, 2), expected);
    ASSERT_LE(max_diff_naive(to_mat(c.unitary()), expected), 1e-14);
    ASSERT_LE(distance(mat_mul(c.unitary(), c.inverse().unitary()), DenseUnitary::identity(2)), 1e-12);
}

TEST(circuit, t_count_and_depth) {
    Circuit c(2);
    c.t(0);
    c.t(1);
    ASSERT_EQ(c.t_count(), 2);
    ASSERT_EQ(c.t_depth(), 1);
    c.cnot(0, 1);
    c.tdg(1);
    ASSERT_EQ(c.t_count(), 3);
    ASSERT_EQ(c.t_depth(), 2);
    c.h(0);
    c.t(0);
    ASSERT_EQ(c.t_depth(), 2);
}

TEST(circuit, conjugate_by_gate_matches_matrices) {
    std::vector<Gate> gates = {{GateKind::H, 0},    {GateKind::H, 1},       {GateKind::S, 0},
                               {GateKind::Sdg, 1},  {GateKind::X, 0},       {GateKind::CNOT, 0, 1},
                               {GateKind::CNOT, 1, 0}};
    for (const auto &g : gates) {
        Mat gm = to_mat(gate_unitary(2, g));
        for (const auto &p : enumerate_paulis(2, true)) {
            PauliOp image = conjugate_by_gate(p, g);
            ASSERT_LE(max_diff_naive(to_mat(materialize(image)), conj_by(gm, to_mat(materialize(p)))), 1e-12)
                << gate_mnemonic(g.kind) << " " << p;
        }
    }
    ASSERT_THROW(conjugate_by_gate(PauliOp::from_string("X"), {GateKind::T, 0}), std::invalid_argument);
}

TEST(generators, r_of_pauli_examples) {
    Generator rz = r_of_pauli(PauliOp::from_string("Z"), false);
    ASSERT_LE(max_diff_naive(to_mat(rz.matrix), t_matrix()), 1e-15);
    Generator rx = r_of_pauli(PauliOp::from_string("X"), false);
    Mat hth = mat_mul_naive(mat_mul_naive(h_matrix(), t_matrix()), h_matrix());
    ASSERT_LE(max_diff_naive(to_mat(rx.matrix), hth), 1e-12);
    ASSERT_THROW(r_of_pauli(PauliOp::identity(2), false), std::invalid_argument);
    ASSERT_THROW(r_of_pauli(PauliOp::identity(2).negated(), false), std::invalid_argument);
}

TEST(generators, r_matches_closed_form_and_inverts) {
    for (const auto &p : enumerate_paulis(2, true)) {
        if (p.is_identity()) {
            continue;
        }
        for (bool dagger : {false, true}) {
            Generator g = r_of_pauli(p, dagger);
            ASSERT_LE(max_diff_naive(to_mat(g.matrix), r_closed_form(to_mat(materialize(p)), dagger)), 1e-14);
            ASSERT_LE(distance(g.circuit().unitary(), g.matrix), 1e-10) << p;
            ASSERT_EQ(g.circuit().t_count(), 1);
        }
        DenseUnitary prod = mat_mul(r_of_pauli(p, false).matrix, r_of_pauli(p, true).matrix);
        ASSERT_LE(max_abs_diff(prod, DenseUnitary::identity(2)), 1e-14);
    }
}

TEST(generators, apply_factor_right_matches_product) {
    std::mt19937_64 rng(1);
    for (int n = 1; n <= 3; n++) {
        DenseUnitary u = haar(n, rng);
        for (const auto &p : enumerate_paulis(n, true)) {
            if (p.is_identity()) {
                continue;
            }
            RotationFactor f{p, p.phase() == 0};
            DenseUnitary expected = mat_mul(u, rotation_matrix(f));
            DenseUnitary got = u;
            apply_factor_right(got, f);
            ASSERT_LE(max_abs_diff(got, expected), 1e-14);
        }
    }
}

TEST(generators, tcount_sets) {
    auto one = tcount_generators(1);
    ASSERT_EQ(one.size(), 3u);
    ASSERT_EQ(one[0].factors[0].pauli.str(), "+Z");
    ASSERT_EQ(one[1].factors[0].pauli.str(), "+X");
    ASSERT_EQ(one[2].factors[0].pauli.str(), "+Y");
    ASSERT_EQ(tcount_generators(2).size(), 15u);
    auto three = tcount_generators(3);
    ASSERT_EQ(three.size(), 63u);
    for (size_t k = 0; k < three.size(); k++) {
        ASSERT_EQ(three[k].index, static_cast<int>(k));
        ASSERT_EQ(three[k].kind, GeneratorKind::RCount);
    }
}

TEST(generators, conjugator_examples) {
    ASSERT_TRUE(conjugator_circuit(PauliOp::from_string("Z"), 0).empty());
    Circuit cx = conjugator_circuit(PauliOp::from_string("X"), 0);
    ASSERT_EQ(cx.to_text(), "qubits 1\nH 0\n");
    ASSERT_THROW(conjugator_circuit(PauliOp::identity(1), 0), std::invalid_argument);
}

TEST(generators, conjugator_maps_z_to_p) {
    for (int n = 1; n <= 3; n++) {
        for (const auto &p : enumerate_paulis(n, true)) {
            if (p.is_identity()) {
                continue;
            }
            for (int q = 0; q < n; q++) {
                Mat c = to_mat(conjugator_circuit(p, q).unitary());
                Mat image = conj_by(c, to_mat(materialize(PauliOp::single(n, q, 'Z'))));
                ASSERT_LE(max_diff_naive(image, to_mat(materialize(p))), 1e-10) << p << " q=" << q;
            }
        }
    }
}

TEST(generators, canonical_phase_examples) {
    DenseUnitary id = DenseUnitary::identity(1);
    ASSERT_LE(max_abs_diff(canonical_phase(std::polar(1.0, std::numbers::pi / 3) * id), id), 1e-15);
    DenseUnitary t = from_mat(t_matrix());
    ASSERT_LE(max_abs_diff(canonical_phase(t), t), 0);
    DenseUnitary a = kOmega * r_of_pauli(PauliOp::from_string("Z"), true).matrix;
    DenseUnitary b = r_of_pauli(PauliOp::from_string("-Z"), false).matrix;
    ASSERT_LE(max_abs_diff(a, b), 1e-15);
    ASSERT_LE(max_abs_diff(canonical_phase(a), canonical_phase(b)), 1e-15);
    ASSERT_LE(max_abs_diff(canonical_phase(canonical_phase(a)), canonical_phase(a)), 0);
}

TEST(generators, vn_sizes_and_contents) {
    auto v1 = build_vn(1);
    ASSERT_LE(v1.size(), 24u);
    auto v2 = build_vn(2);
    ASSERT_LE(v2.size(), 576u);
    ASSERT_THROW(build_vn(3), std::invalid_argument);

    DenseUnitary t = from_mat(t_matrix());
    bool has_t = false;
    bool has_tdg = false;
    for (const auto &g : v1) {
        has_t = has_t || distance(g.matrix, t) < 1e-12;
        has_tdg = has_tdg || distance(g.matrix, adjoint(t)) < 1e-12;
    }
    ASSERT_TRUE(has_t);
    ASSERT_TRUE(has_tdg);
}

TEST(generators, vn_blocks_are_single_stage_products) {
    for (int n = 1; n <= 2; n++) {
        auto vn = build_vn(n);
        for (size_t k = 0; k < vn.size(); k++) {
            const Generator &g = vn[k];
            ASSERT_EQ(g.index, static_cast<int>(k));
            ASSERT_EQ(g.kind, GeneratorKind::DepthBlock);
            DenseUnitary prod = DenseUnitary::identity(n);
            for (const auto &f : g.factors) {
                prod = prod * rotation_matrix(f);
                for (const auto &h : g.factors) {
                    ASSERT_TRUE(f.pauli.commutes_with(h.pauli));
                }
            }
            ASSERT_LE(max_abs_diff(prod, g.matrix), 1e-12);
            Circuit c = g.circuit();
            ASSERT_LE(distance(c.unitary(), g.matrix), 1e-10);
            ASSERT_EQ(c.t_depth(), 1);
            ASSERT_EQ(c.t_count(), static_cast<int>(g.factors.size()));
            for (size_t j = 0; j < k; j++) {
                ASSERT_GT(distance(vn[j].matrix, g.matrix), 1e-9) << "duplicate block " << j << " " << k;
            }
        }
    }
}

TEST(generators, v1_elements_are_single_rotations) {
    for (const auto &g : build_vn(1)) {
        ASSERT_EQ(g.factors.size(), 1u);
    }
}
