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

#include <cmath>
#include <numbers>

namespace tsynth {

namespace {

/// Nearest element of {1, i, -1, -i}.
cplx snap_quarter_turn(cplx v) {
    double turns = std::round(std::arg(v) / (std::numbers::pi / 2));
    int k = ((static_cast<int>(turns) % 4) + 4) % 4;
    static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k];
}

/// The single signed Pauli that C p C^dag equals, if any.
std::optional<PauliOp> conjugated_pauli(const DenseUnitary &c, const DenseUnitary &c_dag, const PauliOp &p,
                                        double tolerance) {
    DenseUnitary image = mat_mul(mat_mul(c, materialize(p)), c_dag);
    PauliSpectrum spectrum = PauliSpectrum::of(image, 1e-6);
    auto coeffs = spectrum.coefficients();
    int n = c.num_qubits();
    std::optional<PauliOp> hit;
    for (uint32_t k = 0; k < coeffs.size(); k++) {
        double mag = std::abs(coeffs[k]);
        if (mag <= tolerance) {
            continue;
        }
        if (hit || std::abs(mag - 1) > tolerance) {
            return std::nullopt;
        }
        // Images of Hermitian Paulis are Hermitian: the coefficient is +-1.
        if (std::abs(coeffs[k].imag()) > tolerance) {
            return std::nullopt;
        }
        hit = PauliOp(n, k >> n, k & ((1u << n) - 1), coeffs[k].real() > 0 ? 0 : 2);
    }
    return hit;
}

class TableauReducer {
  public:
    TableauReducer(Tableau t, int n) : t_(std::move(t)), n_(n), ops_(n) {}

    Circuit reduce() {
        for (int q = 0; q < n_; q++) {
            set_x_image_pivot(q);
            clear_x_image_row(q);
            clear_z_image_row(q);
        }
        for (int q = 0; q < n_; q++) {
            if (t_.x_images[q].phase() == 2) {
                // Z flips the sign of X_q.
                apply({GateKind::S, q});
                apply({GateKind::S, q});
            }
            if (t_.z_images[q].phase() == 2) {
                apply({GateKind::X, q});
            }
        }
        return ops_.inverse();
    }

  private:
    bool xbit(const PauliOp &p, int q) const { return p.letter(q) == 'X' || p.letter(q) == 'Y'; }
    bool zbit(const PauliOp &p, int q) const { return p.letter(q) == 'Z' || p.letter(q) == 'Y'; }

    void apply(Gate g) {
        for (auto &p : t_.x_images) {
            p = conjugate_by_gate(p, g);
        }
        for (auto &p : t_.z_images) {
            p = conjugate_by_gate(p, g);
        }
        ops_.push(g);
    }

    void swap(int a, int b) {
        apply({GateKind::CNOT, a, b});
        apply({GateKind::CNOT, b, a});
        apply({GateKind::CNOT, a, b});
    }

    void set_x_image_pivot(int q) {
        if (xbit(t_.x_images[q], q)) {
            return;
        }
        for (int i = q + 1; i < n_; i++) {
            if (xbit(t_.x_images[q], i)) {
                swap(i, q);
                return;
            }
        }
        for (int i = q; i < n_; i++) {
            if (zbit(t_.x_images[q], i)) {
                apply({GateKind::H, i});
                if (i != q) {
                    swap(i, q);
                }
                return;
            }
        }
    }

    void clear_x_image_row(int q) {
        for (int i = q + 1; i < n_; i++) {
            if (xbit(t_.x_images[q], i)) {
                apply({GateKind::CNOT, q, i});
            }
        }
        bool any_z = false;
        for (int i = q; i < n_; i++) {
            any_z = any_z || zbit(t_.x_images[q], i);
        }
        if (!any_z) {
            return;
        }
        if (!zbit(t_.x_images[q], q)) {
            apply({GateKind::S, q});
        }
        for (int i = q + 1; i < n_; i++) {
            if (zbit(t_.x_images[q], i)) {
                apply({GateKind::CNOT, i, q});
            }
        }
        apply({GateKind::S, q});
    }

    void clear_z_image_row(int q) {
        for (int i = q + 1; i < n_; i++) {
            if (zbit(t_.z_images[q], i)) {
                apply({GateKind::CNOT, i, q});
            }
        }
        bool any_x = false;
        for (int i = q; i < n_; i++) {
            any_x = any_x || xbit(t_.z_images[q], i);
        }
        if (!any_x) {
            return;
        }
        apply({GateKind::H, q});
        for (int i = q + 1; i < n_; i++) {
            if (xbit(t_.z_images[q], i)) {
                apply({GateKind::CNOT, q, i});
            }
        }
        if (zbit(t_.z_images[q], q)) {
            apply({GateKind::S, q});
        }
        apply({GateKind::H, q});
    }

    Tableau t_;
    int n_;
    Circuit ops_;
};

}  // namespace

DenseUnitary recover_clifford(const DenseUnitary &residual, const TestReport &report,
                              std::optional<PauliOp> reference) {
    if (report.s1.empty()) {
        throw ReconstructionError("recover_clifford: empty S1");
    }
    int n = residual.num_qubits();
    double inv_n = 1.0 / static_cast<double>(residual.dim());
    PauliOp ref = report.s1.front().first;
    for (const auto &[p, mag] : report.s1) {
        if (p.is_identity()) {
            ref = p;
        }
    }
    if (reference) {
        bool member = false;
        for (const auto &[p, mag] : report.s1) {
            member = member || p == reference->bare();
        }
        if (!member) {
            throw ReconstructionError("recover_clifford: reference " + reference->str() + " is not in S1");
        }
        ref = reference->bare();
    }
    cplx t_ref = trace_with_pauli(residual, ref) * inv_n;
    if (std::abs(t_ref) == 0) {
        throw ReconstructionError("recover_clifford: reference coefficient vanishes");
    }
    double r = 1.0 / std::sqrt(static_cast<double>(report.m_support));
    DenseUnitary out(n);
    for (const auto &[p, mag] : report.s1) {
        cplx ratio = trace_with_pauli(residual, p) * inv_n / t_ref;
        if (std::abs(ratio) == 0) {
            throw ReconstructionError("recover_clifford: S1 coefficient vanishes");
        }
        cplx weight = r * std::conj(snap_quarter_turn(ratio / std::abs(ratio)));
        DenseUnitary pm = materialize(p);
        auto dst = out.entries();
        auto src = pm.entries();
        for (size_t e = 0; e < dst.size(); e++) {
            dst[e] += weight * src[e];
        }
    }
    if (!is_clifford(out, 1e-8)) {
        throw ReconstructionError("recover_clifford: recovered matrix is not an exact Clifford");
    }
    return out;
}

std::optional<Tableau> clifford_tableau(const DenseUnitary &c, double tolerance) {
    if (!c.is_unitary(std::max(tolerance, kUnitarityTolerance))) {
        return std::nullopt;
    }
    int n = c.num_qubits();
    DenseUnitary c_dag = adjoint(c);
    Tableau t;
    for (int q = 0; q < n; q++) {
        auto xi = conjugated_pauli(c, c_dag, PauliOp::single(n, q, 'X'), tolerance);
        auto zi = conjugated_pauli(c, c_dag, PauliOp::single(n, q, 'Z'), tolerance);
        if (!xi || !zi) {
            return std::nullopt;
        }
        t.x_images.push_back(*xi);
        t.z_images.push_back(*zi);
    }
    return t;
}

Circuit clifford_to_circuit(const DenseUnitary &c) {
    auto tableau = clifford_tableau(c);
    if (!tableau) {
        throw std::invalid_argument("clifford_to_circuit: input is not a Clifford unitary");
    }
    return TableauReducer(std::move(*tableau), c.num_qubits()).reduce();
}

SynthesisResult assemble(const DenseUnitary &target, const Candidate &candidate, const SearchConfig &cfg) {
    int n = target.num_qubits();
    SynthesisResult out;
    out.mode = cfg.mode;
    out.m = static_cast<int>(candidate.indices.size());
    out.generator_indices = candidate.indices;
    out.clifford = candidate.clifford;

    // U' = G[a_1] ... G[a_m] C; the Clifford acts first in time.
    out.circuit = clifford_to_circuit(candidate.clifford);
    DenseUnitary product = candidate.clifford;
    for (auto it = candidate.indices.rbegin(); it != candidate.indices.rend(); ++it) {
        const Generator &g = cfg.generator_set.at(*it);
        out.circuit.append(g.circuit());
        product = g.matrix * product;
    }
    out.phase_free_unitary = product;
    out.achieved_distance = distance(product, target);

    double eps = effective_epsilon(cfg.epsilon);
    if (!(out.achieved_distance <= eps + 1e-12)) {
        throw ReconstructionError("assemble: achieved distance " + std::to_string(out.achieved_distance) +
                                  " exceeds epsilon " + std::to_string(eps));
    }
    if (distance(out.circuit.unitary(), product) > 1e-8) {
        throw ReconstructionError("assemble: emitted circuit does not reproduce the synthesized unitary");
    }
    DenseUnitary check = mat_mul(adjoint(target), product);
    auto report = amplitude_test(check, eps);
    out.certified = report && report->m_support == 1 && conjugation_test(check, eps, cfg.conjugation);
    (void)n;
    return out;
}

}  // namespace tsynth
