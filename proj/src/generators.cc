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

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

namespace tsynth {

namespace {

const cplx kOmega{std::cos(std::numbers::pi / 4), std::sin(std::numbers::pi / 4)};

std::pair<cplx, cplx> rotation_weights(bool dagger) {
    cplx a = (1.0 + kOmega) / 2.0;
    cplx b = (1.0 - kOmega) / 2.0;
    if (dagger) {
        return {std::conj(a), std::conj(b)};
    }
    return {a, b};
}

void require_rotatable(const PauliOp &p, const char *where) {
    if (p.is_identity()) {
        throw std::invalid_argument(std::string(where) + ": identity Pauli has no rotation");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument(std::string(where) + ": Pauli " + p.str() + " is not Hermitian");
    }
}

PauliOp conjugate_by_circuit(PauliOp p, const Circuit &c) {
    for (const auto &g : c.gates()) {
        p = conjugate_by_gate(p, g);
    }
    return p;
}

uint64_t quantize(double v) {
    auto q = static_cast<int64_t>(std::llround(v * 1e9));
    return static_cast<uint64_t>(q);
}

struct MatrixKey {
    std::vector<uint64_t> words;
    bool operator==(const MatrixKey &) const = default;
};

struct MatrixKeyHash {
    size_t operator()(const MatrixKey &k) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : k.words) {
            h = (h ^ w) * 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

MatrixKey key_of(const DenseUnitary &u) {
    MatrixKey key;
    for (const auto &v : u.entries()) {
        key.words.push_back(quantize(v.real()));
        key.words.push_back(quantize(v.imag()));
    }
    return key;
}

}  // namespace

DenseUnitary rotation_matrix(const RotationFactor &f) {
    require_rotatable(f.pauli, "rotation_matrix");
    auto [a, b] = rotation_weights(f.dagger);
    DenseUnitary out = b * materialize(f.pauli);
    for (size_t k = 0; k < out.dim(); k++) {
        out(k, k) += a;
    }
    return out;
}

void apply_factor_right(DenseUnitary &u, const RotationFactor &f) {
    auto [a, b] = rotation_weights(f.dagger);
    const PauliOp &p = f.pauli;
    uint32_t x = p.x_mask();
    uint32_t z = p.z_mask();
    size_t dim = u.dim();
    // P[j ^ x][j] = base * (-1)^|z & j|
    cplx base = p.phase_factor();
    switch (std::popcount(x & z) & 3) {
        case 1:
            base *= cplx{0, 1};
            break;
        case 2:
            base = -base;
            break;
        case 3:
            base *= cplx{0, -1};
            break;
        default:
            break;
    }
    cplx plus = b * base;
    std::array<cplx, size_t{1} << kMaxQubits> row;
    for (size_t i = 0; i < dim; i++) {
        cplx *dst = &u(i, 0);
        std::copy(dst, dst + dim, row.begin());
        for (uint32_t j = 0; j < dim; j++) {
            cplx t = row[j ^ x] * plus;
            dst[j] = a * row[j] + ((std::popcount(z & j) & 1) ? -t : t);
        }
    }
}

Circuit Generator::circuit() const {
    Circuit out = frame.inverse();
    for (const auto &[q, dagger] : stage) {
        if (dagger) {
            out.tdg(q);
        } else {
            out.t(q);
        }
    }
    out.append(frame);
    return out;
}

Circuit conjugator_circuit(const PauliOp &p, int qubit) {
    require_rotatable(p, "conjugator_circuit");
    int n = p.num_qubits();
    if (qubit < 0 || qubit >= n) {
        throw std::invalid_argument("conjugator_circuit: qubit " + std::to_string(qubit) + " out of range");
    }
    Circuit c(n);
    if (p.phase() == 2) {
        c.x(qubit);
    }
    int anchor = qubit;
    if (!p.acts_on(qubit)) {
        anchor = p.lowest_active_qubit();
        // Z_q -> Z_anchor Z_q -> Z_anchor
        c.cnot(anchor, qubit);
        c.cnot(qubit, anchor);
    }
    for (int j = 0; j < n; j++) {
        if (j != anchor && p.acts_on(j)) {
            c.cnot(j, anchor);
        }
    }
    for (int j = 0; j < n; j++) {
        char l = p.letter(j);
        if (l == 'X') {
            c.h(j);
        } else if (l == 'Y') {
            c.h(j);
            c.s(j);
        }
    }
    return c;
}

Generator r_of_pauli(const PauliOp &p, bool dagger) {
    require_rotatable(p, "r_of_pauli");
    Generator g;
    g.kind = dagger ? GeneratorKind::RDaggerCount : GeneratorKind::RCount;
    g.factors = {RotationFactor{p, dagger}};
    g.matrix = rotation_matrix(g.factors[0]);
    int q = p.lowest_active_qubit();
    g.frame = conjugator_circuit(p, q);
    g.stage = {{q, dagger}};
    return g;
}

std::vector<Generator> tcount_generators(int num_qubits) {
    std::vector<Generator> out;
    for (const auto &p : enumerate_paulis(num_qubits)) {
        if (p.is_identity()) {
            continue;
        }
        out.push_back(r_of_pauli(p, false));
        out.back().index = static_cast<int>(out.size()) - 1;
    }
    return out;
}

DenseUnitary canonical_phase(const DenseUnitary &u) {
    for (const auto &v : u.entries()) {
        double mag = std::abs(v);
        if (mag > 1e-9) {
            return (std::conj(v) / mag) * u;
        }
    }
    throw std::invalid_argument("canonical_phase: zero matrix");
}

std::vector<Generator> build_vn(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 2) {
        throw std::invalid_argument("build_vn: supported for 1 or 2 qubits, got " + std::to_string(num_qubits));
    }
    int n = num_qubits;
    std::vector<Generator> out;
    std::unordered_set<MatrixKey, MatrixKeyHash> seen;
    int others = n - 1;
    int configurations = 1;
    for (int k = 0; k < others; k++) {
        configurations *= 3;
    }
    for (const auto &p : enumerate_paulis(n, true)) {
        if (p.is_identity()) {
            continue;
        }
        for (int q = 0; q < n; q++) {
            Circuit frame = conjugator_circuit(p, q);
            for (bool dagger : {false, true}) {
                for (int config = 0; config < configurations; config++) {
                    Generator g;
                    g.kind = GeneratorKind::DepthBlock;
                    g.frame = frame;
                    g.factors.push_back({p, dagger});
                    g.stage.emplace_back(q, dagger);
                    int rest = config;
                    for (int i = 0; i < n; i++) {
                        if (i == q) {
                            continue;
                        }
                        int choice = rest % 3;
                        rest /= 3;
                        if (choice == 0) {
                            continue;
                        }
                        bool dg = choice == 2;
                        PauliOp pi = conjugate_by_circuit(PauliOp::single(n, i, 'Z'), frame);
                        g.factors.push_back({pi, dg});
                        g.stage.emplace_back(i, dg);
                    }
                    g.matrix = DenseUnitary::identity(n);
                    for (const auto &f : g.factors) {
                        apply_factor_right(g.matrix, f);
                    }
                    if (seen.insert(key_of(canonical_phase(g.matrix))).second) {
                        g.index = static_cast<int>(out.size());
                        out.push_back(std::move(g));
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace tsynth
