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

#include "tsynth/pauli.h"

#include <bit>
#include <ostream>
#include <stdexcept>

#include "tsynth/matrix.h"

namespace tsynth {

namespace {

int popcount(uint32_t v) { return std::popcount(v); }

uint32_t qubit_bit(int n, int q) { return uint32_t{1} << (n - 1 - q); }

constexpr std::complex<double> kQuarterTurns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliOp::PauliOp(int num_qubits, uint32_t x_mask, uint32_t z_mask, int phase)
    : n_(num_qubits), x_(x_mask), z_(z_mask), phase_(((phase % 4) + 4) % 4) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("PauliOp: qubit count " + std::to_string(num_qubits) + " out of range");
    }
    uint32_t limit = uint32_t{1} << num_qubits;
    if (x_mask >= limit || z_mask >= limit) {
        throw std::invalid_argument("PauliOp: mask wider than " + std::to_string(num_qubits) + " qubits");
    }
}

PauliOp PauliOp::identity(int num_qubits) { return PauliOp(num_qubits, 0, 0, 0); }

PauliOp PauliOp::single(int num_qubits, int qubit, char letter) {
    if (qubit < 0 || qubit >= num_qubits) {
        throw std::invalid_argument("PauliOp::single: qubit " + std::to_string(qubit) + " out of range");
    }
    uint32_t b = qubit_bit(num_qubits, qubit);
    switch (letter) {
        case 'I':
            return PauliOp(num_qubits, 0, 0);
        case 'X':
            return PauliOp(num_qubits, b, 0);
        case 'Y':
            return PauliOp(num_qubits, b, b);
        case 'Z':
            return PauliOp(num_qubits, 0, b);
        default:
            throw std::invalid_argument(std::string("PauliOp::single: bad letter '") + letter + "'");
    }
}

PauliOp PauliOp::from_string(const std::string &label) {
    size_t k = 0;
    int phase = 0;
    if (k < label.size() && (label[k] == '+' || label[k] == '-')) {
        if (label[k] == '-') {
            phase += 2;
        }
        k++;
    }
    if (k < label.size() && label[k] == 'i') {
        phase += 1;
        k++;
    }
    int n = static_cast<int>(label.size() - k);
    if (n < 1) {
        throw std::invalid_argument("PauliOp::from_string: empty label '" + label + "'");
    }
    uint32_t x = 0;
    uint32_t z = 0;
    for (int q = 0; q < n; q++) {
        PauliOp s = single(n, q, label[k + q]);
        x |= s.x_mask();
        z |= s.z_mask();
    }
    return PauliOp(n, x, z, phase);
}

std::complex<double> PauliOp::phase_factor() const { return kQuarterTurns[phase_]; }

bool PauliOp::acts_on(int qubit) const {
    uint32_t b = qubit_bit(n_, qubit);
    return ((x_ | z_) & b) != 0;
}

char PauliOp::letter(int qubit) const {
    uint32_t b = qubit_bit(n_, qubit);
    bool xb = x_ & b;
    bool zb = z_ & b;
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

int PauliOp::lowest_active_qubit() const {
    for (int q = 0; q < n_; q++) {
        if (acts_on(q)) {
            return q;
        }
    }
    return -1;
}

bool PauliOp::commutes_with(const PauliOp &other) const {
    return ((popcount(x_ & other.z_) + popcount(z_ & other.x_)) & 1) == 0;
}

std::string PauliOp::str() const {
    static const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[phase_];
    for (int q = 0; q < n_; q++) {
        out += letter(q);
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const PauliOp &p) { return out << p.str(); }

PauliOp pauli_mul(const PauliOp &a, const PauliOp &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("pauli_mul: qubit count mismatch (" + std::to_string(a.num_qubits()) + " vs " +
                                    std::to_string(b.num_qubits()) + ")");
    }
    // bare(x,z) = i^|x&z| X^x Z^z, and Z^z1 X^x2 = (-1)^|z1&x2| X^x2 Z^z1.
    uint32_t x = a.x_mask() ^ b.x_mask();
    uint32_t z = a.z_mask() ^ b.z_mask();
    int phase = a.phase() + b.phase() + popcount(a.x_mask() & a.z_mask()) + popcount(b.x_mask() & b.z_mask()) +
                2 * popcount(a.z_mask() & b.x_mask()) - popcount(x & z);
    return PauliOp(a.num_qubits(), x, z, phase);
}

DenseUnitary materialize(const PauliOp &p) {
    DenseUnitary out(p.num_qubits());
    size_t dim = out.dim();
    std::complex<double> base = p.phase_factor() * kQuarterTurns[popcount(p.x_mask() & p.z_mask()) & 3];
    for (size_t col = 0; col < dim; col++) {
        auto k = static_cast<uint32_t>(col);
        double sign = (popcount(p.z_mask() & k) & 1) ? -1.0 : 1.0;
        out(k ^ p.x_mask(), col) = sign * base;
    }
    return out;
}

std::complex<double> trace_with_pauli(const DenseUnitary &u, const PauliOp &p) {
    if (u.num_qubits() != p.num_qubits()) {
        throw std::invalid_argument("trace_with_pauli: qubit count mismatch (" + std::to_string(u.num_qubits()) +
                                    " vs " + std::to_string(p.num_qubits()) + ")");
    }
    // Column k of p holds its only nonzero at row k ^ x, so
    // Tr(U p) = sum_k U[k][k ^ x] * p[k ^ x][k].
    size_t dim = u.dim();
    std::complex<double> acc = 0;
    for (size_t k = 0; k < dim; k++) {
        auto kk = static_cast<uint32_t>(k);
        std::complex<double> v = u(k, kk ^ p.x_mask());
        acc += (popcount(p.z_mask() & kk) & 1) ? -v : v;
    }
    return acc * p.phase_factor() * kQuarterTurns[popcount(p.x_mask() & p.z_mask()) & 3];
}

std::vector<PauliOp> enumerate_paulis(int num_qubits, bool signed_paulis) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("enumerate_paulis: qubit count " + std::to_string(num_qubits) + " out of range");
    }
    uint32_t side = uint32_t{1} << num_qubits;
    std::vector<PauliOp> out;
    out.reserve(size_t{side} * side * (signed_paulis ? 2 : 1));
    for (uint32_t x = 0; x < side; x++) {
        for (uint32_t z = 0; z < side; z++) {
            out.emplace_back(num_qubits, x, z, 0);
            if (signed_paulis) {
                out.emplace_back(num_qubits, x, z, 2);
            }
        }
    }
    return out;
}

}  // namespace tsynth
