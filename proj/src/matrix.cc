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

#include "tsynth/matrix.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

namespace tsynth {

namespace {

void require_same_size(const DenseUnitary &a, const DenseUnitary &b, const char *op) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(std::string(op) + ": qubit count mismatch (" + std::to_string(a.num_qubits()) +
                                    " vs " + std::to_string(b.num_qubits()) + ")");
    }
}

}  // namespace

DenseUnitary::DenseUnitary(int num_qubits) : n_(num_qubits), dim_(size_t{1} << num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("DenseUnitary: qubit count " + std::to_string(num_qubits) + " out of range");
    }
    data_.assign(dim_ * dim_, cplx{0, 0});
}

DenseUnitary::DenseUnitary(int num_qubits, std::vector<cplx> entries) : DenseUnitary(num_qubits) {
    if (entries.size() != dim_ * dim_) {
        throw std::invalid_argument("DenseUnitary: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                    std::to_string(entries.size()));
    }
    data_ = std::move(entries);
}

DenseUnitary DenseUnitary::identity(int num_qubits) {
    DenseUnitary out(num_qubits);
    for (size_t k = 0; k < out.dim_; k++) {
        out(k, k) = 1;
    }
    return out;
}

DenseUnitary DenseUnitary::checked(int num_qubits, std::vector<cplx> entries, double tolerance) {
    DenseUnitary out(num_qubits, std::move(entries));
    double dev = out.unitarity_deviation();
    if (!(dev <= tolerance)) {
        throw NonUnitaryError("matrix is not unitary: max |U^dag U - I| = " + std::to_string(dev) +
                                  " exceeds tolerance " + std::to_string(tolerance),
                              dev);
    }
    return out;
}

double DenseUnitary::unitarity_deviation() const {
    double worst = 0;
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            cplx acc = 0;
            for (size_t k = 0; k < dim_; k++) {
                acc += std::conj((*this)(k, i)) * (*this)(k, j);
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

DenseUnitary &DenseUnitary::operator*=(cplx scalar) {
    for (auto &v : data_) {
        v *= scalar;
    }
    return *this;
}

DenseUnitary mat_mul(const DenseUnitary &a, const DenseUnitary &b) {
    require_same_size(a, b, "mat_mul");
    size_t dim = a.dim();
    DenseUnitary out(a.num_qubits());
    for (size_t i = 0; i < dim; i++) {
        for (size_t k = 0; k < dim; k++) {
            cplx aik = a(i, k);
            if (aik == cplx{0, 0}) {
                continue;
            }
            const cplx *brow = b.row(k);
            for (size_t j = 0; j < dim; j++) {
                out(i, j) += aik * brow[j];
            }
        }
    }
    return out;
}

DenseUnitary operator*(const DenseUnitary &a, const DenseUnitary &b) { return mat_mul(a, b); }

DenseUnitary operator*(cplx scalar, DenseUnitary u) {
    u *= scalar;
    return u;
}

DenseUnitary adjoint(const DenseUnitary &u) {
    DenseUnitary out(u.num_qubits());
    for (size_t i = 0; i < u.dim(); i++) {
        for (size_t j = 0; j < u.dim(); j++) {
            out(j, i) = std::conj(u(i, j));
        }
    }
    return out;
}

DenseUnitary tensor(const DenseUnitary &a, const DenseUnitary &b) {
    DenseUnitary out(a.num_qubits() + b.num_qubits());
    size_t db = b.dim();
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            for (size_t k = 0; k < db; k++) {
                for (size_t l = 0; l < db; l++) {
                    out(i * db + k, j * db + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

cplx trace_adjoint_product(const DenseUnitary &a, const DenseUnitary &b) {
    require_same_size(a, b, "trace_adjoint_product");
    cplx acc = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t k = 0; k < ea.size(); k++) {
        acc += std::conj(ea[k]) * eb[k];
    }
    return acc;
}

double max_abs_diff(const DenseUnitary &a, const DenseUnitary &b) {
    require_same_size(a, b, "max_abs_diff");
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t k = 0; k < ea.size(); k++) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

double distance(const DenseUnitary &u, const DenseUnitary &w) {
    require_same_size(u, w, "distance");
    cplx overlap = trace_adjoint_product(w, u);
    double mag = std::abs(overlap);
    // Align W's phase to U; the residual Frobenius norm then equals 2N - 2|Tr(U^dag W)|.
    cplx align = mag > 0 ? overlap / mag : cplx{1, 0};
    double sq = 0;
    auto eu = u.entries();
    auto ew = w.entries();
    for (size_t k = 0; k < eu.size(); k++) {
        sq += std::norm(eu[k] - align * ew[k]);
    }
    double d = std::sqrt(sq / (2.0 * static_cast<double>(u.dim())));
    return std::clamp(d, 0.0, 1.0);
}

PauliSpectrum PauliSpectrum::of(const DenseUnitary &u, double normalization_tolerance) {
    PauliSpectrum out;
    out.n_ = u.num_qubits();
    auto paulis = enumerate_paulis(out.n_);
    out.coeffs_.resize(paulis.size());
    double inv_n = 1.0 / static_cast<double>(u.dim());
    double total = 0;
    for (size_t k = 0; k < paulis.size(); k++) {
        out.coeffs_[k] = trace_with_pauli(u, paulis[k]) * inv_n;
        total += std::norm(out.coeffs_[k]);
    }
    if (!(std::abs(total - 1.0) <= normalization_tolerance)) {
        throw NonUnitaryError("pauli_spectrum: sum |q_P|^2 = " + std::to_string(total) + " is not 1; input not unitary",
                              std::abs(total - 1.0));
    }
    return out;
}

PauliSpectrum pauli_spectrum(const DenseUnitary &u) { return PauliSpectrum::of(u); }

cplx PauliSpectrum::coefficient(const PauliOp &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("PauliSpectrum::coefficient: qubit count mismatch");
    }
    return coeffs_[p.canonical_index()] * std::conj(p.phase_factor());
}

int PauliSpectrum::support_size(double threshold) const {
    return static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                          [&](const cplx &c) { return std::abs(c) > threshold; }));
}

bool PauliSpectrum::is_clifford_like(double epsilon, int *support, double *common_modulus) const {
    double spread = 2 * epsilon * epsilon - std::pow(epsilon, 4);
    size_t total = coeffs_.size();
    for (size_t m = 1; m <= total; m++) {
        double threshold = std::sqrt(static_cast<double>(m) * spread) + 1e-9;
        if (support_size(threshold) != static_cast<int>(m)) {
            continue;
        }
        double lo = 2;
        double hi = 0;
        for (const auto &c : coeffs_) {
            double a = std::abs(c);
            if (a > threshold) {
                lo = std::min(lo, a);
                hi = std::max(hi, a);
            }
        }
        double r = 1.0 / std::sqrt(static_cast<double>(m));
        double slack = 1e-8 + 2 * threshold;
        if (hi - lo <= slack && std::abs(lo - r) <= slack && std::abs(hi - r) <= slack) {
            if (support != nullptr) {
                *support = static_cast<int>(m);
            }
            if (common_modulus != nullptr) {
                *common_modulus = 0.5 * (lo + hi);
            }
            return true;
        }
    }
    return false;
}

DenseUnitary PauliSpectrum::reconstruct() const {
    DenseUnitary out(n_);
    auto paulis = enumerate_paulis(n_);
    for (size_t k = 0; k < paulis.size(); k++) {
        if (coeffs_[k] == cplx{0, 0}) {
            continue;
        }
        DenseUnitary p = materialize(paulis[k]);
        auto dst = out.entries();
        auto src = p.entries();
        for (size_t e = 0; e < dst.size(); e++) {
            dst[e] += coeffs_[k] * src[e];
        }
    }
    return out;
}

void abs_pauli_coefficients(const DenseUnitary &u, std::span<double> out) {
    int n = u.num_qubits();
    uint32_t dim = static_cast<uint32_t>(u.dim());
    double inv_n = 1.0 / static_cast<double>(dim);
    // For a fixed x_mask the signed sums over z_mask are the Walsh-Hadamard
    // transform of the diagonal U[k][k ^ x]. Phase factors drop out of the modulus.
    std::array<cplx, size_t{1} << kMaxQubits> buf;
    for (uint32_t x = 0; x < dim; x++) {
        for (uint32_t k = 0; k < dim; k++) {
            buf[k] = u(k, k ^ x);
        }
        for (uint32_t h = 1; h < dim; h <<= 1) {
            for (uint32_t i = 0; i < dim; i += h << 1) {
                for (uint32_t j = i; j < i + h; j++) {
                    cplx a = buf[j];
                    cplx b = buf[j + h];
                    buf[j] = a + b;
                    buf[j + h] = a - b;
                }
            }
        }
        for (uint32_t z = 0; z < dim; z++) {
            out[(x << n) | z] = std::abs(buf[z]) * inv_n;
        }
    }
}

}  // namespace tsynth
