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

#ifndef TSYNTH_MATRIX_H
#define TSYNTH_MATRIX_H

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsynth/pauli.h"

namespace tsynth {

using cplx = std::complex<double>;

constexpr double kUnitarityTolerance = 1e-10;

class NonUnitaryError : public std::invalid_argument {
  public:
    NonUnitaryError(const std::string &what, double deviation)
        : std::invalid_argument(what), deviation_(deviation) {}
    double deviation() const { return deviation_; }

  private:
    double deviation_;
};

/// Row-major 2^n x 2^n complex matrix.
///
/// The name reflects how the type is used: every public producer returns a
/// unitary, and `checked` enforces it for data from outside. Intermediate
/// arithmetic (Pauli sums during reconstruction) may briefly hold
/// non-unitary values.
class DenseUnitary {
  public:
    DenseUnitary() = default;
    /// Zero matrix.
    explicit DenseUnitary(int num_qubits);
    DenseUnitary(int num_qubits, std::vector<cplx> entries);

    static DenseUnitary identity(int num_qubits);
    /// Validates ||U^dag U - I||_max <= tolerance, throwing NonUnitaryError otherwise.
    static DenseUnitary checked(int num_qubits, std::vector<cplx> entries,
                                double tolerance = kUnitarityTolerance);

    int num_qubits() const { return n_; }
    size_t dim() const { return dim_; }

    cplx &operator()(size_t row, size_t col) { return data_[row * dim_ + col]; }
    const cplx &operator()(size_t row, size_t col) const { return data_[row * dim_ + col]; }
    std::span<const cplx> entries() const { return data_; }
    std::span<cplx> entries() { return data_; }
    const cplx *row(size_t r) const { return data_.data() + r * dim_; }

    /// ||U^dag U - I||_max.
    double unitarity_deviation() const;
    bool is_unitary(double tolerance = kUnitarityTolerance) const {
        return unitarity_deviation() <= tolerance;
    }

    DenseUnitary &operator*=(cplx scalar);

  private:
    int n_ = 0;
    size_t dim_ = 0;
    std::vector<cplx> data_;
};

DenseUnitary mat_mul(const DenseUnitary &a, const DenseUnitary &b);
DenseUnitary adjoint(const DenseUnitary &u);
/// Kronecker product; `a` becomes the leading (lower-index) qubits.
DenseUnitary tensor(const DenseUnitary &a, const DenseUnitary &b);
DenseUnitary operator*(const DenseUnitary &a, const DenseUnitary &b);
DenseUnitary operator*(cplx scalar, DenseUnitary u);

/// Tr(A^dag B).
cplx trace_adjoint_product(const DenseUnitary &a, const DenseUnitary &b);
double max_abs_diff(const DenseUnitary &a, const DenseUnitary &b);

/// Global-phase-invariant distance sqrt(1 - |Tr(U^dag W)| / N).
///
/// Evaluated as min over phi of ||U - e^{i phi} W||_F / sqrt(2N), which equals
/// the textbook expression exactly but keeps full relative precision when U and
/// W are nearly equal. Clamped to [0, 1].
double distance(const DenseUnitary &u, const DenseUnitary &w);

/// Pauli-basis expansion U = sum_P q_P P with q_P = Tr(U P) / N.
class PauliSpectrum {
  public:
    static PauliSpectrum of(const DenseUnitary &u, double normalization_tolerance = 1e-8);

    int num_qubits() const { return n_; }
    /// Coefficients indexed by canonical Pauli index.
    std::span<const cplx> coefficients() const { return coeffs_; }
    cplx coefficient(const PauliOp &p) const;

    /// Number of coefficients with modulus above `threshold` (the support size M).
    int support_size(double threshold) const;
    /// Treats the expansion as Clifford-like at precision epsilon: nonzero
    /// coefficients are those above sqrt(M (2 eps^2 - eps^4)) + 1e-9 for the
    /// smallest consistent M, they share one modulus r, and M r^2 = 1.
    bool is_clifford_like(double epsilon, int *support = nullptr, double *common_modulus = nullptr) const;

    /// sum_P q_P P, back in matrix form.
    DenseUnitary reconstruct() const;

  private:
    int n_ = 0;
    std::vector<cplx> coeffs_;
};

PauliSpectrum pauli_spectrum(const DenseUnitary &u);

/// Fills `out` (length 4^n, canonical order) with |Tr(U P)| / N.
void abs_pauli_coefficients(const DenseUnitary &u, std::span<double> out);

}  // namespace tsynth

#endif
