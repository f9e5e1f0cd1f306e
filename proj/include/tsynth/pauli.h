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

#ifndef TSYNTH_PAULI_H
#define TSYNTH_PAULI_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace tsynth {

class DenseUnitary;

/// Largest qubit count supported by the dense representation.
constexpr int kMaxQubits = 6;

/// A signed n-qubit Pauli operator `i^phase * P(x_mask, z_mask)`.
///
/// Qubit q (0-based) is the q-th tensor factor from the left, so it maps to
/// bit `n - 1 - q` of a computational basis index. The masks use the same bit
/// layout, which keeps materialization and traces to a xor and a popcount.
///
/// The bare operator with masks (x, z) is the Hermitian tensor product of
/// single-qubit I, X, Y, Z, with Y = i * X * Z on every qubit where both bits
/// are set. `phase` counts quarter turns on top of that.
class PauliOp {
  public:
    PauliOp() = default;
    PauliOp(int num_qubits, uint32_t x_mask, uint32_t z_mask, int phase = 0);

    static PauliOp identity(int num_qubits);
    /// Parses a label such as "XZ", "-IY" or "+iZZ". Leftmost letter is qubit 0.
    static PauliOp from_string(const std::string &label);
    /// Single-qubit Pauli `letter` on `qubit`, identity elsewhere.
    static PauliOp single(int num_qubits, int qubit, char letter);

    int num_qubits() const { return n_; }
    uint32_t x_mask() const { return x_; }
    uint32_t z_mask() const { return z_; }
    /// Quarter-turn exponent in {0, 1, 2, 3}: +1, +i, -1, -i.
    int phase() const { return phase_; }
    std::complex<double> phase_factor() const;

    bool is_identity() const { return x_ == 0 && z_ == 0; }
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    /// Same masks, phase reset to +1.
    PauliOp bare() const { return PauliOp(n_, x_, z_, 0); }
    PauliOp negated() const { return PauliOp(n_, x_, z_, phase_ + 2); }
    PauliOp times_i(int quarter_turns) const { return PauliOp(n_, x_, z_, phase_ + quarter_turns); }

    bool acts_on(int qubit) const;
    char letter(int qubit) const;
    /// Lowest-index qubit with a non-identity factor, or -1 for the identity.
    int lowest_active_qubit() const;
    bool commutes_with(const PauliOp &other) const;

    /// Position of the bare operator in the canonical order, `x_mask * 4^n/2^n + z_mask`.
    uint32_t canonical_index() const { return (x_ << n_) | z_; }

    std::string str() const;

    bool operator==(const PauliOp &other) const = default;

  private:
    int n_ = 0;
    uint32_t x_ = 0;
    uint32_t z_ = 0;
    int phase_ = 0;
};

/// Exact product a * b including the phase.
PauliOp pauli_mul(const PauliOp &a, const PauliOp &b);

/// Dense 2^n x 2^n matrix of `p`.
DenseUnitary materialize(const PauliOp &p);

/// Tr(U * p) in O(2^n), walking the single nonzero entry in each column of p.
std::complex<double> trace_with_pauli(const DenseUnitary &u, const PauliOp &p);

/// All 4^n bare Paulis (or 2 * 4^n signed ones) in canonical order:
/// lexicographic on (x_mask, z_mask), and for signed output the +1 copy of
/// each operator directly precedes its -1 copy. The identity is first.
std::vector<PauliOp> enumerate_paulis(int num_qubits, bool signed_paulis = false);

std::ostream &operator<<(std::ostream &out, const PauliOp &p);

}  // namespace tsynth

#endif
