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

#ifndef TSYNTH_CIRCUIT_H
#define TSYNTH_CIRCUIT_H

#include <iosfwd>
#include <string>
#include <vector>

#include "tsynth/matrix.h"

namespace tsynth {

enum class GateKind { H, S, Sdg, X, T, Tdg, CNOT };

struct Gate {
    GateKind kind;
    int q0;
    /// Target qubit for CNOT, -1 otherwise.
    int q1 = -1;

    bool operator==(const Gate &other) const = default;
};

const char *gate_mnemonic(GateKind kind);

/// A Clifford+T gate list in time order: gates[0] acts first.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int num_qubits);

    int num_qubits() const { return n_; }
    const std::vector<Gate> &gates() const { return gates_; }
    bool empty() const { return gates_.empty(); }
    size_t size() const { return gates_.size(); }

    void h(int q) { push({GateKind::H, q}); }
    void s(int q) { push({GateKind::S, q}); }
    void sdg(int q) { push({GateKind::Sdg, q}); }
    void x(int q) { push({GateKind::X, q}); }
    void t(int q) { push({GateKind::T, q}); }
    void tdg(int q) { push({GateKind::Tdg, q}); }
    void cnot(int control, int target) { push({GateKind::CNOT, control, target}); }
    void push(Gate g);
    void append(const Circuit &other);

    /// Adjoint circuit: reversed order, S <-> Sdg and T <-> Tdg.
    Circuit inverse() const;

    /// Product of the gate matrices, later gates on the left.
    DenseUnitary unitary() const;

    int t_count() const;
    /// Number of sequential T/Tdg layers when every gate is scheduled as early
    /// as its qubits allow.
    int t_depth() const;

    /// "qubits <n>" header, then one "MNEMONIC q [q]" line per gate.
    std::string to_text() const;
    static Circuit from_text(const std::string &text);

    bool operator==(const Circuit &other) const = default;

  private:
    int n_ = 0;
    std::vector<Gate> gates_;
};

/// Dense matrix of a single gate on an n-qubit register.
DenseUnitary gate_unitary(int num_qubits, const Gate &g);

/// Conjugates a Pauli through a Clifford gate: returns G p G^dag. Throws for T/Tdg.
PauliOp conjugate_by_gate(const PauliOp &p, const Gate &g);

std::ostream &operator<<(std::ostream &out, const Circuit &c);

}  // namespace tsynth

#endif
