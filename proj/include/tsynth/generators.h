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

#ifndef TSYNTH_GENERATORS_H
#define TSYNTH_GENERATORS_H

#include <vector>

#include "tsynth/circuit.h"
#include "tsynth/matrix.h"
#include "tsynth/pauli.h"

namespace tsynth {

/// One R(P) or R^dag(P) factor, R(P) = ((1 + w)/2) I + ((1 - w)/2) P, w = e^{i pi/4}.
struct RotationFactor {
    PauliOp pauli;
    bool dagger = false;
};

/// Matrix of a single R/R^dag factor. `pauli` must be +-P for a non-identity bare P.
DenseUnitary rotation_matrix(const RotationFactor &f);

/// U <- U * R(P) in O(4^n), using the single nonzero per column of P.
void apply_factor_right(DenseUnitary &u, const RotationFactor &f);

enum class GeneratorKind { RCount, RDaggerCount, DepthBlock };

/// A search alphabet element: a product of mutually commuting R/R^dag factors
/// that share one Clifford frame, so it realizes with a single T stage.
struct Generator {
    GeneratorKind kind = GeneratorKind::RCount;
    /// Left-to-right product order. One entry for RCount/RDaggerCount.
    std::vector<RotationFactor> factors;
    DenseUnitary matrix;
    /// Position in the generator list it belongs to.
    int index = 0;

    /// Clifford C with C Z_(q) C^dag = factors[k].pauli for the stage qubit q of each factor.
    Circuit frame;
    /// (qubit, dagger) of each T/Tdg in the stage, parallel to `factors`.
    std::vector<std::pair<int, bool>> stage;

    /// C^dag, the T stage, then C.
    Circuit circuit() const;
};

/// R(P) or R^dag(P) as a generator, realized on the lowest active qubit of P.
Generator r_of_pauli(const PauliOp &p, bool dagger);

/// {R(P) : P != I} for every bare P, canonical Pauli order.
std::vector<Generator> tcount_generators(int num_qubits);

/// Clifford circuit C with C Z_(q) C^dag = p.
///
/// Built as a per-qubit basis change (H for X, H then S for Y) after a CNOT
/// parity ladder that collects Z's support into qubit q. When q is outside the
/// support, the Z is first moved onto the lowest active qubit. A leading X on q
/// absorbs a negative sign.
Circuit conjugator_circuit(const PauliOp &p, int qubit);

/// The T-depth-1 block set: for every signed P, stage qubit q and choice of
/// R/R^dag on q, every T/Tdg/I configuration on the remaining qubits under the
/// same frame. Duplicates up to global phase are dropped. Supports n in {1, 2}.
std::vector<Generator> build_vn(int num_qubits);

/// Scales U so its first nonzero entry (row-major, |entry| > 1e-12) is real and positive.
DenseUnitary canonical_phase(const DenseUnitary &u);

}  // namespace tsynth

#endif
