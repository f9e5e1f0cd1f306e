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

#ifndef TSYNTH_RECONSTRUCTION_H
#define TSYNTH_RECONSTRUCTION_H

#include <optional>
#include <vector>

#include "tsynth/synthesis_types.h"

namespace tsynth {

/// Recovers the trailing Clifford from a residual W' ~ E^dag C0^dag that passed
/// both tests. Returns e^{i phi} C0 exactly Clifford, or throws ReconstructionError.
///
/// Ratios a_P = t_P / t_ref against a reference S1 entry estimate r_P / r_ref.
/// They are rescaled to unit modulus and then snapped to the nearest quarter
/// turn, since the nonzero Pauli coefficients of a Clifford differ pairwise by
/// powers of i. The reference is the identity when it sits in S1, otherwise
/// the largest S1 entry; `reference` overrides it with another S1 member.
DenseUnitary recover_clifford(const DenseUnitary &residual, const TestReport &report,
                              std::optional<PauliOp> reference = std::nullopt);

/// Images of X_i and Z_i under conjugation by C, or nullopt if C is not Clifford.
struct Tableau {
    std::vector<PauliOp> x_images;
    std::vector<PauliOp> z_images;
};
std::optional<Tableau> clifford_tableau(const DenseUnitary &c, double tolerance = 1e-8);

/// {H, S, CNOT, X} circuit equal to C up to global phase, by tableau
/// elimination one qubit at a time. Throws std::invalid_argument for non-Clifford input.
Circuit clifford_to_circuit(const DenseUnitary &c);

/// Builds the result record: expands every generator into Clifford+T gates,
/// appends the recovered Clifford (acting first), and checks the distance contract.
SynthesisResult assemble(const DenseUnitary &target, const Candidate &candidate, const SearchConfig &cfg);

}  // namespace tsynth

#endif
