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

#ifndef TSYNTH_UNITARY_LIBRARY_H
#define TSYNTH_UNITARY_LIBRARY_H

#include <stdexcept>
#include <string>
#include <vector>

#include "tsynth/matrix.h"

namespace tsynth {

/// diag(1, 1, e^{-i theta/2}, e^{i theta/2}).
DenseUnitary crz(double theta);

/// Two-qubit Givens rotation: rotation by theta on the |01>, |10> block.
DenseUnitary givens(double theta);

enum class QftConvention {
    /// DFT matrix, entry (j, k) = e^{2 pi i jk/N} / sqrt(N). The circuit includes the final swaps.
    Swap,
    /// Circuit without the final swaps: rows of the DFT matrix in bit-reversed order.
    NoSwap,
};

/// n-qubit QFT, 1 <= n <= 4.
DenseUnitary qft(int num_qubits, QftConvention convention = QftConvention::Swap);

/// H / controlled-phase ladder for QFT, with the swap layer when `with_swaps`.
/// Controlled phases are built densely; this is a reference for tests.
DenseUnitary qft_from_circuit(int num_qubits, bool with_swaps);

class MatrixParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct TargetSpec {
    /// "crz(theta=...)", "qft(n=2,convention=swap)", or the file path.
    std::string source;
    int num_qubits = 0;
    DenseUnitary matrix;
};

/// Reads "qubits <n>" followed by N^2 lines "row col re im" in row-major order.
/// Throws MatrixParseError for malformed input and NonUnitaryError when
/// ||U^dag U - I||_max exceeds `tolerance`.
TargetSpec load_matrix(const std::string &path, double tolerance = kUnitarityTolerance);
TargetSpec parse_matrix(const std::string &text, const std::string &source = "<text>",
                        double tolerance = kUnitarityTolerance);
std::string format_matrix(const DenseUnitary &u);

/// theta = 2 pi k / 1000 for k = 1, 51, ..., 951.
std::vector<double> theta_grid();

}  // namespace tsynth

#endif
