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

#ifndef TSYNTH_SYNTHESIS_TYPES_H
#define TSYNTH_SYNTHESIS_TYPES_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsynth/circuit.h"
#include "tsynth/clifford_tests.h"
#include "tsynth/generators.h"
#include "tsynth/matrix.h"

namespace tsynth {

enum class SearchMode { Count, Depth };

const char *mode_name(SearchMode mode);

struct SearchConfig {
    SearchMode mode = SearchMode::Count;
    double epsilon = 1e-4;
    int m_max = 8;
    int thread_count = 1;
    std::vector<Generator> generator_set;
    ConjugationBounds conjugation = ConjugationBounds::Rigorous;

    /// Config with the standard generator set for `mode` on `num_qubits`:
    /// R(P) for Count, the T-depth-1 blocks for Depth (n <= 2 only).
    static SearchConfig standard(SearchMode mode, int num_qubits, double epsilon);
};

/// A generator sequence whose residual passed both tests and whose trailing
/// Clifford was recovered within epsilon.
struct Candidate {
    /// Left-to-right product order; adjacent entries differ.
    std::vector<int> indices;
    /// W^dag * prod_k G[indices[k]].
    DenseUnitary residual;
    TestReport report;
    DenseUnitary clifford;
    double distance = 1;
};

struct SynthesisResult {
    SearchMode mode = SearchMode::Count;
    int m = 0;
    std::vector<int> generator_indices;
    DenseUnitary clifford;
    /// (prod_k G[indices[k]]) * clifford.
    DenseUnitary phase_free_unitary;
    double achieved_distance = 1;
    Circuit circuit;
    /// Leaves evaluated across all levels.
    uint64_t candidates_examined = 0;
    /// W^dag U' passes the amplitude test with M = 1 and the conjugation test.
    bool certified = false;
};

class EpsilonRegimeError : public std::invalid_argument {
  public:
    explicit EpsilonRegimeError(double epsilon);
    double epsilon() const { return epsilon_; }

  private:
    double epsilon_;
};

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(int m_max);
    int m_max() const { return m_max_; }

  private:
    int m_max_;
};

class UnsupportedError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class ReconstructionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace tsynth

#endif
