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

#include "tsynth/circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tsynth {

namespace {

uint32_t bit_of(int n, int q) { return uint32_t{1} << (n - 1 - q); }

void check_qubit(int n, int q, const char *where) {
    if (q < 0 || q >= n) {
        throw std::invalid_argument(std::string(where) + ": qubit " + std::to_string(q) + " out of range for " +
                                    std::to_string(n) + " qubits");
    }
}

GateKind parse_mnemonic(const std::string &word) {
    static const std::pair<const char *, GateKind> table[] = {
        {"H", GateKind::H}, {"S", GateKind::S},     {"SDG", GateKind::Sdg},   {"X", GateKind::X},
        {"T", GateKind::T}, {"TDG", GateKind::Tdg}, {"CNOT", GateKind::CNOT},
    };
    for (const auto &[name, kind] : table) {
        if (word == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown gate mnemonic '" + word + "'");
}

}  // namespace

const char *gate_mnemonic(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::Sdg:
            return "SDG";
        case GateKind::X:
            return "X";
        case GateKind::T:
            return "T";
        case GateKind::Tdg:
            return "TDG";
        case GateKind::CNOT:
            return "CNOT";
    }
    return "?";
}

Circuit::Circuit(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("Circuit: qubit count " + std::to_string(num_qubits) + " out of range");
    }
}

void Circuit::push(Gate g) {
    check_qubit(n_, g.q0, gate_mnemonic(g.kind));
    if (g.kind == GateKind::CNOT) {
        check_qubit(n_, g.q1, "CNOT");
        if (g.q0 == g.q1) {
            throw std::invalid_argument("CNOT: control and target are both qubit " + std::to_string(g.q0));
        }
    } else {
        g.q1 = -1;
    }
    gates_.push_back(g);
}

void Circuit::append(const Circuit &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("Circuit::append: qubit count mismatch");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::inverse() const {
    Circuit out(n_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
            case GateKind::S:
                g.kind = GateKind::Sdg;
                break;
            case GateKind::Sdg:
                g.kind = GateKind::S;
                break;
            case GateKind::T:
                g.kind = GateKind::Tdg;
                break;
            case GateKind::Tdg:
                g.kind = GateKind::T;
                break;
            default:
                break;
        }
        out.gates_.push_back(g);
    }
    return out;
}

DenseUnitary gate_unitary(int n, const Gate &g) {
    DenseUnitary out(n);
    size_t dim = out.dim();
    uint32_t b0 = bit_of(n, g.q0);
    const cplx w{std::cos(std::numbers::pi / 4), std::sin(std::numbers::pi / 4)};
    const double h = 1.0 / std::sqrt(2.0);
    for (uint32_t k = 0; k < dim; k++) {
        bool one = k & b0;
        switch (g.kind) {
            case GateKind::H:
                out(k & ~b0, k) = h;
                out(k | b0, k) = one ? -h : h;
                break;
            case GateKind::S:
                out(k, k) = one ? cplx{0, 1} : cplx{1, 0};
                break;
            case GateKind::Sdg:
                out(k, k) = one ? cplx{0, -1} : cplx{1, 0};
                break;
            case GateKind::X:
                out(k ^ b0, k) = 1;
                break;
            case GateKind::T:
                out(k, k) = one ? w : cplx{1, 0};
                break;
            case GateKind::Tdg:
                out(k, k) = one ? std::conj(w) : cplx{1, 0};
                break;
            case GateKind::CNOT:
                out(one ? k ^ bit_of(n, g.q1) : k, k) = 1;
                break;
        }
    }
    return out;
}

DenseUnitary Circuit::unitary() const {
    DenseUnitary acc = DenseUnitary::identity(n_);
    for (const auto &g : gates_) {
        acc = gate_unitary(n_, g) * acc;
    }
    return acc;
}

int Circuit::t_count() const {
    return static_cast<int>(std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) {
        return g.kind == GateKind::T || g.kind == GateKind::Tdg;
    }));
}

int Circuit::t_depth() const {
    std::vector<int> depth(n_, 0);
    for (const auto &g : gates_) {
        if (g.kind == GateKind::T || g.kind == GateKind::Tdg) {
            depth[g.q0]++;
        } else if (g.kind == GateKind::CNOT) {
            int d = std::max(depth[g.q0], depth[g.q1]);
            depth[g.q0] = depth[g.q1] = d;
        }
    }
    return n_ == 0 ? 0 : *std::max_element(depth.begin(), depth.end());
}

std::string Circuit::to_text() const {
    std::ostringstream out;
    out << "qubits " << n_ << "\n";
    for (const auto &g : gates_) {
        out << gate_mnemonic(g.kind) << " " << g.q0;
        if (g.kind == GateKind::CNOT) {
            out << " " << g.q1;
        }
        out << "\n";
    }
    return out.str();
}

Circuit Circuit::from_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    Circuit out;
    bool have_header = false;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream words(line);
        std::string word;
        if (!(words >> word)) {
            continue;
        }
        if (!have_header) {
            int n = 0;
            if (word != "qubits" || !(words >> n)) {
                throw std::invalid_argument("circuit line " + std::to_string(line_no) + ": expected 'qubits <n>'");
            }
            out = Circuit(n);
            have_header = true;
            continue;
        }
        Gate g{parse_mnemonic(word), -1, -1};
        if (!(words >> g.q0) || (g.kind == GateKind::CNOT && !(words >> g.q1))) {
            throw std::invalid_argument("circuit line " + std::to_string(line_no) + ": missing qubit index");
        }
        out.push(g);
    }
    if (!have_header) {
        throw std::invalid_argument("circuit text has no 'qubits <n>' header");
    }
    return out;
}

PauliOp conjugate_by_gate(const PauliOp &p, const Gate &g) {
    int n = p.num_qubits();
    uint32_t x = p.x_mask();
    uint32_t z = p.z_mask();
    int phase = p.phase();
    uint32_t b = bit_of(n, g.q0);
    bool xb = x & b;
    bool zb = z & b;
    switch (g.kind) {
        case GateKind::H:
            // X <-> Z, Y -> -Y
            if (xb && zb) {
                phase += 2;
            }
            x = (x & ~b) | (zb ? b : 0);
            z = (z & ~b) | (xb ? b : 0);
            break;
        case GateKind::S:
            // X -> Y, Y -> -X
            if (xb) {
                if (zb) {
                    phase += 2;
                }
                z ^= b;
            }
            break;
        case GateKind::Sdg:
            // X -> -Y, Y -> X
            if (xb) {
                if (!zb) {
                    phase += 2;
                }
                z ^= b;
            }
            break;
        case GateKind::X:
            // Z and Y anticommute with X
            if (zb) {
                phase += 2;
            }
            break;
        case GateKind::CNOT: {
            uint32_t t = bit_of(n, g.q1);
            bool xt = x & t;
            bool zt = z & t;
            // X_c -> X_c X_t, Z_t -> Z_c Z_t; Y parts pick up a sign when
            // the control carries X, the target carries Z, and x_t == z_c.
            if (xb && zt && (xt == zb)) {
                phase += 2;
            }
            if (xb) {
                x ^= t;
            }
            if (zt) {
                z ^= b;
            }
            break;
        }
        case GateKind::T:
        case GateKind::Tdg:
            throw std::invalid_argument("conjugate_by_gate: T/Tdg is not Clifford");
    }
    return PauliOp(n, x, z, phase);
}

std::ostream &operator<<(std::ostream &out, const Circuit &c) { return out << c.to_text(); }

}  // namespace tsynth
