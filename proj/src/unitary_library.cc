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

#include "tsynth/unitary_library.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace tsynth {

namespace {

size_t bit_reverse(size_t v, int bits) {
    size_t out = 0;
    for (int b = 0; b < bits; b++) {
        out = (out << 1) | ((v >> b) & 1);
    }
    return out;
}

}  // namespace

DenseUnitary crz(double theta) {
    DenseUnitary u(2);
    u(0, 0) = 1;
    u(1, 1) = 1;
    u(2, 2) = std::polar(1.0, -theta / 2);
    u(3, 3) = std::polar(1.0, theta / 2);
    return u;
}

DenseUnitary givens(double theta) {
    DenseUnitary u(2);
    double c = std::cos(theta);
    double s = std::sin(theta);
    u(0, 0) = 1;
    u(1, 1) = c;
    u(1, 2) = -s;
    u(2, 1) = s;
    u(2, 2) = c;
    u(3, 3) = 1;
    return u;
}

DenseUnitary qft(int num_qubits, QftConvention convention) {
    if (num_qubits < 1 || num_qubits > 4) {
        throw std::invalid_argument("qft supports 1 to 4 qubits, got " + std::to_string(num_qubits));
    }
    size_t dim = size_t{1} << num_qubits;
    double scale = 1 / std::sqrt(static_cast<double>(dim));
    DenseUnitary u(num_qubits);
    for (size_t j = 0; j < dim; j++) {
        size_t row = convention == QftConvention::Swap ? j : bit_reverse(j, num_qubits);
        for (size_t k = 0; k < dim; k++) {
            // Reduce jk mod N first so the angle stays exact.
            double angle = 2 * std::numbers::pi * static_cast<double>((j * k) % dim) / static_cast<double>(dim);
            u(row, k) = std::polar(scale, angle);
        }
    }
    return u;
}

DenseUnitary qft_from_circuit(int num_qubits, bool with_swaps) {
    int n = num_qubits;
    size_t dim = size_t{1} << n;
    auto bit = [n](size_t v, int q) { return (v >> (n - 1 - q)) & 1; };
    DenseUnitary h1(1, {{1 / std::sqrt(2.0), 0}, {1 / std::sqrt(2.0), 0}, {1 / std::sqrt(2.0), 0},
                        {-1 / std::sqrt(2.0), 0}});
    DenseUnitary u = DenseUnitary::identity(n);
    for (int q = 0; q < n; q++) {
        DenseUnitary h = q == 0 ? h1 : DenseUnitary::identity(1);
        for (int k = 1; k < n; k++) {
            h = tensor(h, k == q ? h1 : DenseUnitary::identity(1));
        }
        u = h * u;
        for (int c = q + 1; c < n; c++) {
            // Controlled R_k with k = c - q + 1: phase e^{2 pi i / 2^k} when both bits are set.
            DenseUnitary cp = DenseUnitary::identity(n);
            double angle = 2 * std::numbers::pi / static_cast<double>(size_t{1} << (c - q + 1));
            for (size_t v = 0; v < dim; v++) {
                if (bit(v, q) && bit(v, c)) {
                    cp(v, v) = std::polar(1.0, angle);
                }
            }
            u = cp * u;
        }
    }
    if (with_swaps) {
        DenseUnitary perm(n);
        for (size_t v = 0; v < dim; v++) {
            perm(bit_reverse(v, n), v) = 1;
        }
        u = perm * u;
    }
    return u;
}

TargetSpec parse_matrix(const std::string &text, const std::string &source, double tolerance) {
    std::istringstream in(text);
    std::string keyword;
    long long n = -1;
    if (!(in >> keyword >> n) || keyword != "qubits") {
        throw MatrixParseError(source + ": expected header 'qubits <n>'");
    }
    if (n < 1 || n > kMaxQubits) {
        throw MatrixParseError(source + ": qubit count " + std::to_string(n) + " is outside [1, " +
                               std::to_string(kMaxQubits) + "]");
    }
    size_t dim = size_t{1} << n;
    std::vector<cplx> entries;
    long long row = 0;
    long long col = 0;
    double re = 0;
    double im = 0;
    size_t count = 0;
    while (in >> row >> col >> re >> im) {
        if (count >= dim * dim) {
            throw MatrixParseError(source + ": more than " + std::to_string(dim * dim) +
                                   " entries; dimension is not 2^" + std::to_string(n));
        }
        size_t expect_row = count / dim;
        size_t expect_col = count % dim;
        if (row != static_cast<long long>(expect_row) || col != static_cast<long long>(expect_col)) {
            throw MatrixParseError(source + ": entry " + std::to_string(count) + " has index (" +
                                   std::to_string(row) + ", " + std::to_string(col) + "), expected (" +
                                   std::to_string(expect_row) + ", " + std::to_string(expect_col) + ")");
        }
        entries.emplace_back(re, im);
        count++;
    }
    if (!in.eof()) {
        throw MatrixParseError(source + ": malformed entry after " + std::to_string(count) + " entries");
    }
    if (count != dim * dim) {
        throw MatrixParseError(source + ": found " + std::to_string(count) + " entries, expected " +
                               std::to_string(dim * dim) + " for " + std::to_string(n) + " qubits");
    }
    TargetSpec spec;
    spec.source = source;
    spec.num_qubits = static_cast<int>(n);
    spec.matrix = DenseUnitary::checked(spec.num_qubits, std::move(entries), tolerance);
    return spec;
}

TargetSpec load_matrix(const std::string &path, double tolerance) {
    std::ifstream in(path);
    if (!in) {
        throw MatrixParseError(path + ": cannot open file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str(), path, tolerance);
}

std::string format_matrix(const DenseUnitary &u) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "qubits " << u.num_qubits() << "\n";
    for (size_t r = 0; r < u.dim(); r++) {
        for (size_t c = 0; c < u.dim(); c++) {
            out << r << " " << c << " " << u(r, c).real() << " " << u(r, c).imag() << "\n";
        }
    }
    return out.str();
}

std::vector<double> theta_grid() {
    std::vector<double> out;
    for (int k = 1; k <= 1000; k += 50) {
        out.push_back(2 * std::numbers::pi * k / 1000.0);
    }
    return out;
}

}  // namespace tsynth
