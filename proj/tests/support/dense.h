// Copyright 2026 The xstab Authors
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

// Dense-matrix reference used only by tests. Built on Eigen and written from the gate definitions directly,
// so it shares no code with the library beyond the enums.

#ifndef XSTAB_TESTS_DENSE_H
#define XSTAB_TESTS_DENSE_H

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <string>

#include "xstab/circuit.h"
#include "xstab/pauli.h"
#include "xstab/stabilizer.h"

namespace dense {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix pauli(char c) {
    using namespace std::complex_literals;
    Matrix m(2, 2);
    switch (c) {
        case 'I':
            m << 1, 0, 0, 1;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, -1i, 1i, 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            throw std::invalid_argument("pauli: bad letter");
    }
    return m;
}

inline Matrix pauli(xstab::PauliAxis a) {
    return pauli("IXYZ"[static_cast<int>(a)]);
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Qubit 0 is the leftmost tensor factor.
inline Matrix word(const std::string &letters) {
    Matrix m = Matrix::Identity(1, 1);
    for (char c : letters) {
        m = kron(m, pauli(c));
    }
    return m;
}

inline Matrix word(const xstab::PauliWord &w) {
    return word(w.str());
}

inline Matrix embed(const Matrix &u, std::size_t qubit, std::size_t n) {
    Matrix m = Matrix::Identity(1, 1);
    for (std::size_t q = 0; q < n; q++) {
        m = kron(m, q == qubit ? u : Matrix::Identity(2, 2));
    }
    return m;
}

inline Matrix single_gate(xstab::Gate g, double theta) {
    using namespace std::complex_literals;
    Matrix i2 = Matrix::Identity(2, 2);
    Matrix m(2, 2);
    switch (g) {
        case xstab::Gate::H:
            return (pauli('X') + pauli('Z')) / std::numbers::sqrt2;
        case xstab::Gate::S:
            m << 1, 0, 0, 1i;
            return m;
        case xstab::Gate::X:
            return pauli('X');
        case xstab::Gate::SX:
            // exp(i pi/4) RX(pi/2)
            return std::exp(0.25i * std::numbers::pi) *
                   (std::cos(std::numbers::pi / 4) * i2 - 1i * std::sin(std::numbers::pi / 4) * pauli('X'));
        case xstab::Gate::RX:
            return std::cos(theta / 2) * i2 - 1i * std::sin(theta / 2) * pauli('X');
        case xstab::Gate::RY:
            return std::cos(theta / 2) * i2 - 1i * std::sin(theta / 2) * pauli('Y');
        case xstab::Gate::RZ:
            return std::cos(theta / 2) * i2 - 1i * std::sin(theta / 2) * pauli('Z');
        case xstab::Gate::CX:
            break;
    }
    throw std::invalid_argument("single_gate: CX");
}

inline Matrix cx(std::size_t control, std::size_t target, std::size_t n) {
    Matrix p0(2, 2), p1(2, 2);
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    return embed(p0, control, n) + embed(p1, control, n) * embed(pauli('X'), target, n);
}

inline Matrix gate(const xstab::Instruction &inst, std::size_t n) {
    if (inst.gate == xstab::Gate::CX) {
        return cx(inst.control(), inst.target(), n);
    }
    return embed(single_gate(inst.gate, inst.theta), inst.wire(), n);
}

inline Matrix unitary(std::span<const xstab::Instruction> circuit, std::size_t n) {
    Matrix u = Matrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (const auto &inst : circuit) {
        u = gate(inst, n) * u;
    }
    return u;
}

inline Vector state(std::span<const xstab::Instruction> circuit, std::size_t n) {
    Vector psi = Vector::Zero(Eigen::Index{1} << n);
    psi(0) = 1;
    return unitary(circuit, n) * psi;
}

inline std::string index_word(std::uint64_t index, std::size_t n) {
    std::string s(n, 'I');
    for (std::size_t q = 0; q < n; q++) {
        s[n - 1 - q] = "IXYZ"[index & 3];
        index >>= 2;
    }
    return s;
}

// Coefficients c_P = Tr(P M) / 2^n, keyed by base-4 index; entries below tol are omitted.
inline std::map<std::uint64_t, Complex> decompose(const Matrix &m, std::size_t n, double tol = 1e-12) {
    std::map<std::uint64_t, Complex> out;
    std::uint64_t total = std::uint64_t{1} << (2 * n);
    double scale = std::ldexp(1.0, -static_cast<int>(n));
    for (std::uint64_t idx = 0; idx < total; idx++) {
        Complex c = (word(index_word(idx, n)) * m).trace() * scale;
        if (std::abs(c) > tol) {
            out[idx] = c;
        }
    }
    return out;
}

inline Matrix generator(const xstab::SimpleGenerator &g) {
    std::size_t n = g.num_qubits();
    Matrix m = Matrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (std::size_t s = 0; s < g.rank(); s++) {
        m += g.lambda(s) * word(g.pauli_word(s));
    }
    return m;
}

// prod_j (I + G_j) / 2^n.
inline Matrix density(const xstab::GeneratorSet &gs) {
    Eigen::Index dim = Eigen::Index{1} << gs.num_qubits;
    Matrix rho = Matrix::Identity(dim, dim);
    for (const auto &g : gs.generators) {
        rho = rho * (Matrix::Identity(dim, dim) + generator(g)) / 2.0;
    }
    return rho;
}

inline double prob0(const Matrix &rho, std::size_t k, std::size_t n) {
    Matrix p0(2, 2);
    p0 << 1, 0, 0, 0;
    return (embed(p0, k, n) * rho).trace().real();
}

}  // namespace dense

#endif
