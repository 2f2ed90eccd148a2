// Copyright 2026 The surfsim Authors
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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "surfsim/pauli.h"
#include "surfsim/tableau.h"

namespace surfsim {

using cplx = std::complex<double>;
using Matrix2 = std::array<cplx, 4>;  // row major

constexpr size_t kMaxStateVectorQubits = 20;

/// Gate set of the dense simulator. Rotations follow the phase-gate convention
/// rz(theta) = diag(1, e^{i theta}) and rx(theta) = H rz(theta) H.
struct Gate {
    enum class Kind : uint8_t { X, Y, Z, H, S, S_DAG, T, T_DAG, RZ, RX, U, CNOT, CZ };
    Kind kind;
    size_t q0;
    size_t q1 = 0;
    double theta = 0;
    Matrix2 matrix{};

    static Gate x(size_t q) { return {Kind::X, q}; }
    static Gate y(size_t q) { return {Kind::Y, q}; }
    static Gate z(size_t q) { return {Kind::Z, q}; }
    static Gate h(size_t q) { return {Kind::H, q}; }
    static Gate s(size_t q) { return {Kind::S, q}; }
    static Gate s_dag(size_t q) { return {Kind::S_DAG, q}; }
    static Gate t(size_t q) { return {Kind::T, q}; }
    static Gate t_dag(size_t q) { return {Kind::T_DAG, q}; }
    static Gate rz(size_t q, double theta) { return {Kind::RZ, q, 0, theta}; }
    static Gate rx(size_t q, double theta) { return {Kind::RX, q, 0, theta}; }
    static Gate unitary(size_t q, const Matrix2 &m) { return {Kind::U, q, 0, 0, m}; }
    static Gate cnot(size_t control, size_t target) { return {Kind::CNOT, control, target}; }
    static Gate cz(size_t a, size_t b) { return {Kind::CZ, a, b}; }
    static Gate from_clifford(const CliffordGate &g);

    bool is_two_qubit() const { return kind == Kind::CNOT || kind == Kind::CZ; }
    /// 2x2 matrix of a single-qubit gate.
    Matrix2 single_qubit_matrix() const;
};

Matrix2 matmul(const Matrix2 &a, const Matrix2 &b);
/// exp(-i theta sigma) for sigma in {X, Y, Z}: the half-angle rotation convention.
Matrix2 exp_pauli_rotation(Pauli axis, double theta);
/// Operator-norm distance between a and b after removing the best global phase.
double distance_up_to_phase(const Matrix2 &a, const Matrix2 &b);

/// Dense amplitude vector over at most 20 qubits. Qubit k is bit k of the basis index.
class StateVector {
   public:
    explicit StateVector(size_t num_qubits);
    static StateVector from_amplitudes(std::vector<cplx> amplitudes);
    /// Product state with the given single-qubit states (each a pair of amplitudes).
    static StateVector product(const std::vector<std::array<cplx, 2>> &qubits);

    size_t num_qubits() const { return n_; }
    const std::vector<cplx> &amplitudes() const { return amps_; }
    cplx amplitude(size_t index) const { return amps_[index]; }

    void apply(const Gate &g);
    /// Applies a signed Pauli operator (Y is Hermitian iXZ).
    void apply_pauli(const PauliOperator &p);

    double norm_squared() const;
    void normalize();
    /// <psi|P|psi>, real for Hermitian P.
    double expectation(const PauliOperator &p) const;
    /// Probability of measuring `outcome` (+1/-1) for P.
    double probability(const PauliOperator &p, int outcome) const;

    /// Projects onto the (1 +- P)/2 eigenspace with Born probabilities. With a forced outcome
    /// whose probability is zero, throws std::domain_error.
    int measure_pauli(const PauliOperator &p, Rng &rng, std::optional<int> forced_outcome = std::nullopt);

    /// Projects qubit q onto |bit> and renormalizes; returns the probability of that branch.
    double project_qubit(size_t q, int bit);

    /// |<a|b>|^2 for normalized inputs.
    static double fidelity(const StateVector &a, const StateVector &b);
    /// Inner product <a|b>.
    static cplx inner(const StateVector &a, const StateVector &b);

   private:
    void check_qubit(size_t q) const;
    void apply_single(size_t q, const Matrix2 &m);
    std::vector<cplx> pauli_image(const PauliOperator &p) const;

    size_t n_;
    std::vector<cplx> amps_;
};

/// Statevector of the unique +1 eigenstate of a full stabilizer tableau (at most 20 qubits).
StateVector stabilizer_state(const StabilizerTableau &t);

}  // namespace surfsim
