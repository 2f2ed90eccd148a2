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

#include "surfsim/statevector.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace surfsim {

namespace {

const cplx kI{0, 1};

}  // namespace

Gate Gate::from_clifford(const CliffordGate &g) {
    switch (g.kind) {
        case CliffordGate::Kind::X:
            return x(g.q0);
        case CliffordGate::Kind::Y:
            return y(g.q0);
        case CliffordGate::Kind::Z:
            return z(g.q0);
        case CliffordGate::Kind::H:
            return h(g.q0);
        case CliffordGate::Kind::S:
            return s(g.q0);
        case CliffordGate::Kind::S_DAG:
            return s_dag(g.q0);
        case CliffordGate::Kind::CNOT:
            return cnot(g.q0, g.q1);
        case CliffordGate::Kind::CZ:
            return cz(g.q0, g.q1);
    }
    throw std::logic_error("unknown Clifford gate");
}

Matrix2 Gate::single_qubit_matrix() const {
    const double r = std::numbers::sqrt2 / 2;
    switch (kind) {
        case Kind::X:
            return {0, 1, 1, 0};
        case Kind::Y:
            return {0, -kI, kI, 0};
        case Kind::Z:
            return {1, 0, 0, -1};
        case Kind::H:
            return {r, r, r, -r};
        case Kind::S:
            return {1, 0, 0, kI};
        case Kind::S_DAG:
            return {1, 0, 0, -kI};
        case Kind::T:
            return {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)};
        case Kind::T_DAG:
            return {1, 0, 0, std::polar(1.0, -std::numbers::pi / 4)};
        case Kind::RZ:
            return {1, 0, 0, std::polar(1.0, theta)};
        case Kind::RX: {
            Matrix2 hm{r, r, r, -r};
            return matmul(hm, matmul(Matrix2{1, 0, 0, std::polar(1.0, theta)}, hm));
        }
        case Kind::U:
            return matrix;
        case Kind::CNOT:
        case Kind::CZ:
            break;
    }
    throw std::logic_error("not a single-qubit gate");
}

Matrix2 matmul(const Matrix2 &a, const Matrix2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Matrix2 exp_pauli_rotation(Pauli axis, double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    switch (axis) {
        case Pauli::X:
            return {c, -kI * s, -kI * s, c};
        case Pauli::Y:
            return {c, -s, s, c};
        case Pauli::Z:
            return {cplx(c, -s), 0, 0, cplx(c, s)};
        case Pauli::I:
            break;
    }
    return {cplx(c, -s), 0, 0, cplx(c, -s)};
}

double distance_up_to_phase(const Matrix2 &a, const Matrix2 &b) {
    // Align phases using the trace inner product, then take the spectral norm of the difference.
    cplx overlap = 0;
    for (size_t k = 0; k < 4; k++) {
        overlap += std::conj(b[k]) * a[k];
    }
    cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1);
    Matrix2 d;
    for (size_t k = 0; k < 4; k++) {
        d[k] = a[k] - phase * b[k];
    }
    // Largest singular value of a 2x2 matrix.
    double fro = std::norm(d[0]) + std::norm(d[1]) + std::norm(d[2]) + std::norm(d[3]);
    double det = std::abs(d[0] * d[3] - d[1] * d[2]);
    double disc = std::sqrt(std::max(0.0, fro * fro - 4 * det * det));
    return std::sqrt(std::max(0.0, (fro + disc) / 2));
}

StateVector::StateVector(size_t num_qubits) : n_(num_qubits) {
    if (num_qubits > kMaxStateVectorQubits) {
        throw std::invalid_argument("statevector qubit cap exceeded");
    }
    amps_.assign(size_t{1} << num_qubits, 0);
    amps_[0] = 1;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
    size_t size = amplitudes.size();
    if (size == 0 || !std::has_single_bit(size)) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    StateVector s(std::countr_zero(size));
    s.amps_ = std::move(amplitudes);
    return s;
}

StateVector StateVector::product(const std::vector<std::array<cplx, 2>> &qubits) {
    StateVector s(qubits.size());
    for (size_t i = 0; i < s.amps_.size(); i++) {
        cplx a = 1;
        for (size_t q = 0; q < qubits.size(); q++) {
            a *= qubits[q][(i >> q) & 1];
        }
        s.amps_[i] = a;
    }
    return s;
}

void StateVector::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("gate qubit index out of range");
    }
}

void StateVector::apply_single(size_t q, const Matrix2 &m) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            continue;
        }
        cplx a0 = amps_[i];
        cplx a1 = amps_[i | bit];
        amps_[i] = m[0] * a0 + m[1] * a1;
        amps_[i | bit] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply(const Gate &g) {
    check_qubit(g.q0);
    if (!g.is_two_qubit()) {
        apply_single(g.q0, g.single_qubit_matrix());
        return;
    }
    check_qubit(g.q1);
    if (g.q0 == g.q1) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    size_t a = size_t{1} << g.q0;
    size_t b = size_t{1} << g.q1;
    if (g.kind == Gate::Kind::CNOT) {
        for (size_t i = 0; i < amps_.size(); i++) {
            if ((i & a) && !(i & b)) {
                std::swap(amps_[i], amps_[i | b]);
            }
        }
    } else {
        for (size_t i = 0; i < amps_.size(); i++) {
            if ((i & a) && (i & b)) {
                amps_[i] = -amps_[i];
            }
        }
    }
}

std::vector<cplx> StateVector::pauli_image(const PauliOperator &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("operator size does not match state");
    }
    uint64_t xmask = 0;
    uint64_t zmask = 0;
    size_t num_y = 0;
    for (size_t q = 0; q < n_; q++) {
        xmask |= uint64_t(p.x(q)) << q;
        zmask |= uint64_t(p.z(q)) << q;
        num_y += p.x(q) && p.z(q);
    }
    static const cplx kPowI[4] = {1, kI, -1, -kI};
    cplx base = kPowI[num_y & 3] * double(p.sign());
    std::vector<cplx> out(amps_.size());
    for (size_t i = 0; i < amps_.size(); i++) {
        cplx v = (std::popcount(i & zmask) & 1) ? -base : base;
        out[i ^ xmask] = v * amps_[i];
    }
    return out;
}

void StateVector::apply_pauli(const PauliOperator &p) {
    amps_ = pauli_image(p);
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const cplx &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::normalize() {
    double norm = std::sqrt(norm_squared());
    if (norm == 0) {
        throw std::domain_error("cannot normalize a zero vector");
    }
    for (cplx &a : amps_) {
        a /= norm;
    }
}

double StateVector::expectation(const PauliOperator &p) const {
    std::vector<cplx> image = pauli_image(p);
    cplx total = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        total += std::conj(amps_[i]) * image[i];
    }
    return total.real();
}

double StateVector::probability(const PauliOperator &p, int outcome) const {
    double e = expectation(p) / norm_squared();
    return std::clamp((1 + outcome * e) / 2, 0.0, 1.0);
}

int StateVector::measure_pauli(const PauliOperator &p, Rng &rng, std::optional<int> forced_outcome) {
    double p_plus = probability(p, +1);
    int outcome;
    if (forced_outcome) {
        outcome = *forced_outcome;
        double prob = outcome > 0 ? p_plus : 1 - p_plus;
        if (prob < 1e-12) {
            throw std::domain_error("forced outcome has zero probability");
        }
    } else {
        outcome = std::uniform_real_distribution<double>(0, 1)(rng) < p_plus ? +1 : -1;
    }
    std::vector<cplx> image = pauli_image(p);
    for (size_t i = 0; i < amps_.size(); i++) {
        amps_[i] = (amps_[i] + double(outcome) * image[i]) * 0.5;
    }
    normalize();
    return outcome;
}

double StateVector::project_qubit(size_t q, int bit) {
    check_qubit(q);
    size_t mask = size_t{1} << q;
    double kept = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (bool(i & mask) != bool(bit)) {
            amps_[i] = 0;
        } else {
            kept += std::norm(amps_[i]);
        }
    }
    if (kept > 0) {
        normalize();
    }
    return kept;
}

cplx StateVector::inner(const StateVector &a, const StateVector &b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("state size mismatch");
    }
    cplx total = 0;
    for (size_t i = 0; i < a.amps_.size(); i++) {
        total += std::conj(a.amps_[i]) * b.amps_[i];
    }
    return total;
}

double StateVector::fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner(a, b));
}

StateVector stabilizer_state(const StabilizerTableau &t) {
    if (t.num_generators() != t.num_qubits()) {
        throw std::invalid_argument("tableau does not fix a pure state");
    }
    size_t n = t.num_qubits();
    std::vector<cplx> seed(size_t{1} << n);
    for (size_t i = 0; i < seed.size(); i++) {
        seed[i] = std::polar(1.0, 0.7 * double(i) + 0.3 * double(i * i % 97));
    }
    StateVector s = StateVector::from_amplitudes(std::move(seed));
    s.normalize();
    Rng unused(0);
    for (const auto &g : t.generators()) {
        s.measure_pauli(g, unused, +1);
    }
    return s;
}

}  // namespace surfsim
