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

#include "surfsim/pauli.h"

#include <bit>

namespace surfsim {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Z:
            return 'Z';
        case Pauli::Y:
            return 'Y';
    }
    return '?';
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    bool negative = false;
    size_t pos = 0;
    if (text.starts_with("\xE2\x88\x92")) {  // U+2212
        negative = true;
        pos = 3;
    } else if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        pos = 1;
    }
    std::string_view body = text.substr(pos);
    PauliOperator result(body.size());
    result.negative_ = negative;
    for (size_t k = 0; k < body.size(); k++) {
        switch (body[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.set(k, Pauli::X);
                break;
            case 'Y':
                result.set(k, Pauli::Y);
                break;
            case 'Z':
                result.set(k, Pauli::Z);
                break;
            default:
                throw std::invalid_argument("bad Pauli character in '" + std::string(text) + "'");
        }
    }
    return result;
}

PauliOperator PauliOperator::single(size_t num_qubits, size_t qubit, Pauli p) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
    PauliOperator result(num_qubits);
    result.set(qubit, p);
    return result;
}

void PauliOperator::set(size_t q, Pauli p) {
    xs_.set(q, uint8_t(p) & 1);
    zs_.set(q, uint8_t(p) & 2);
}

PauliOperator PauliOperator::operator-() const {
    PauliOperator result = *this;
    result.negative_ = !negative_;
    return result;
}

bool PauliOperator::commutes_with(const PauliOperator &other) const {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    uint64_t acc = 0;
    for (size_t w = 0; w < xs_.num_words(); w++) {
        acc ^= (xs_.words()[w] & other.zs_.words()[w]) ^ (zs_.words()[w] & other.xs_.words()[w]);
    }
    return (std::popcount(acc) & 1) == 0;
}

size_t PauliOperator::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.num_words(); w++) {
        total += std::popcount(xs_.words()[w] | zs_.words()[w]);
    }
    return total;
}

uint8_t PauliOperator::inplace_mul_returning_log_i(const PauliOperator &rhs) {
    if (rhs.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    // Per-qubit phases are counted mod 4 with two bit-planes.
    uint64_t *x1s = xs_.words();
    uint64_t *z1s = zs_.words();
    const uint64_t *x2s = rhs.xs_.words();
    const uint64_t *z2s = rhs.zs_.words();
    size_t total = 0;
    for (size_t w = 0; w < xs_.num_words(); w++) {
        uint64_t x1 = x1s[w];
        uint64_t z1 = z1s[w];
        uint64_t x2 = x2s[w];
        uint64_t z2 = z2s[w];
        uint64_t new_x = x1 ^ x2;
        uint64_t new_z = z1 ^ z2;
        uint64_t x1z2 = x1 & z2;
        uint64_t anti_commutes = (x2 & z1) ^ x1z2;
        uint64_t cnt2 = (new_x ^ new_z ^ x1z2) & anti_commutes;
        uint64_t cnt1 = anti_commutes;
        total += std::popcount(cnt1) + 2 * std::popcount(cnt2);
        x1s[w] = new_x;
        z1s[w] = new_z;
    }
    uint8_t log_i = uint8_t(total & 3);
    if (rhs.negative_) {
        log_i ^= 2;
    }
    if (negative_) {
        log_i ^= 2;
    }
    negative_ = (log_i & 2) != 0;
    return log_i;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &rhs) {
    uint8_t log_i = inplace_mul_returning_log_i(rhs);
    if (log_i & 1) {
        throw std::domain_error("Pauli product has an imaginary phase (operands anticommute)");
    }
    return *this;
}

std::string PauliOperator::str() const {
    std::string result;
    result.reserve(num_qubits() + 1);
    result.push_back(negative_ ? '-' : '+');
    for (size_t q = 0; q < num_qubits(); q++) {
        result.push_back(pauli_char(get(q)));
    }
    return result;
}

PauliOperator operator*(PauliOperator lhs, const PauliOperator &rhs) {
    lhs *= rhs;
    return lhs;
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    return a * b;
}

void conjugate_inplace(PauliOperator &m, const CliffordGate &u) {
    size_t n = m.num_qubits();
    if (u.q0 >= n || (u.is_two_qubit() && u.q1 >= n)) {
        throw std::out_of_range("gate qubit index out of range");
    }
    if (u.is_two_qubit() && u.q0 == u.q1) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    size_t a = u.q0;
    bool xa = m.x(a);
    bool za = m.z(a);
    switch (u.kind) {
        case CliffordGate::Kind::X:
            m.set_negative(m.negative() ^ za);
            break;
        case CliffordGate::Kind::Z:
            m.set_negative(m.negative() ^ xa);
            break;
        case CliffordGate::Kind::Y:
            m.set_negative(m.negative() ^ (xa ^ za));
            break;
        case CliffordGate::Kind::H:
            m.set_negative(m.negative() ^ (xa & za));
            m.xs().set(a, za);
            m.zs().set(a, xa);
            break;
        case CliffordGate::Kind::S:
            // X -> Y, Y -> -X.
            m.set_negative(m.negative() ^ (xa & za));
            m.zs().set(a, za ^ xa);
            break;
        case CliffordGate::Kind::S_DAG:
            // X -> -Y, Y -> X.
            m.set_negative(m.negative() ^ (xa & !za));
            m.zs().set(a, za ^ xa);
            break;
        case CliffordGate::Kind::CNOT: {
            size_t b = u.q1;
            bool xb = m.x(b);
            bool zb = m.z(b);
            m.set_negative(m.negative() ^ (xa & zb & !(xb ^ za)));
            m.xs().set(b, xb ^ xa);
            m.zs().set(a, za ^ zb);
            break;
        }
        case CliffordGate::Kind::CZ: {
            size_t b = u.q1;
            conjugate_inplace(m, CliffordGate::h(b));
            conjugate_inplace(m, CliffordGate::cnot(a, b));
            conjugate_inplace(m, CliffordGate::h(b));
            break;
        }
    }
}

PauliOperator conjugate(PauliOperator m, const CliffordGate &u) {
    conjugate_inplace(m, u);
    return m;
}

}  // namespace surfsim
