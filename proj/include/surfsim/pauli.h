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

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "surfsim/bits.h"

namespace surfsim {

/// Single-qubit Pauli label. Bit 0 is the X component and bit 1 is the Z component.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);

/// Signed n-qubit Pauli operator in binary-symplectic form.
///
/// Y denotes the Hermitian Pauli Y = iXZ, so every operator built here is Hermitian and its
/// sign is +1 or -1. Products that would need a phase of +-i are rejected.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t num_qubits) : xs_(num_qubits), zs_(num_qubits) {}

    /// Parses text like "+ZZII", "-XIY" or "ZZ" (sign optional). Accepts the U+2212 minus sign.
    static PauliOperator from_string(std::string_view text);
    static PauliOperator single(size_t num_qubits, size_t qubit, Pauli p);

    size_t num_qubits() const { return xs_.size(); }

    Pauli get(size_t q) const { return Pauli(uint8_t(xs_[q]) | uint8_t(zs_[q]) << 1); }
    void set(size_t q, Pauli p);
    bool x(size_t q) const { return xs_[q]; }
    bool z(size_t q) const { return zs_[q]; }

    bool negative() const { return negative_; }
    void set_negative(bool value) { negative_ = value; }
    int sign() const { return negative_ ? -1 : +1; }
    PauliOperator operator-() const;

    const BitVector &xs() const { return xs_; }
    const BitVector &zs() const { return zs_; }
    BitVector &xs() { return xs_; }
    BitVector &zs() { return zs_; }

    bool commutes_with(const PauliOperator &other) const;
    bool is_identity() const { return !xs_.any() && !zs_.any(); }
    size_t weight() const;

    /// this = this * rhs. Throws std::domain_error if the product carries a phase of +-i.
    PauliOperator &operator*=(const PauliOperator &rhs);

    /// Same as *=, but returns the power of i of the product instead of throwing.
    /// On return the sign holds the real part of the phase.
    uint8_t inplace_mul_returning_log_i(const PauliOperator &rhs);

    std::string str() const;
    bool operator==(const PauliOperator &other) const = default;

   private:
    BitVector xs_;
    BitVector zs_;
    bool negative_ = false;
};

PauliOperator operator*(PauliOperator lhs, const PauliOperator &rhs);

/// Signed product a*b with the size check of the stabilizer calculus.
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);

/// The Clifford gates needed for stabilizer-level manipulation.
struct CliffordGate {
    enum class Kind : uint8_t { X, Y, Z, H, S, S_DAG, CNOT, CZ };
    Kind kind;
    size_t q0;
    size_t q1 = 0;  // target for CNOT, partner for CZ

    static CliffordGate x(size_t q) { return {Kind::X, q}; }
    static CliffordGate y(size_t q) { return {Kind::Y, q}; }
    static CliffordGate z(size_t q) { return {Kind::Z, q}; }
    static CliffordGate h(size_t q) { return {Kind::H, q}; }
    static CliffordGate s(size_t q) { return {Kind::S, q}; }
    static CliffordGate s_dag(size_t q) { return {Kind::S_DAG, q}; }
    static CliffordGate cnot(size_t control, size_t target) { return {Kind::CNOT, control, target}; }
    static CliffordGate cz(size_t a, size_t b) { return {Kind::CZ, a, b}; }

    bool is_two_qubit() const { return kind == Kind::CNOT || kind == Kind::CZ; }
};

/// In-place U m U^dagger.
void conjugate_inplace(PauliOperator &m, const CliffordGate &u);

/// Returns U m U^dagger.
PauliOperator conjugate(PauliOperator m, const CliffordGate &u);

}  // namespace surfsim
