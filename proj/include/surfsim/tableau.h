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

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "surfsim/pauli.h"

namespace surfsim {

using Rng = std::mt19937_64;

/// Result of measuring a Pauli operator against a stabilizer tableau.
struct MeasureResult {
    int outcome = +1;
    bool deterministic = true;
    /// 1: product of generators; 2: commutes with all but independent; 3: anticommutes with some.
    int kind = 1;
    /// Case 3 only: the first anticommuting generator as it was before being replaced.
    std::optional<PauliOperator> pivot;
};

/// List of mutually commuting, independent signed Pauli generators over n qubits.
///
/// A full tableau has n generators and fixes a pure state. Fewer generators describe a state
/// only partially (the measurement calculus works the same way); this is also used to hold the
/// stabilizer group of a code.
class StabilizerTableau {
   public:
    StabilizerTableau() = default;
    /// |0...0>: generators +Z_k.
    explicit StabilizerTableau(size_t num_qubits);

    /// Validates commutation and independence.
    static StabilizerTableau from_generators(size_t num_qubits, std::vector<PauliOperator> generators);
    /// Empty generator list (maximally unknown state / empty group).
    static StabilizerTableau empty(size_t num_qubits);

    /// One generator per line, "+ZZII" style. Blank lines and '#' comments are ignored.
    static StabilizerTableau parse(std::string_view text);
    std::string str() const;

    size_t num_qubits() const { return n_; }
    size_t num_generators() const { return gens_.size(); }
    const std::vector<PauliOperator> &generators() const { return gens_; }

    /// Measure `op`. Random outcomes are uniform unless `forced_outcome` is given; forcing a
    /// deterministic outcome throws.
    MeasureResult measure(const PauliOperator &op, Rng &rng, std::optional<int> forced_outcome = std::nullopt);

    /// Sign of `op` if it is (up to sign) a product of generators, otherwise nullopt. No mutation.
    std::optional<int> peek(const PauliOperator &op) const;

    /// Adds a generator that commutes with every generator and is independent of them.
    void add_generator(const PauliOperator &op);

    /// Applies U to the state: generators become U g U^dagger.
    void apply(const CliffordGate &gate);
    /// Applies a Pauli operator to the state (flips signs of anticommuting generators).
    void apply_pauli(const PauliOperator &p);
    /// Relabels qubits: qubit k moves to position perm[k].
    void permute(const std::vector<size_t> &perm);

    /// Rank of the generators over the symplectic GF(2) representation.
    size_t rank() const;
    bool all_commute() const;

    /// Reduced row echelon generators of the group, signs included. Equal groups give equal output.
    std::vector<PauliOperator> canonical_generators() const;
    bool same_group(const StabilizerTableau &other) const;

    /// Multiplies `op` by group elements to clear every pivot column of the canonical form.
    /// Two operators are equal modulo the group iff their reductions are equal. The sign is only
    /// meaningful when `op` commutes with the group.
    PauliOperator reduce(const PauliOperator &op) const;
    /// Same, with the canonical form built once for all operators.
    std::vector<PauliOperator> reduce(std::vector<PauliOperator> ops) const;

   private:
    size_t n_ = 0;
    std::vector<PauliOperator> gens_;
};

/// Rank of an arbitrary list of Pauli operators over GF(2)^(2n).
size_t symplectic_rank(const std::vector<PauliOperator> &ops);

}  // namespace surfsim
