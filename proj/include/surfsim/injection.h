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
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "surfsim/lattice.h"
#include "surfsim/pauli.h"
#include "surfsim/statevector.h"

namespace surfsim {

/// The 13-qubit fragment around qubit 5: rows 1..5, columns 0..4, rough top and bottom.
/// Qubits 1..9 are numbered as in the usual picture:
///
///        1
///      2   3
///    4   5   6
///      7   8
///        9
class InjectionPatch {
   public:
    InjectionPatch();

    const PlanarLattice &lattice() const { return lattice_; }
    size_t num_qubits() const { return lattice_.num_data(); }
    /// Data index of numbered qubit 1..9.
    size_t index(int label) const;
    /// Product of `p` over the numbered qubits, with the given sign.
    PauliOperator op(Pauli p, std::initializer_list<int> labels, int sign = +1) const;

    /// X along the top row. Commutes with every step of the injection, so it stays fixed.
    PauliOperator spectator() const;
    /// Patch stabilizers and the spectator: the state before injection.
    StateVector code_state() const;

    PauliOperator logical_z() const { return op(Pauli::Z, {5}); }
    PauliOperator logical_x() const { return op(Pauli::X, {1, 2, 3, 5}); }

   private:
    PlanarLattice lattice_;
    std::array<size_t, 10> index_{};
};

struct InjectionStage {
    std::string name;
    StateVector state;
};

struct InjectionOutcomes {
    std::optional<int> m_x;
    std::optional<int> m_z;
};

struct InjectionResult {
    StateVector state;
    int m_x = +1;
    int m_z = +1;
    /// "measured-x", "corrected-x", "rotated", "measured-z", "final".
    std::vector<InjectionStage> stages;
};

/// Measures X5 (fixing a -1 with Z2Z4Z5Z7), applies H5 and a rotation taking |0> to
/// alpha|0> + beta|1>, then measures Z2Z4Z5Z7 (fixing a -1 with X5 and X1X2X3X5).
/// The result is alpha|0_L> + beta|1_L> for Z_L = Z5 and X_L = X1X2X3X5.
/// Throws std::invalid_argument unless |alpha|^2 + |beta|^2 = 1.
InjectionResult inject_state(cplx alpha, cplx beta, Rng &rng, InjectionOutcomes forced = {});

}  // namespace surfsim
