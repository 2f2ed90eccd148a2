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


#include "surfsim/injection.h"

#include <cmath>
#include <stdexcept>

#include "surfsim/tableau.h"

namespace surfsim {

namespace {

constexpr std::array<Coord, 9> kLabels = {{{1, 2}, {2, 1}, {2, 3}, {3, 0}, {3, 2}, {3, 4}, {4, 1}, {4, 3}, {5, 2}}};

}  // namespace

InjectionPatch::InjectionPatch() : lattice_(1, 5, 0, 4) {
    for (size_t i = 0; i < kLabels.size(); i++) {
        index_[i + 1] = *lattice_.data_at(kLabels[i]);
    }
}

size_t InjectionPatch::index(int label) const {
    if (label < 1 || label > 9) {
        throw std::out_of_range("qubit label must be in 1..9");
    }
    return index_[size_t(label)];
}

PauliOperator InjectionPatch::op(Pauli p, std::initializer_list<int> labels, int sign) const {
    PauliOperator out(num_qubits());
    for (int l : labels) {
        out.set(index(l), p);
    }
    out.set_negative(sign < 0);
    return out;
}

PauliOperator InjectionPatch::spectator() const {
    PauliOperator out(num_qubits());
    for (size_t q = 0; q < num_qubits(); q++) {
        if (lattice_.data_coord(q).r == lattice_.r0()) {
            out.set(q, Pauli::X);
        }
    }
    return out;
}

StateVector InjectionPatch::code_state() const {
    std::vector<PauliOperator> gens = lattice_.all_stabilizer_operators();
    gens.push_back(spectator());
    return stabilizer_state(StabilizerTableau::from_generators(num_qubits(), std::move(gens)));
}

InjectionResult inject_state(cplx alpha, cplx beta, Rng &rng, InjectionOutcomes forced) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1) > 1e-9) {
        throw std::invalid_argument("alpha and beta must be normalized");
    }
    static const InjectionPatch patch;
    size_t q5 = patch.index(5);
    InjectionResult res{patch.code_state(), +1, +1, {}};
    StateVector &s = res.state;

    res.m_x = s.measure_pauli(patch.op(Pauli::X, {5}), rng, forced.m_x);
    res.stages.push_back({"measured-x", s});
    if (res.m_x < 0) {
        s.apply_pauli(patch.op(Pauli::Z, {2, 4, 5, 7}));
    }
    res.stages.push_back({"corrected-x", s});

    s.apply(Gate::h(q5));
    s.apply(Gate::unitary(q5, {alpha, -std::conj(beta), beta, std::conj(alpha)}));
    res.stages.push_back({"rotated", s});

    res.m_z = s.measure_pauli(patch.op(Pauli::Z, {2, 4, 5, 7}), rng, forced.m_z);
    res.stages.push_back({"measured-z", s});
    if (res.m_z < 0) {
        s.apply_pauli(patch.op(Pauli::X, {5}));
        s.apply_pauli(patch.op(Pauli::X, {1, 2, 3, 5}));
    }
    res.stages.push_back({"final", s});
    return res;
}

}  // namespace surfsim
