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

#include <cstdint>
#include <limits>
#include <random>
#include <utility>

#include "surfsim/pauli.h"
#include "surfsim/tableau.h"

namespace surfsim {

/// Circuit-level error rates: initialization flip, readout flip, memory and two-qubit gate.
struct NoiseParams {
    double p_i = 0;
    double p_r = 0;
    double p_m = 0;
    double p_g = 0;

    /// All four rates set to p.
    static NoiseParams uniform(double p) { return {p, p, p, p}; }
    /// Throws std::invalid_argument unless every rate is in [0, 1].
    void validate() const;
    bool is_zero() const { return p_i == 0 && p_r == 0 && p_m == 0 && p_g == 0; }
};

/// I with probability 1 - p, otherwise X, Y or Z uniformly.
Pauli sample_memory(double p_m, Rng &rng);
/// II with probability 1 - p, otherwise one of the 15 nontrivial pairs uniformly.
std::pair<Pauli, Pauli> sample_two_qubit(double p_g, Rng &rng);
bool sample_flip(double p, Rng &rng);

/// Nontrivial pair number k in [1, 15]: first qubit k & 3, second k >> 2.
inline std::pair<Pauli, Pauli> two_qubit_pauli(uint8_t k) { return {Pauli(k & 3), Pauli(k >> 2)}; }

/// Independent stream for one trial, derived from the master seed and the cell coordinates.
Rng trial_rng(uint64_t master_seed, uint64_t distance, uint64_t p_index, uint64_t trial);

/// Walks a sequence of Bernoulli(p) events by drawing the gaps between successes.
class GeometricSkipper {
   public:
    explicit GeometricSkipper(double p);
    /// Number of failures before the next success; max() when p == 0.
    uint64_t next_gap(Rng &rng);

   private:
    double p_;
    double log_q_;
};

}  // namespace surfsim
