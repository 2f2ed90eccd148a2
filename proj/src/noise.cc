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

#include "surfsim/noise.h"

#include <cmath>
#include <stdexcept>

namespace surfsim {

void NoiseParams::validate() const {
    for (double p : {p_i, p_r, p_m, p_g}) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("noise probability outside [0, 1]");
        }
    }
}

Pauli sample_memory(double p_m, Rng &rng) {
    if (!sample_flip(p_m, rng)) {
        return Pauli::I;
    }
    return Pauli(1 + std::uniform_int_distribution<int>(0, 2)(rng));
}

std::pair<Pauli, Pauli> sample_two_qubit(double p_g, Rng &rng) {
    if (!sample_flip(p_g, rng)) {
        return {Pauli::I, Pauli::I};
    }
    return two_qubit_pauli(uint8_t(std::uniform_int_distribution<int>(1, 15)(rng)));
}

bool sample_flip(double p, Rng &rng) {
    if (p <= 0) {
        return false;
    }
    if (p >= 1) {
        return true;
    }
    return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

Rng trial_rng(uint64_t master_seed, uint64_t distance, uint64_t p_index, uint64_t trial) {
    std::seed_seq seq{uint32_t(master_seed), uint32_t(master_seed >> 32), uint32_t(distance), uint32_t(p_index),
                      uint32_t(trial), uint32_t(trial >> 32)};
    return Rng(seq);
}

GeometricSkipper::GeometricSkipper(double p) : p_(p), log_q_(p > 0 && p < 1 ? std::log1p(-p) : 0) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("probability outside [0, 1]");
    }
}

uint64_t GeometricSkipper::next_gap(Rng &rng) {
    if (p_ <= 0) {
        return std::numeric_limits<uint64_t>::max();
    }
    if (p_ >= 1) {
        return 0;
    }
    // u in (0, 1]
    double u = 1.0 - std::uniform_real_distribution<double>(0, 1)(rng);
    double gap = std::floor(std::log(u) / log_q_);
    if (gap >= 1.8e19) {
        return std::numeric_limits<uint64_t>::max();
    }
    return uint64_t(gap);
}

}  // namespace surfsim
