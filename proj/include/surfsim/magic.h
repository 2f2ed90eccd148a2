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
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surfsim/pauli.h"
#include "surfsim/statevector.h"

namespace surfsim {

using Qubit1 = std::array<cplx, 2>;

enum class DistillCode : uint8_t { Steane7, ReedMuller15 };

/// Direct: the encoder run backwards on the raw input states.
/// Teleported: the encoder prepares |+_L>, every input is consumed by a teleported
/// R_Z(pi/4) on one code qubit, then the decoder runs. Only meaningful for ReedMuller15.
enum class DistillMode : uint8_t { Direct, Teleported };

struct Cnot {
    size_t control;
    size_t target;
    bool operator==(const Cnot &) const = default;
};

/// Encoder of a CSS code on lines 0..n-1. Line i stands for the nonzero vector i + 1 of
/// GF(2)^m: the lines 2^k - 1 are Hadamard controls fanning out over their X stabilizer, and
/// the input line fans out over the even-weight vectors (an X_L avoiding every control).
struct Encoder {
    DistillCode code;
    size_t num_qubits;
    size_t input;
    std::vector<size_t> hadamards;
    std::vector<Cnot> cnots;  // in encoding order, after the Hadamards
    std::vector<size_t> mx;   // measured in X when decoding, in table column order
    std::vector<size_t> mz;

    size_t num_measured() const { return mx.size() + mz.size(); }
    /// X stabilizer generators (weight 4 or 8) and Z stabilizer generators.
    std::vector<PauliOperator> x_stabilizers() const;
    std::vector<PauliOperator> z_stabilizers() const;
};

const Encoder &encoder(DistillCode code);
/// Text listing: header, h, cnot, mx and mz lines.
std::string describe(const Encoder &e);
/// FNV-1a 64 of a text, as 16 hex digits.
std::string checksum(const std::string &text);

void apply_encoder(StateVector &s, const Encoder &e);
void apply_decoder(StateVector &s, const Encoder &e);

/// |Y> = (|0> + i|1>)/sqrt2 and |A> = (|0> + e^{i pi/4}|1>)/sqrt2.
Qubit1 y_state();
Qubit1 a_state();
Qubit1 magic_state(DistillCode code);

/// Measurement pattern: bit k is column k (mx columns first, then mz).
using Pattern = uint32_t;
std::string pattern_string(Pattern p, size_t columns);

struct OutcomeRow {
    Pattern bits;
    double probability;
    Pauli correction;  // applied to the output to reach the magic state
};

/// Patterns possible for perfect inputs, sorted by bits.
struct OutcomeTable {
    DistillCode code;
    DistillMode mode;
    std::vector<OutcomeRow> rows;

    const OutcomeRow *find(Pattern p) const;
};

const OutcomeTable &outcome_table(DistillCode code, DistillMode mode);
/// Prints "probability bits... output" rows with the correction as I, X, Y or Z.
void write_table(std::ostream &out, const OutcomeTable &t);

struct DistillResult {
    bool accepted = false;
    Pattern bits = 0;
    Pauli correction = Pauli::I;
    Qubit1 output{};  // after the correction (meaningless when rejected)
};

DistillResult distill_Y(const std::vector<Qubit1> &inputs, Rng &rng);
DistillResult distill_A(const std::vector<Qubit1> &inputs, Rng &rng, DistillMode mode = DistillMode::Teleported);

enum class RotationAxis : uint8_t { Z, X };

struct RotationResult {
    int outcome = +1;
    bool byproduct = false;  // X (or Z for the X axis) and the opposite angle were applied
};

/// One-shot rotation: consumes `ancilla` (|0> + e^{i theta}|1>)/sqrt2 prepared on qubit
/// `scratch`, which must be |0> and is |0> again afterwards. Applies R(theta) on +1 and
/// X R_Z(-theta) (Z R_X(-theta) for the X axis) on -1. Throws std::invalid_argument unless
/// both ancilla amplitudes have modulus 1/sqrt2.
RotationResult teleported_rotation(StateVector &s, size_t q, size_t scratch, const Qubit1 &ancilla, RotationAxis axis,
                                   Rng &rng, std::optional<int> forced = std::nullopt);

/// Deterministic R(pi/2) or R(pi/4) built from teleported rotations. For pi/2 a failure is
/// fixed with X then Z; for pi/4 a failure is followed by X and a pi/2 attempt with a perfect
/// |Y>, and a second failure by X then Z. `first` replaces the first ancilla. Returns the
/// number of ancillas used.
int rotate_with_fixup(StateVector &s, size_t q, size_t scratch, int quarter_turns, RotationAxis axis, Rng &rng,
                      std::optional<Qubit1> first = std::nullopt, std::array<std::optional<int>, 2> forced = {});

/// Input error model. Twirled: Z (the orthogonal state) with probability p. Depolarizing:
/// X, Y and Z with probability p/3 each.
enum class InputNoise : uint8_t { Twirled, Depolarizing };

/// Pauli error on each input, Pauli::I for a clean one.
using ErrorPattern = std::vector<Pauli>;

/// Exact probabilities for one input error pattern, averaged over the teleport branches.
struct PatternOutcome {
    double accepted = 0;
    double wrong = 0;  // accepted with an output not equal to the magic state
};
PatternOutcome evaluate_errors(DistillCode code, DistillMode mode, const ErrorPattern &errors);

struct ScalingReport {
    DistillCode code;
    DistillMode mode;
    InputNoise noise;
    /// Probability of an accepted wrong output contributed by weight w, divided by p^w.
    std::array<double, 4> coefficient{};
    double p = 0;
    uint64_t trials = 0;
    uint64_t accepted = 0;
    uint64_t wrong = 0;
    /// Monte Carlo rate of accepted wrong outputs divided by p^3, and its standard error.
    double mc_estimate = 0;
    double mc_sigma = 0;
    /// Exhaustive prediction at p: sum over w <= 3 of coefficient[w] p^w (1-p)^(n-w), over p^3.
    double predicted = 0;
    double acceptance_rate() const { return trials ? double(accepted) / double(trials) : 0; }
};

/// Exhaustive weight <= 3 enumeration. Throws std::invalid_argument for Teleported Steane7.
std::array<double, 4> error_coefficients(DistillCode code, DistillMode mode, InputNoise noise);

/// Exhaustive coefficients plus a Monte Carlo run at p. Throws std::invalid_argument unless
/// 0 < p <= 0.05.
ScalingReport error_scaling(DistillCode code, DistillMode mode, InputNoise noise, double p, uint64_t trials,
                            uint64_t seed);

void write_scaling_csv_header(std::ostream &out);
/// code,mode,noise,p,coefficient,mc_estimate,mc_sigma,acceptance_rate
void write_scaling_csv_row(std::ostream &out, const ScalingReport &r);

std::string to_string(DistillCode c);
std::string to_string(DistillMode m);
std::string to_string(InputNoise n);

}  // namespace surfsim
