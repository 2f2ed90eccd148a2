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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfsim/pauli.h"

namespace surfsim {

/// Position on the interleaved grid. Vertices sit at (even, even), faces at (odd, odd) and data
/// qubits on edges where r + c is odd.
struct Coord {
    int r = 0;
    int c = 0;
    bool operator==(const Coord &) const = default;
};

enum class Boundary : uint8_t { Smooth, Rough };
enum class Side : uint8_t { Top, Bottom, Left, Right };

/// Z stabilizers live on faces and detect X errors; X stabilizers live on vertices and detect Z errors.
enum class StabKind : uint8_t { Z, X };

struct Stabilizer {
    StabKind kind;
    Coord pos;
    std::vector<size_t> support;  // data qubit indices
};

/// Planar surface code patch on the rectangle [r0, r1] x [c0, c1] of the interleaved grid.
/// Data qubits and stabilizers are numbered row-major.
class PlanarLattice {
   public:
    PlanarLattice() = default;
    /// Rectangle with the given inclusive bounds. A side is smooth when its coordinate is even.
    PlanarLattice(int r0, int r1, int c0, int c1);

    /// Distance-d code with smooth top/bottom and rough left/right boundaries.
    static PlanarLattice with_distance(size_t d);
    /// w x h faces, every side smooth: 2wh + w + h data qubits.
    static PlanarLattice all_smooth(size_t w, size_t h);

    int r0() const { return r0_; }
    int r1() const { return r1_; }
    int c0() const { return c0_; }
    int c1() const { return c1_; }
    bool contains(Coord p) const { return p.r >= r0_ && p.r <= r1_ && p.c >= c0_ && p.c <= c1_; }
    Boundary boundary(Side s) const;

    size_t num_data() const { return data_.size(); }
    Coord data_coord(size_t q) const { return data_[q]; }
    /// Index of the data qubit at p, if there is one.
    std::optional<size_t> data_at(Coord p) const;

    const std::vector<Stabilizer> &stabilizers(StabKind k) const { return k == StabKind::Z ? z_stabs_ : x_stabs_; }
    std::optional<size_t> stabilizer_at(StabKind k, Coord p) const;
    /// Stabilizer as an operator on the data qubits.
    PauliOperator stabilizer_operator(StabKind k, size_t i) const;
    /// Every Z stabilizer followed by every X stabilizer.
    std::vector<PauliOperator> all_stabilizer_operators() const;

    /// Minimum weight of a logical operator for the two-smooth/two-rough layout.
    size_t distance() const;
    /// Z chain along the top row from the left rough side to the right one.
    std::vector<size_t> logical_z_support() const;
    /// X chain down the leftmost column from the top smooth side to the bottom one.
    std::vector<size_t> logical_x_support() const;
    PauliOperator logical_z() const;
    PauliOperator logical_x() const;

    /// Number of data qubits on a shortest chain joining two stabilizers of the same kind.
    int stabilizer_distance(StabKind k, size_t a, size_t b) const;
    /// Sides where chains detected by stabilizers of kind k can terminate.
    std::vector<Side> terminating_sides(StabKind k) const;
    /// Length of the shortest chain from stabilizer i to side s.
    int side_distance(StabKind k, size_t i, Side s) const;
    /// Closest terminating side (first in Top, Bottom, Left, Right order on ties) and its distance.
    std::pair<Side, int> nearest_boundary(StabKind k, size_t i) const;
    /// Data qubits of a shortest chain between two stabilizers: columns first, then rows.
    std::vector<size_t> chain_between(StabKind k, size_t a, size_t b) const;
    /// Data qubits of the straight chain from stabilizer i to side s.
    std::vector<size_t> chain_to_side(StabKind k, size_t i, Side s) const;

    /// Text grid of qubit roles followed by stabilizer supports.
    std::string dump() const;

   private:
    int r0_ = 0, r1_ = 0, c0_ = 0, c1_ = 0;
    std::vector<Coord> data_;
    std::vector<int32_t> grid_;  // data index per grid cell, -1 elsewhere
    std::vector<Stabilizer> z_stabs_;
    std::vector<Stabilizer> x_stabs_;
    std::vector<int32_t> z_grid_;
    std::vector<int32_t> x_grid_;

    size_t cell(Coord p) const { return size_t(p.r - r0_) * size_t(c1_ - c0_ + 1) + size_t(p.c - c0_); }
};

/// One gate in the extraction circuit. For Z stabilizers the data qubit is the control, for X
/// stabilizers the ancilla is.
struct ScheduledCnot {
    StabKind kind;
    size_t stabilizer;
    size_t data;
};

/// Six steps: ancilla initialization, CNOT layers north, west, east, south, then readout.
struct ExtractionSchedule {
    static constexpr size_t kNumSteps = 6;
    std::array<std::vector<ScheduledCnot>, 4> layers;

    size_t cnots_for(StabKind k, size_t stabilizer) const;
    /// Qubits used twice within one layer (should be zero).
    size_t same_step_conflicts(const PlanarLattice &l) const;
    /// Pairs of overlapping X/Z circuits that do not touch their shared qubits in a consistent
    /// order (should be zero).
    size_t ordering_violations() const;
};

ExtractionSchedule build_schedule(const PlanarLattice &l);

}  // namespace surfsim
