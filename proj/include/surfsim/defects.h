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
#include <optional>
#include <string>
#include <vector>

#include "surfsim/lattice.h"
#include "surfsim/pauli.h"
#include "surfsim/tableau.h"

namespace surfsim {

/// Smooth defects are holes made of faces whose Z stabilizers are no longer measured; rough
/// defects are holes made of vertices whose X stabilizers are no longer measured.
enum class DefectType : uint8_t { Smooth, Rough };
enum class LogicalBasis : uint8_t { Z, X };

/// Faces (smooth) or vertices (rough), each sharing an edge with another one of the set.
using Region = std::vector<Coord>;

struct Defect {
    DefectType type = DefectType::Smooth;
    Region region;
    bool alive = true;
};

/// Double-defect logical qubit. For a smooth qubit X_L is an X chain joining the defects and
/// Z_L a Z ring around one of them; the roles swap for a rough qubit.
struct LogicalQubit {
    DefectType type = DefectType::Smooth;
    std::array<size_t, 2> defects{};
    PauliOperator x;
    PauliOperator z;
    bool alive = true;

    const PauliOperator &op(LogicalBasis b) const { return b == LogicalBasis::Z ? z : x; }
};

/// One defect of a qubit carried along a closed path of regions.
struct BraidSpec {
    size_t which = 0;
    std::vector<Region> path;
};

struct SameTypeCnotPlan {
    std::array<Region, 2> ancilla;      // rough intermediate qubit
    std::array<Region, 2> target_copy;  // fresh smooth qubit that takes over the target
    BraidSpec control;                  // around ancilla defect 0
    BraidSpec target;
    BraidSpec copy;
};

struct SameTypeCnotResult {
    int m_x = +1;  // target measured in X_L
    int m_z = +1;  // ancilla measured in Z_L
};

struct HadamardPlan {
    /// Patch kept by the ring of Z measurements, in current grid coordinates.
    int r0 = 0, r1 = 0, c0 = 0, c1 = 0;
    /// Smooth ancilla defects, in coordinates after the half-spacing relabel.
    std::array<Region, 2> ancilla;
    /// Ancilla defect loop around one rough defect of the converted qubit.
    BraidSpec braid;
};

/// Noiseless tableau model of a surface with defects. The state is a full stabilizer tableau;
/// the code group and the tracked logical operators are kept alongside it.
///
/// Every operation either completes or leaves the lattice unchanged.
class DefectLattice {
   public:
    explicit DefectLattice(PlanarLattice base, uint64_t seed = 1);

    const PlanarLattice &base() const { return base_; }
    size_t num_physical() const { return base_.num_data(); }
    const StabilizerTableau &state() const { return state_; }
    const StabilizerTableau &code() const { return code_; }
    /// Qubits minus independent code stabilizers.
    size_t degrees_of_freedom() const;

    std::vector<size_t> live_qubits() const;
    const LogicalQubit &qubit(size_t id) const;
    const Defect &defect(size_t id) const;
    /// Data qubits taken out of the code (inside a defect), in index order.
    std::vector<size_t> removed_qubits() const;

    /// Product of the stabilizers of a defect region: a Z ring for smooth, an X ring for rough.
    PauliOperator ring(size_t defect) const;

    /// Defaults: |0_L> for smooth qubits and |+_L> for rough ones.
    size_t create_smooth_qubit(const Region &a, const Region &b, LogicalBasis init = LogicalBasis::Z);
    size_t create_rough_qubit(const Region &a, const Region &b, LogicalBasis init = LogicalBasis::X);

    /// Extends the defect over `target` and then shrinks it onto `target`.
    void move_defect(size_t defect, const Region &target);
    /// Moves through every region of `path`, which must end where the defect started. Afterwards
    /// every qubit keeps the logical operators it had before the braid, so the braid acts on the
    /// logical state; watched operators show the transformation.
    void braid(size_t defect, const std::vector<Region> &path);
    /// Smooth control, rough target: CNOT by braiding a control defect around a target defect.
    void braid_cnot(size_t control, size_t target, const BraidSpec &spec);
    /// CNOT between two smooth qubits through a rough ancilla. The target id is kept.
    SameTypeCnotResult same_type_cnot(size_t control, size_t target, const SameTypeCnotPlan &plan);
    /// Logical H on a smooth qubit that is alone on the lattice. Relabels the base lattice by a
    /// half spacing and returns the qubit in smooth form under the same id.
    void transversal_hadamard(size_t qubit, const HadamardPlan &plan);

    int measure_logical(size_t qubit, LogicalBasis b);
    std::optional<int> peek_logical(size_t qubit, LogicalBasis b) const;
    void apply_logical(size_t qubit, LogicalBasis b);
    /// Measures and, on -1, applies the conjugate logical.
    void prepare_logical(size_t qubit, LogicalBasis b);
    /// Measures Z_L (smooth) or X_L (rough), then heals both defects. Returns the outcome.
    int remove_qubit(size_t qubit);

    /// Carries `op` through later operations the way tracked logicals are carried (Heisenberg
    /// picture): its value on the state stays what it was when watched. `op` must commute with
    /// the code group.
    size_t watch(const PauliOperator &op);
    const PauliOperator &watched(size_t id) const;

    /// Applies a Pauli to the state (e.g. a stabilizer product).
    void apply_pauli(const PauliOperator &p);
    /// Equal as logical operators: the product is in the code group with sign +1.
    bool equivalent(const PauliOperator &a, const PauliOperator &b) const;

   private:
    struct Layout {
        std::vector<int32_t> face_owner;    // per Z stabilizer, defect id or -1
        std::vector<int32_t> vertex_owner;  // per X stabilizer
        std::vector<uint8_t> removed;       // per data qubit: 0, 1 = X fixed, 2 = Z fixed
    };

    Layout layout() const;
    std::vector<PauliOperator> target_generators(const Layout &lay) const;
    size_t add_defect(DefectType type, Region region);
    size_t create_qubit(DefectType type, const Region &a, const Region &b, LogicalBasis init);
    void validate_region(DefectType type, const Region &r) const;
    void check_clearance(DefectType type, const Region &r, std::optional<size_t> ignore) const;
    PauliOperator chain(DefectType type, size_t from, size_t to) const;
    size_t install_qubit(DefectType type, size_t da, size_t db);
    int measure_op(const PauliOperator &m);
    std::vector<PauliOperator *> carried_operators();
    void settle();
    void check_qubit(size_t id) const;

    PlanarLattice base_;
    StabilizerTableau state_;
    StabilizerTableau code_;
    std::vector<Defect> defects_;
    std::vector<LogicalQubit> qubits_;
    std::vector<PauliOperator> watched_;
    Rng rng_;
};

/// Single-site path around the rectangle of faces or vertices with corners (r0, c0) and (r1, c1),
/// starting after `start` (on the perimeter) and ending on it. Clockwise.
std::vector<Region> rectangle_loop(int r0, int r1, int c0, int c1, Coord start);

/// Runs a defect script and writes one line per measurement. Lines:
///   lattice W H                     all-smooth base, W x H faces
///   seed S
///   smooth NAME R1 R2 [zero|plus]   regions as r,c;r,c;...
///   rough NAME R1 R2 [zero|plus]
///   move NAME.K REGION
///   braid NAME.K TARGET REGION...   braided CNOT, NAME smooth, TARGET rough
///   braid NAME.K TARGET loop R0 R1 C0 C1 R,C   path from rectangle_loop
///   measure NAME X|Z [expect +1|-1]
///   peek NAME X|Z                   prints +1, -1 or random, no collapse
///   apply NAME X|Z
///   prepare NAME X|Z
///   remove NAME [expect +1|-1]
/// '#' starts a comment. Throws std::runtime_error with the line number on bad input or a
/// failed expectation.
void run_defect_script(std::istream &in, std::ostream &out);

}  // namespace surfsim
