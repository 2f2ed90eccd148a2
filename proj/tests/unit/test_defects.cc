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


#include <random>

#include "doctest.h"
#include "surfsim/defects.h"

using namespace surfsim;

namespace {

constexpr LogicalBasis kZ = LogicalBasis::Z;
constexpr LogicalBasis kX = LogicalBasis::X;

// Smooth qubit with one defect on loops around a rough defect; see the braid tests.
struct BraidSetup {
    DefectLattice dl{PlanarLattice::all_smooth(16, 9)};
    size_t s = 0;
    size_t r = 0;
    PauliOperator xs, zs, xr, zr;

    BraidSetup(LogicalBasis smooth_init, LogicalBasis rough_init, uint64_t seed = 1)
        : dl(PlanarLattice::all_smooth(16, 9), seed) {
        s = dl.create_smooth_qubit({{5, 11}}, {{9, 3}}, smooth_init);
        r = dl.create_rough_qubit({{8, 14}}, {{8, 26}}, rough_init);
        xs = dl.qubit(s).x;
        zs = dl.qubit(s).z;
        xr = dl.qubit(r).x;
        zr = dl.qubit(r).z;
    }
};

// Two different closed paths of the smooth defect at (5, 11) around the rough defect at (8, 14).
BraidSpec tight_loop() { return {0, rectangle_loop(5, 11, 11, 17, {5, 11})}; }
BraidSpec wide_loop() {
    std::vector<Region> path{{{3, 11}}};
    for (auto &r : rectangle_loop(3, 13, 9, 19, {3, 11})) {
        path.push_back(r);
    }
    path.push_back({{5, 11}});
    return {0, path};
}

StabilizerTableau group_of(const DefectLattice &dl, std::vector<PauliOperator> extra) {
    std::vector<PauliOperator> gens = dl.code().generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return StabilizerTableau::from_generators(dl.num_physical(), gens);
}

}  // namespace

TEST_CASE("smooth qubit starts in |0_L>") {
    DefectLattice dl(PlanarLattice::all_smooth(6, 6));
    size_t n_dof = dl.degrees_of_freedom();
    size_t q = dl.create_smooth_qubit({{5, 3}}, {{5, 9}});
    CHECK(dl.degrees_of_freedom() == n_dof + 1);
    CHECK(dl.peek_logical(q, kZ) == 1);
    CHECK_FALSE(dl.peek_logical(q, kX).has_value());
    CHECK(dl.measure_logical(q, kZ) == 1);

    // Rings around either defect are the same logical operator.
    PauliOperator ring_a = dl.ring(dl.qubit(q).defects[0]);
    PauliOperator ring_b = dl.ring(dl.qubit(q).defects[1]);
    CHECK(dl.equivalent(ring_a, ring_b));
    CHECK(dl.state().peek(ring_a) == dl.state().peek(ring_b));

    dl.apply_logical(q, kX);
    CHECK(dl.measure_logical(q, kZ) == -1);
    CHECK(dl.state().peek(ring_a) == -1);
    CHECK(dl.state().peek(ring_b) == -1);
}

TEST_CASE("logical operators of a smooth qubit") {
    DefectLattice dl(PlanarLattice::all_smooth(6, 6));
    size_t q = dl.create_smooth_qubit({{5, 3}}, {{5, 9}});
    const auto &lq = dl.qubit(q);
    CHECK_FALSE(lq.x.commutes_with(lq.z));
    for (const auto &g : dl.code().generators()) {
        CHECK(g.commutes_with(lq.x));
        CHECK(g.commutes_with(lq.z));
    }
    // X_L is an X chain, Z_L a Z operator.
    CHECK_FALSE(lq.x.zs().any());
    CHECK_FALSE(lq.z.xs().any());
}

TEST_CASE("rough qubit starts in |+_L>") {
    DefectLattice dl(PlanarLattice::all_smooth(6, 6));
    size_t before = dl.degrees_of_freedom();
    size_t q = dl.create_rough_qubit({{4, 4}}, {{4, 8}});
    CHECK(dl.degrees_of_freedom() == before + 1);
    CHECK(dl.peek_logical(q, kX) == 1);
    CHECK_FALSE(dl.peek_logical(q, kZ).has_value());
    dl.apply_logical(q, kZ);
    CHECK(dl.measure_logical(q, kX) == -1);
    CHECK(dl.equivalent(dl.ring(dl.qubit(q).defects[0]), dl.ring(dl.qubit(q).defects[1])));
}

TEST_CASE("explicit initial basis") {
    DefectLattice dl(PlanarLattice::all_smooth(8, 8), 5);
    size_t s = dl.create_smooth_qubit({{5, 3}}, {{5, 11}}, kX);
    size_t r = dl.create_rough_qubit({{10, 4}}, {{10, 12}}, kZ);
    CHECK(dl.peek_logical(s, kX) == 1);
    CHECK(dl.peek_logical(r, kZ) == 1);
    CHECK(dl.degrees_of_freedom() == 2);
}

TEST_CASE("large defects remove their interior") {
    DefectLattice dl(PlanarLattice::all_smooth(10, 8), 3);
    Region block{{3, 3}, {3, 5}, {5, 3}, {5, 5}};
    size_t q = dl.create_smooth_qubit(block, {{5, 13}});
    // Four interior qubits measured in X; the vertex they surround is gone.
    CHECK(dl.removed_qubits().size() == 4);
    CHECK(dl.peek_logical(q, kZ) == 1);
    CHECK(dl.degrees_of_freedom() == 1);
    for (size_t k : dl.removed_qubits()) {
        CHECK(dl.state().peek(PauliOperator::single(dl.num_physical(), k, Pauli::X)) == 1);
    }

    size_t r = dl.create_rough_qubit({{12, 4}, {12, 6}}, {{12, 14}});
    CHECK(dl.removed_qubits().size() == 5);
    CHECK(dl.peek_logical(r, kX) == 1);
    CHECK(dl.degrees_of_freedom() == 2);
}

TEST_CASE("creation errors leave the lattice unchanged") {
    DefectLattice dl(PlanarLattice::all_smooth(6, 6));
    size_t q = dl.create_smooth_qubit({{5, 3}}, {{5, 9}});
    StabilizerTableau before = dl.state();
    CHECK_THROWS_AS(dl.create_smooth_qubit({{5, 3}}, {{9, 9}}), std::invalid_argument);   // overlap
    CHECK_THROWS_AS(dl.create_smooth_qubit({{5, 5}}, {{9, 9}}), std::invalid_argument);   // adjacent
    CHECK_THROWS_AS(dl.create_smooth_qubit({{1, 5}}, {{9, 9}}), std::invalid_argument);   // boundary
    CHECK_THROWS_AS(dl.create_smooth_qubit({{4, 4}}, {{9, 9}}), std::invalid_argument);   // not a face
    CHECK_THROWS_AS(dl.create_smooth_qubit({{7, 7}}, {{7, 9}}), std::invalid_argument);   // pair adjacent
    CHECK_THROWS_AS(dl.create_smooth_qubit({{7, 5}, {9, 9}}, {{3, 9}}), std::invalid_argument);  // split
    CHECK_THROWS_AS(dl.create_rough_qubit({{4, 4}}, {{8, 8}}), std::invalid_argument);    // touches (5, 3)
    CHECK_THROWS_AS(dl.create_rough_qubit({{0, 6}}, {{8, 8}}), std::invalid_argument);    // boundary
    CHECK(dl.state().same_group(before));
    CHECK(dl.live_qubits() == std::vector<size_t>{q});
}

TEST_CASE("moving a defect keeps the logical state") {
    SUBCASE("|0_L>") {
        DefectLattice dl(PlanarLattice::all_smooth(8, 8), 11);
        size_t q = dl.create_smooth_qubit({{7, 5}}, {{7, 11}});
        size_t d = dl.qubit(q).defects[0];
        dl.move_defect(d, {{9, 5}});
        CHECK(dl.peek_logical(q, kZ) == 1);
        CHECK(dl.defect(d).region == Region{{9, 5}});
        CHECK(dl.degrees_of_freedom() == 1);
    }
    SUBCASE("|+_L>") {
        DefectLattice dl(PlanarLattice::all_smooth(8, 8), 12);
        size_t q = dl.create_smooth_qubit({{7, 5}}, {{7, 11}}, kX);
        PauliOperator x_before = dl.qubit(q).x;
        dl.move_defect(dl.qubit(q).defects[0], {{5, 5}});
        CHECK(dl.peek_logical(q, kX) == 1);
        // The chain now ends on the moved defect.
        CHECK_FALSE(dl.equivalent(dl.qubit(q).x, x_before));
    }
    SUBCASE("rough |+_L> and |0_L>") {
        DefectLattice dl(PlanarLattice::all_smooth(8, 8), 13);
        size_t a = dl.create_rough_qubit({{6, 4}}, {{6, 12}});
        size_t b = dl.create_rough_qubit({{12, 4}}, {{12, 12}}, kZ);
        dl.move_defect(dl.qubit(a).defects[0], {{8, 4}});
        dl.move_defect(dl.qubit(b).defects[1], {{12, 10}});
        CHECK(dl.peek_logical(a, kX) == 1);
        CHECK(dl.peek_logical(b, kZ) == 1);
    }
}

TEST_CASE("move there and back restores the stabilizer group") {
    for (uint64_t seed = 1; seed <= 5; seed++) {
        DefectLattice dl(PlanarLattice::all_smooth(8, 8), seed);
        size_t q = dl.create_smooth_qubit({{7, 5}}, {{7, 11}}, seed % 2 ? kZ : kX);
        StabilizerTableau original = dl.state();
        size_t d = dl.qubit(q).defects[0];
        dl.move_defect(d, {{7, 5}, {9, 5}});
        dl.move_defect(d, {{11, 5}});
        dl.move_defect(d, {{9, 5}});
        dl.move_defect(d, {{7, 5}});
        CHECK(dl.state().same_group(original));
        CHECK(dl.state().generators() != original.generators());
    }
}

TEST_CASE("move errors") {
    DefectLattice dl(PlanarLattice::all_smooth(8, 8), 4);
    size_t q = dl.create_smooth_qubit({{7, 5}}, {{7, 9}});
    size_t r = dl.create_rough_qubit({{12, 4}}, {{12, 12}});
    StabilizerTableau before = dl.state();
    size_t d = dl.qubit(q).defects[0];
    CHECK_THROWS_AS(dl.move_defect(d, {{3, 3}}), std::invalid_argument);   // not connected
    CHECK_THROWS_AS(dl.move_defect(d, {{7, 7}}), std::invalid_argument);   // pinches the partner
    CHECK_THROWS_AS(dl.move_defect(d, {{11, 5}, {9, 5}}), std::invalid_argument);  // touches (12, 4)
    CHECK_THROWS_AS(dl.move_defect(dl.qubit(r).defects[0], {{12, 6}, {12, 8}, {12, 10}}),
                    std::invalid_argument);
    CHECK(dl.state().same_group(before));
    CHECK(dl.peek_logical(q, kZ) == 1);
}

TEST_CASE("braid requires a closed path") {
    BraidSetup b(kZ, kX);
    auto path = tight_loop().path;
    path.pop_back();
    CHECK_THROWS_AS(b.dl.braid_cnot(b.s, b.r, {0, path}), std::invalid_argument);
    CHECK_THROWS_AS(b.dl.braid_cnot(b.r, b.s, tight_loop()), std::invalid_argument);
}

TEST_CASE("braided CNOT transforms tracked logicals") {
    for (const BraidSpec &spec : {tight_loop(), wide_loop()}) {
        BraidSetup b(kZ, kX);
        size_t xs = b.dl.watch(b.xs), zs = b.dl.watch(b.zs), xr = b.dl.watch(b.xr), zr = b.dl.watch(b.zr);
        b.dl.braid_cnot(b.s, b.r, spec);
        CHECK(b.dl.equivalent(b.dl.watched(xs), b.xs * b.xr));
        CHECK(b.dl.equivalent(b.dl.watched(zs), b.zs));
        CHECK(b.dl.equivalent(b.dl.watched(xr), b.xr));
        CHECK(b.dl.equivalent(b.dl.watched(zr), b.zs * b.zr));
        CHECK_FALSE(b.dl.equivalent(b.dl.watched(xs), b.xs));
        CHECK_FALSE(b.dl.equivalent(b.dl.watched(zr), b.zr));
        // The qubits keep their own logical operators.
        CHECK(b.dl.equivalent(b.dl.qubit(b.s).x, b.xs));
        CHECK(b.dl.equivalent(b.dl.qubit(b.r).z, b.zr));
        CHECK(b.dl.degrees_of_freedom() == 2);
    }
}

TEST_CASE("a move without braiding carries logicals unchanged") {
    BraidSetup b(kZ, kX);
    size_t xs = b.dl.watch(b.xs), zr = b.dl.watch(b.zr);
    size_t d = b.dl.qubit(b.s).defects[0];
    b.dl.move_defect(d, {{5, 9}});
    b.dl.move_defect(d, {{5, 11}});
    CHECK(b.dl.equivalent(b.dl.watched(xs), b.xs));
    CHECK(b.dl.equivalent(b.dl.watched(zr), b.zr));
    CHECK_THROWS_AS(b.dl.watch(PauliOperator::single(b.dl.num_physical(), 0, Pauli::X)), std::invalid_argument);
}

TEST_CASE("braid end states") {
    SUBCASE("smooth and rough in |+_L>") {
        BraidSetup b(kX, kX, 21);
        b.dl.braid_cnot(b.s, b.r, tight_loop());
        CHECK(b.dl.state().same_group(group_of(b.dl, {b.xs, b.xr})));
    }
    SUBCASE("smooth and rough in |0_L>") {
        BraidSetup b(kZ, kZ, 22);
        b.dl.braid_cnot(b.s, b.r, wide_loop());
        CHECK(b.dl.state().same_group(group_of(b.dl, {b.zs, b.zs * b.zr})));
    }
    SUBCASE("rough X_L eigenstate is unchanged") {
        BraidSetup b(kZ, kX, 23);
        b.dl.apply_logical(b.r, kZ);
        b.dl.braid_cnot(b.s, b.r, tight_loop());
        CHECK(b.dl.state().peek(b.xr) == -1);
        CHECK(b.dl.state().peek(b.zs) == 1);
    }
}

TEST_CASE("stabilizer products before a braid change nothing") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 3; trial++) {
        BraidSetup plain(kX, kZ, 30 + trial);
        BraidSetup noisy(kX, kZ, 30 + trial);
        PauliOperator product(noisy.dl.num_physical());
        for (const auto &g : noisy.dl.code().generators()) {
            if (rng() & 1) {
                product *= g;
            }
        }
        noisy.dl.apply_pauli(product);
        plain.dl.braid_cnot(plain.s, plain.r, tight_loop());
        noisy.dl.braid_cnot(noisy.s, noisy.r, tight_loop());
        // |+>|0> -> Bell pair; both copies agree on every deterministic outcome.
        for (const auto &op : {plain.xs * plain.xr, plain.zs * plain.zr}) {
            CHECK(plain.dl.state().peek(op) == 1);
            CHECK(noisy.dl.state().peek(op) == 1);
        }
        CHECK(noisy.dl.measure_logical(noisy.s, kZ) == noisy.dl.measure_logical(noisy.r, kZ));
    }
}

TEST_CASE("remove heals the defects") {
    DefectLattice dl(PlanarLattice::all_smooth(6, 6), 8);
    StabilizerTableau clean = dl.state();
    size_t q = dl.create_smooth_qubit({{5, 3}}, {{5, 9}}, kX);
    dl.remove_qubit(q);
    CHECK(dl.state().same_group(clean));
    CHECK(dl.live_qubits().empty());
    CHECK(dl.degrees_of_freedom() == 0);
    CHECK_THROWS_AS(dl.measure_logical(q, kZ), std::out_of_range);
}

namespace {

// Control c, target t (both smooth), rough ancilla a at (10, 10) / (10, 30).
struct CnotSetup {
    DefectLattice dl;
    size_t c = 0;
    size_t t = 0;
    SameTypeCnotPlan plan;

    explicit CnotSetup(uint64_t seed) : dl(PlanarLattice::all_smooth(18, 10), seed) {
        c = dl.create_smooth_qubit({{7, 7}}, {{17, 23}});
        t = dl.create_smooth_qubit({{7, 27}}, {{3, 23}});
        plan.ancilla = {Region{{10, 10}}, Region{{10, 30}}};
        plan.target_copy = {Region{{3, 3}}, Region{{9, 21}}};
        plan.control = {0, rectangle_loop(7, 13, 7, 13, {7, 7})};
        plan.target = {0, rectangle_loop(7, 13, 27, 33, {7, 27})};
        plan.copy = {0, rectangle_loop(3, 17, 3, 17, {3, 3})};
    }
};

}  // namespace

TEST_CASE("same-type CNOT truth table") {
    for (int bits = 0; bits < 4; bits++) {
        CnotSetup s(40 + bits);
        if (bits & 1) s.dl.apply_logical(s.c, kX);
        if (bits & 2) s.dl.apply_logical(s.t, kX);
        s.dl.same_type_cnot(s.c, s.t, s.plan);
        int c = bits & 1, t = (bits >> 1) ^ c;
        CHECK(s.dl.peek_logical(s.c, kZ) == (c ? -1 : 1));
        CHECK(s.dl.peek_logical(s.t, kZ) == (t ? -1 : 1));
        CHECK(s.dl.live_qubits() == std::vector<size_t>{s.c, s.t});
        CHECK(s.dl.degrees_of_freedom() == 2);
    }
}

TEST_CASE("same-type CNOT conjugation relations") {
    struct Relation {
        LogicalBasis c_in, t_in;       // prepared eigenstate (the other qubit random)
        bool on_control;               // which input operator is checked
        bool image_c, image_t;         // X or Z image support
    };
    // X(x)I -> X(x)X, I(x)X -> I(x)X, Z(x)I -> Z(x)I, I(x)Z -> Z(x)Z
    uint64_t seed = 60;
    for (int rel = 0; rel < 4; rel++) {
        for (int sign : {+1, -1}) {
            CnotSetup s(seed++);
            LogicalBasis b = rel < 2 ? kX : kZ;
            bool on_control = rel % 2 == 0;
            size_t prepared = on_control ? s.c : s.t;
            size_t spectator = on_control ? s.t : s.c;
            s.dl.prepare_logical(prepared, b);
            s.dl.prepare_logical(spectator, b == kX ? kZ : kX);
            if (sign < 0) s.dl.apply_logical(prepared, b == kX ? kZ : kX);
            s.dl.same_type_cnot(s.c, s.t, s.plan);
            const auto &c = s.dl.qubit(s.c);
            const auto &t = s.dl.qubit(s.t);
            PauliOperator image = rel == 0 ? c.x * t.x : rel == 1 ? t.x : rel == 2 ? c.z : c.z * t.z;
            CHECK(s.dl.state().peek(image) == sign);
        }
    }
}

TEST_CASE("same-type CNOT makes a Bell pair") {
    CnotSetup s(77);
    s.dl.prepare_logical(s.c, kX);
    s.dl.same_type_cnot(s.c, s.t, s.plan);
    const auto &c = s.dl.qubit(s.c);
    const auto &t = s.dl.qubit(s.t);
    CHECK(s.dl.state().same_group(group_of(s.dl, {c.x * t.x, c.z * t.z})));
}

namespace {

// Qubit with defects at (9, 9) and (9, 19); plans for two successive logical Hadamards.
HadamardPlan first_hadamard() {
    HadamardPlan p;
    p.r0 = 4, p.r1 = 14, p.c0 = 4, p.c1 = 24;
    p.ancilla = {Region{{7, 7}}, Region{{19, 19}}};
    p.braid = {0, rectangle_loop(7, 13, 7, 13, {7, 7})};
    return p;
}

HadamardPlan second_hadamard() {
    HadamardPlan p;
    p.r0 = 4, p.r1 = 22, p.c0 = 4, p.c1 = 26;
    p.ancilla = {Region{{11, 11}}, Region{{11, 21}}};
    p.braid = {0, rectangle_loop(5, 11, 5, 11, {11, 11})};
    return p;
}

}  // namespace

TEST_CASE("transversal Hadamard") {
    SUBCASE("|0_L> -> |+_L>") {
        DefectLattice dl(PlanarLattice::all_smooth(14, 12), 3);
        size_t q = dl.create_smooth_qubit({{9, 9}}, {{9, 19}});
        dl.transversal_hadamard(q, first_hadamard());
        CHECK(dl.qubit(q).type == DefectType::Smooth);
        CHECK(dl.peek_logical(q, kX) == 1);
        CHECK(dl.base().r0() == 1);
        CHECK(dl.degrees_of_freedom() == 1);
    }
    SUBCASE("|+_L> -> |0_L>") {
        DefectLattice dl(PlanarLattice::all_smooth(14, 12), 4);
        size_t q = dl.create_smooth_qubit({{9, 9}}, {{9, 19}}, kX);
        dl.transversal_hadamard(q, first_hadamard());
        CHECK(dl.peek_logical(q, kZ) == 1);
    }
    SUBCASE("|1_L> -> |-_L>") {
        DefectLattice dl(PlanarLattice::all_smooth(14, 12), 5);
        size_t q = dl.create_smooth_qubit({{9, 9}}, {{9, 19}});
        dl.apply_logical(q, kX);
        dl.transversal_hadamard(q, first_hadamard());
        CHECK(dl.peek_logical(q, kX) == -1);
    }
    SUBCASE("H twice is the identity") {
        DefectLattice dl(PlanarLattice::all_smooth(14, 12), 6);
        size_t q = dl.create_smooth_qubit({{9, 9}}, {{9, 19}});
        StabilizerTableau original = dl.state();
        dl.transversal_hadamard(q, first_hadamard());
        dl.transversal_hadamard(q, second_hadamard());
        CHECK(dl.base().r0() == 2);
        CHECK(dl.state().same_group(original));
    }
}

TEST_CASE("transversal Hadamard errors") {
    DefectLattice dl(PlanarLattice::all_smooth(14, 12), 7);
    size_t q = dl.create_smooth_qubit({{9, 9}}, {{9, 19}});
    HadamardPlan tight = first_hadamard();
    tight.c1 = 18;  // ring runs through the second defect
    CHECK_THROWS_AS(dl.transversal_hadamard(q, tight), std::invalid_argument);
    size_t r = dl.create_rough_qubit({{18, 6}}, {{18, 20}});
    CHECK_THROWS_AS(dl.transversal_hadamard(q, first_hadamard()), std::invalid_argument);
    CHECK_THROWS_AS(dl.transversal_hadamard(r, first_hadamard()), std::invalid_argument);
    CHECK(dl.peek_logical(q, kZ) == 1);
}
