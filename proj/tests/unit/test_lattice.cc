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

#include <algorithm>
#include <array>
#include <random>

#include "doctest.h"
#include "surfsim/lattice.h"
#include "surfsim/tableau.h"

using namespace surfsim;

namespace {

PauliOperator P(const char *s) { return PauliOperator::from_string(s); }

bool has(const std::vector<PauliOperator> &ops, const PauliOperator &p) {
    return std::find(ops.begin(), ops.end(), p) != ops.end();
}

// Minimum weight of `rep` times any product of the given stabilizers.
size_t min_weight_in_class(PauliOperator rep, const std::vector<PauliOperator> &stabs) {
    size_t best = rep.weight();
    for (uint64_t mask = 1; mask < (uint64_t{1} << stabs.size()); mask++) {
        PauliOperator p = rep;
        for (size_t i = 0; i < stabs.size(); i++) {
            if (mask >> i & 1) {
                p.xs() ^= stabs[i].xs();
                p.zs() ^= stabs[i].zs();
            }
        }
        best = std::min(best, p.weight());
    }
    return best;
}

}  // namespace

TEST_CASE("all-smooth 2x2 lattice") {
    auto l = PlanarLattice::all_smooth(2, 2);
    CHECK(l.num_data() == 12);
    auto ops = l.all_stabilizer_operators();
    CHECK(symplectic_rank(ops) == 12);
    CHECK(has(ops, P("XIXIIIIIIIII")));
    CHECK(has(ops, P("ZIZZIZIIIIII")));
    for (Side s : {Side::Top, Side::Bottom, Side::Left, Side::Right}) {
        CHECK(l.boundary(s) == Boundary::Smooth);
    }
}

TEST_CASE("all-smooth qubit count and rank") {
    for (size_t w = 1; w <= 5; w++) {
        for (size_t h = 1; h <= 5; h++) {
            auto l = PlanarLattice::all_smooth(w, h);
            CHECK(l.num_data() == 2 * w * h + w + h);
            CHECK(symplectic_rank(l.all_stabilizer_operators()) == l.num_data());
        }
    }
}

TEST_CASE("distance-d layout encodes one logical qubit") {
    for (size_t d = 2; d <= 9; d++) {
        auto l = PlanarLattice::with_distance(d);
        CHECK(l.num_data() == d * d + (d - 1) * (d - 1));
        CHECK(l.stabilizers(StabKind::Z).size() == d * (d - 1));
        CHECK(l.stabilizers(StabKind::X).size() == d * (d - 1));
        auto ops = l.all_stabilizer_operators();
        CHECK(symplectic_rank(ops) == l.num_data() - 1);
        CHECK(StabilizerTableau::from_generators(l.num_data(), ops).all_commute());
        CHECK(l.boundary(Side::Top) == Boundary::Smooth);
        CHECK(l.boundary(Side::Bottom) == Boundary::Smooth);
        CHECK(l.boundary(Side::Left) == Boundary::Rough);
        CHECK(l.boundary(Side::Right) == Boundary::Rough);
        auto zl = l.logical_z();
        auto xl = l.logical_x();
        CHECK(zl.weight() == d);
        CHECK(xl.weight() == d);
        CHECK(l.distance() == d);
        CHECK_FALSE(zl.commutes_with(xl));
        for (const auto &s : ops) {
            CHECK(s.commutes_with(zl));
            CHECK(s.commutes_with(xl));
        }
        // Logicals are not stabilizers.
        auto with_zl = ops;
        with_zl.push_back(zl);
        CHECK(symplectic_rank(with_zl) == l.num_data());
    }
}

TEST_CASE("boundary stabilizers have three terms") {
    auto l = PlanarLattice::with_distance(5);
    for (StabKind k : {StabKind::Z, StabKind::X}) {
        for (const auto &s : l.stabilizers(k)) {
            bool edge = k == StabKind::Z ? (s.pos.c == l.c0() || s.pos.c == l.c1())
                                         : (s.pos.r == l.r0() || s.pos.r == l.r1());
            CHECK(s.support.size() == (edge ? 3u : 4u));
        }
    }
}

TEST_CASE("logical Z has minimum weight d over its class") {
    for (size_t d : {2, 3, 4}) {
        auto l = PlanarLattice::with_distance(d);
        std::vector<PauliOperator> z_stabs;
        for (size_t i = 0; i < l.stabilizers(StabKind::Z).size(); i++) {
            z_stabs.push_back(l.stabilizer_operator(StabKind::Z, i));
        }
        CHECK(min_weight_in_class(l.logical_z(), z_stabs) == d);
        std::vector<PauliOperator> x_stabs;
        for (size_t i = 0; i < l.stabilizers(StabKind::X).size(); i++) {
            x_stabs.push_back(l.stabilizer_operator(StabKind::X, i));
        }
        CHECK(min_weight_in_class(l.logical_x(), x_stabs) == d);
    }
}

TEST_CASE("schedule CNOT counts and validity") {
    auto l = PlanarLattice::with_distance(3);
    auto s = build_schedule(l);
    for (StabKind k : {StabKind::Z, StabKind::X}) {
        for (size_t i = 0; i < l.stabilizers(k).size(); i++) {
            CHECK(s.cnots_for(k, i) == l.stabilizers(k)[i].support.size());
        }
    }
    for (size_t d = 2; d <= 9; d++) {
        auto ld = PlanarLattice::with_distance(d);
        auto sd = build_schedule(ld);
        CHECK(sd.same_step_conflicts(ld) == 0);
        CHECK(sd.ordering_violations() == 0);
    }
}

namespace {

// Runs the extraction circuit on a random code state with a tableau; true iff every ancilla
// outcome is deterministic and equals the stabilizer sign.
bool circuit_measures_stabilizers(const PlanarLattice &l, const ExtractionSchedule &sched, Rng &rng) {
    size_t nd = l.num_data();
    size_t nz = l.stabilizers(StabKind::Z).size();
    size_t nx = l.stabilizers(StabKind::X).size();
    size_t n = nd + nz + nx;
    auto anc = [&](StabKind k, size_t i) { return nd + (k == StabKind::Z ? i : nz + i); };
    auto widen = [&](const PauliOperator &p) {
        PauliOperator w(n);
        w.set_negative(p.negative());
        for (size_t q = 0; q < nd; q++) {
            w.set(q, p.get(q));
        }
        return w;
    };
    StabilizerTableau t(n);
    for (const auto &op : l.all_stabilizer_operators()) {
        t.measure(widen(op), rng);
    }
    std::vector<int> expected;
    for (const auto &op : l.all_stabilizer_operators()) {
        expected.push_back(*t.peek(widen(op)));
    }
    for (size_t i = 0; i < nx; i++) {
        t.apply(CliffordGate::h(anc(StabKind::X, i)));
    }
    for (const auto &layer : sched.layers) {
        for (const auto &g : layer) {
            size_t a = anc(g.kind, g.stabilizer);
            t.apply(g.kind == StabKind::Z ? CliffordGate::cnot(g.data, a) : CliffordGate::cnot(a, g.data));
        }
    }
    for (size_t i = 0; i < nx; i++) {
        t.apply(CliffordGate::h(anc(StabKind::X, i)));
    }
    bool ok = true;
    size_t idx = 0;
    for (StabKind k : {StabKind::Z, StabKind::X}) {
        for (size_t i = 0; i < l.stabilizers(k).size(); i++, idx++) {
            auto r = t.measure(PauliOperator::single(n, anc(k, i), Pauli::Z), rng);
            ok = ok && r.deterministic && r.outcome == expected[idx];
        }
    }
    return ok;
}

}  // namespace

TEST_CASE("extraction circuit measures the stabilizers exactly") {
    Rng rng(5);
    for (size_t d : {2, 3, 4}) {
        auto l = PlanarLattice::with_distance(d);
        auto sched = build_schedule(l);
        for (int trial = 0; trial < 10; trial++) {
            CHECK(circuit_measures_stabilizers(l, sched, rng));
        }
    }
}

TEST_CASE("ordering check agrees with circuit simulation for every X layer order") {
    Rng rng(6);
    auto l = PlanarLattice::with_distance(3);
    auto s = build_schedule(l);
    std::array<size_t, 4> perm{0, 1, 2, 3};
    size_t bad_orders = 0;
    do {
        ExtractionSchedule alt;
        for (size_t layer = 0; layer < 4; layer++) {
            for (const auto &g : s.layers[layer]) {
                alt.layers[g.kind == StabKind::X ? perm[layer] : layer].push_back(g);
            }
        }
        if (alt.same_step_conflicts(l) != 0) {
            continue;
        }
        bool consistent = alt.ordering_violations() == 0;
        bad_orders += !consistent;
        CHECK(consistent == circuit_measures_stabilizers(l, alt, rng));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(bad_orders > 0);
}

TEST_CASE("chains connect stabilizers and boundaries") {
    auto l = PlanarLattice::with_distance(5);
    for (StabKind k : {StabKind::Z, StabKind::X}) {
        size_t ns = l.stabilizers(k).size();
        Pauli err = k == StabKind::Z ? Pauli::X : Pauli::Z;
        auto syndrome = [&](const std::vector<size_t> &chain) {
            PauliOperator e(l.num_data());
            for (size_t q : chain) {
                e.set(q, err);
            }
            std::vector<size_t> lit;
            for (size_t i = 0; i < ns; i++) {
                if (!e.commutes_with(l.stabilizer_operator(k, i))) {
                    lit.push_back(i);
                }
            }
            return lit;
        };
        for (size_t a = 0; a < ns; a++) {
            for (size_t b = 0; b < ns; b++) {
                auto chain = l.chain_between(k, a, b);
                CHECK(int(chain.size()) == l.stabilizer_distance(k, a, b));
                auto lit = syndrome(chain);
                if (a == b) {
                    CHECK(lit.empty());
                } else {
                    CHECK(lit == std::vector<size_t>{std::min(a, b), std::max(a, b)});
                }
            }
            for (Side s : l.terminating_sides(k)) {
                auto chain = l.chain_to_side(k, a, s);
                CHECK(int(chain.size()) == l.side_distance(k, a, s));
                CHECK(syndrome(chain) == std::vector<size_t>{a});
            }
        }
    }
}

TEST_CASE("debug dump") {
    auto l = PlanarLattice::with_distance(2);
    auto text = l.dump();
    CHECK(text.find("ZoZ") != std::string::npos);
    CHECK(text.find("Z0 (1,1): 0 2 3") != std::string::npos);
}

TEST_CASE("distance below two is rejected") {
    CHECK_THROWS_AS(PlanarLattice::with_distance(1), std::invalid_argument);
}
