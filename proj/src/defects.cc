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


#include "surfsim/defects.h"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace surfsim {
namespace {

constexpr std::array<Coord, 4> kSteps{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};

Coord add(Coord a, Coord b) { return {a.r + b.r, a.c + b.c}; }
Coord twice(Coord s) { return {2 * s.r, 2 * s.c}; }

StabKind kind_of(DefectType t) { return t == DefectType::Smooth ? StabKind::Z : StabKind::X; }
Pauli pauli_of(StabKind k) { return k == StabKind::Z ? Pauli::Z : Pauli::X; }
LogicalBasis natural_basis(DefectType t) { return t == DefectType::Smooth ? LogicalBasis::Z : LogicalBasis::X; }
LogicalBasis other(LogicalBasis b) { return b == LogicalBasis::Z ? LogicalBasis::X : LogicalBasis::Z; }

// x bits then z bits
BitVector pack(const PauliOperator &p) {
    size_t n = p.num_qubits();
    BitVector v(2 * n);
    for (size_t q = 0; q < n; q++) {
        v.set(q, p.x(q));
        v.set(n + q, p.z(q));
    }
    return v;
}

std::optional<size_t> first_set(const BitVector &v) {
    for (size_t w = 0; w < v.num_words(); w++) {
        if (v.words()[w]) {
            return w * 64 + size_t(std::countr_zero(v.words()[w]));
        }
    }
    return std::nullopt;
}

class Gf2Basis {
   public:
    bool insert(BitVector v) {
        for (size_t i = 0; i < rows_.size(); i++) {
            if (v[pivots_[i]]) {
                v ^= rows_[i];
            }
        }
        auto p = first_set(v);
        if (!p) {
            return false;
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(*p);
        return true;
    }

   private:
    std::vector<BitVector> rows_;
    std::vector<size_t> pivots_;
};

// A Pauli whose commutation parity with ops[k] is rhs[k], or nullopt if none exists.
std::optional<PauliOperator> solve_commutation(const std::vector<PauliOperator> &ops, const std::vector<uint8_t> &rhs,
                                               size_t n) {
    size_t cols = 2 * n;
    std::vector<BitVector> rows;
    rows.reserve(ops.size());
    for (size_t k = 0; k < ops.size(); k++) {
        BitVector row(cols + 1);
        for (size_t q = 0; q < n; q++) {
            row.set(q, ops[k].z(q));
            row.set(n + q, ops[k].x(q));
        }
        row.set(cols, rhs[k]);
        rows.push_back(std::move(row));
    }
    std::vector<size_t> pivot_col;
    size_t next = 0;
    for (size_t col = 0; col < cols && next < rows.size(); col++) {
        size_t p = next;
        while (p < rows.size() && !rows[p][col]) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[next]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r][col]) {
                rows[r] ^= rows[next];
            }
        }
        pivot_col.push_back(col);
        next++;
    }
    for (size_t r = next; r < rows.size(); r++) {
        if (rows[r][cols]) {
            return std::nullopt;
        }
    }
    PauliOperator c(n);
    for (size_t r = 0; r < next; r++) {
        if (!rows[r][cols]) {
            continue;
        }
        size_t col = pivot_col[r];
        if (col < n) {
            c.xs().set(col, true);
        } else {
            c.zs().set(col - n, true);
        }
    }
    return c;
}

std::string unsigned_key(const PauliOperator &p) {
    PauliOperator u = p;
    u.set_negative(false);
    return u.str();
}

bool same_set(Region a, Region b) {
    auto less = [](Coord x, Coord y) { return std::pair(x.r, x.c) < std::pair(y.r, y.c); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

bool connected(const Region &r) {
    if (r.empty()) {
        return false;
    }
    std::vector<uint8_t> seen(r.size(), 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        Coord p = r[stack.back()];
        stack.pop_back();
        for (size_t j = 0; j < r.size(); j++) {
            int dr = std::abs(r[j].r - p.r), dc = std::abs(r[j].c - p.c);
            if (!seen[j] && dr + dc == 2 && (dr == 0 || dc == 0)) {
                seen[j] = 1;
                count++;
                stack.push_back(j);
            }
        }
    }
    return count == r.size();
}

// Empty when the two regions may coexist.
std::string too_close(DefectType ta, const Region &ra, DefectType tb, const Region &rb) {
    for (Coord x : ra) {
        for (Coord y : rb) {
            int dr = std::abs(x.r - y.r), dc = std::abs(x.c - y.c);
            if (ta == tb) {
                if (dr == 0 && dc == 0) {
                    return "defect regions overlap";
                }
                if (dr + dc == 2 && (dr == 0 || dc == 0)) {
                    return "defect regions are adjacent";
                }
            } else if (dr == 1 && dc == 1) {
                return "smooth and rough defect regions touch";
            }
        }
    }
    return {};
}

PauliOperator hadamard_image(const PauliOperator &p) {
    PauliOperator out(p.num_qubits());
    size_t ys = 0;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        out.xs().set(q, p.z(q));
        out.zs().set(q, p.x(q));
        ys += p.x(q) && p.z(q);
    }
    out.set_negative(p.negative() != bool(ys & 1));
    return out;
}

}  // namespace

DefectLattice::DefectLattice(PlanarLattice base, uint64_t seed) : base_(std::move(base)), rng_(seed) {
    size_t n = base_.num_data();
    Gf2Basis basis;
    std::vector<PauliOperator> gens;
    for (auto &op : base_.all_stabilizer_operators()) {
        if (basis.insert(pack(op))) {
            gens.push_back(std::move(op));
        }
    }
    code_ = StabilizerTableau::from_generators(n, gens);
    if (gens.size() < n) {
        gens.push_back(base_.logical_z());
    }
    if (gens.size() != n) {
        throw std::invalid_argument("base lattice must encode at most one logical qubit");
    }
    state_ = StabilizerTableau::from_generators(n, std::move(gens));
}

size_t DefectLattice::degrees_of_freedom() const { return num_physical() - code_.rank(); }

std::vector<size_t> DefectLattice::live_qubits() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < qubits_.size(); i++) {
        if (qubits_[i].alive) {
            out.push_back(i);
        }
    }
    return out;
}

void DefectLattice::check_qubit(size_t id) const {
    if (id >= qubits_.size() || !qubits_[id].alive) {
        throw std::out_of_range("no such logical qubit");
    }
}

const LogicalQubit &DefectLattice::qubit(size_t id) const {
    check_qubit(id);
    return qubits_[id];
}

const Defect &DefectLattice::defect(size_t id) const {
    if (id >= defects_.size()) {
        throw std::out_of_range("no such defect");
    }
    return defects_[id];
}

std::vector<size_t> DefectLattice::removed_qubits() const {
    Layout lay = layout();
    std::vector<size_t> out;
    for (size_t q = 0; q < lay.removed.size(); q++) {
        if (lay.removed[q]) {
            out.push_back(q);
        }
    }
    return out;
}

DefectLattice::Layout DefectLattice::layout() const {
    Layout lay;
    lay.face_owner.assign(base_.stabilizers(StabKind::Z).size(), -1);
    lay.vertex_owner.assign(base_.stabilizers(StabKind::X).size(), -1);
    lay.removed.assign(num_physical(), 0);
    for (size_t d = 0; d < defects_.size(); d++) {
        if (!defects_[d].alive) {
            continue;
        }
        StabKind k = kind_of(defects_[d].type);
        auto &owner = k == StabKind::Z ? lay.face_owner : lay.vertex_owner;
        for (Coord p : defects_[d].region) {
            owner[*base_.stabilizer_at(k, p)] = int32_t(d);
        }
    }
    auto owner_at = [&](StabKind k, Coord p) -> int32_t {
        auto i = base_.stabilizer_at(k, p);
        if (!i) {
            return -1;
        }
        return (k == StabKind::Z ? lay.face_owner : lay.vertex_owner)[*i];
    };
    for (size_t q = 0; q < num_physical(); q++) {
        Coord p = base_.data_coord(q);
        Coord across = (p.r & 1) ? Coord{0, 1} : Coord{1, 0};
        Coord along = (p.r & 1) ? Coord{1, 0} : Coord{0, 1};
        int32_t f0 = owner_at(StabKind::Z, {p.r - across.r, p.c - across.c});
        int32_t f1 = owner_at(StabKind::Z, add(p, across));
        int32_t v0 = owner_at(StabKind::X, {p.r - along.r, p.c - along.c});
        int32_t v1 = owner_at(StabKind::X, add(p, along));
        if (f0 >= 0 && f0 == f1) {
            lay.removed[q] = 1;
        } else if (v0 >= 0 && v0 == v1) {
            lay.removed[q] = 2;
        }
    }
    return lay;
}

PauliOperator DefectLattice::ring(size_t defect) const {
    const Defect &d = this->defect(defect);
    StabKind k = kind_of(d.type);
    PauliOperator out(num_physical());
    for (Coord p : d.region) {
        for (size_t q : base_.stabilizers(k)[*base_.stabilizer_at(k, p)].support) {
            (k == StabKind::Z ? out.zs() : out.xs()).flip(q);
        }
    }
    return out;
}

std::vector<PauliOperator> DefectLattice::target_generators(const Layout &lay) const {
    size_t n = num_physical();
    std::vector<PauliOperator> all;
    for (size_t q = 0; q < n; q++) {
        if (lay.removed[q]) {
            all.push_back(PauliOperator::single(n, q, lay.removed[q] == 1 ? Pauli::X : Pauli::Z));
        }
    }
    for (StabKind k : {StabKind::Z, StabKind::X}) {
        const auto &owner = k == StabKind::Z ? lay.face_owner : lay.vertex_owner;
        const auto &stabs = base_.stabilizers(k);
        for (size_t i = 0; i < stabs.size(); i++) {
            if (owner[i] >= 0) {
                continue;
            }
            PauliOperator op(n);
            for (size_t q : stabs[i].support) {
                if (!lay.removed[q]) {
                    op.set(q, pauli_of(k));
                }
            }
            if (!op.is_identity()) {
                all.push_back(std::move(op));
            }
        }
    }
    for (const auto &lq : qubits_) {
        if (lq.alive) {
            all.push_back(ring(lq.defects[0]) * ring(lq.defects[1]));
        }
    }
    Gf2Basis basis;
    std::vector<PauliOperator> out;
    for (auto &op : all) {
        if (basis.insert(pack(op))) {
            out.push_back(std::move(op));
        }
    }
    return out;
}

int DefectLattice::measure_op(const PauliOperator &m) {
    const auto &gens = code_.generators();
    std::optional<size_t> pivot;
    for (size_t g = 0; g < gens.size(); g++) {
        if (!gens[g].commutes_with(m)) {
            pivot = g;
            break;
        }
    }
    std::vector<PauliOperator *> carried = carried_operators();
    if (!pivot) {
        for (const PauliOperator *l : carried) {
            if (!l->commutes_with(m)) {
                throw std::invalid_argument("operation would measure a logical operator");
            }
        }
    }
    int outcome = state_.measure(m, rng_).outcome;
    if (pivot) {
        PauliOperator g = gens[*pivot];
        for (PauliOperator *l : carried) {
            if (!l->commutes_with(m)) {
                *l *= g;
            }
        }
        code_.measure(m, rng_, outcome);
    } else if (!code_.peek(m)) {
        code_.measure(m, rng_, outcome);
    }
    return outcome;
}

std::vector<PauliOperator *> DefectLattice::carried_operators() {
    std::vector<PauliOperator *> out;
    for (auto &lq : qubits_) {
        if (lq.alive) {
            out.push_back(&lq.x);
            out.push_back(&lq.z);
        }
    }
    for (auto &w : watched_) {
        out.push_back(&w);
    }
    return out;
}

void DefectLattice::settle() {
    size_t n = num_physical();
    std::vector<PauliOperator> target = target_generators(layout());
    std::unordered_set<std::string> known;
    for (const auto &g : code_.generators()) {
        known.insert(unsigned_key(g));
    }
    std::vector<PauliOperator> constraints;
    std::vector<uint8_t> flip;
    bool any = false;
    for (const auto &t : target) {
        bool negative = !known.contains(unsigned_key(t)) && measure_op(t) < 0;
        any = any || negative;
        constraints.push_back(t);
        flip.push_back(negative);
    }
    std::vector<PauliOperator *> carried = carried_operators();
    if (any) {
        for (const PauliOperator *l : carried) {
            constraints.push_back(*l);
            flip.push_back(0);
        }
        auto c = solve_commutation(constraints, flip, n);
        if (!c) {
            throw std::logic_error("no sign correction exists");
        }
        state_.apply_pauli(*c);
    }
    code_ = StabilizerTableau::from_generators(n, std::move(target));
    std::vector<PauliOperator> ops;
    for (const PauliOperator *l : carried) {
        ops.push_back(*l);
    }
    ops = code_.reduce(std::move(ops));
    for (size_t i = 0; i < carried.size(); i++) {
        *carried[i] = std::move(ops[i]);
    }
}

size_t DefectLattice::add_defect(DefectType type, Region region) {
    defects_.push_back({type, std::move(region), true});
    return defects_.size() - 1;
}

void DefectLattice::validate_region(DefectType type, const Region &r) const {
    if (r.empty()) {
        throw std::invalid_argument("empty defect region");
    }
    StabKind k = kind_of(type);
    for (size_t i = 0; i < r.size(); i++) {
        if (!base_.stabilizer_at(k, r[i])) {
            throw std::invalid_argument(type == DefectType::Smooth ? "smooth region entry is not a face"
                                                                   : "rough region entry is not a vertex");
        }
        for (size_t j = 0; j < i; j++) {
            if (r[j] == r[i]) {
                throw std::invalid_argument("duplicate region entry");
            }
        }
        for (Coord s : kSteps) {
            if (!base_.data_at(add(r[i], s)) || !base_.stabilizer_at(k, add(r[i], twice(s)))) {
                throw std::invalid_argument("defect region touches the lattice boundary");
            }
        }
    }
    if (!connected(r)) {
        throw std::invalid_argument("defect region is not connected");
    }
}

void DefectLattice::check_clearance(DefectType type, const Region &r, std::optional<size_t> ignore) const {
    for (size_t d = 0; d < defects_.size(); d++) {
        if (!defects_[d].alive || (ignore && d == *ignore)) {
            continue;
        }
        std::string why = too_close(type, r, defects_[d].type, defects_[d].region);
        if (!why.empty()) {
            throw std::invalid_argument(why);
        }
    }
}

PauliOperator DefectLattice::chain(DefectType type, size_t from, size_t to) const {
    StabKind k = kind_of(type);
    Layout lay = layout();
    const auto &owner = k == StabKind::Z ? lay.face_owner : lay.vertex_owner;
    const auto &stabs = base_.stabilizers(k);
    std::vector<int64_t> via(stabs.size(), -1);  // data qubit used to enter
    std::vector<int64_t> parent(stabs.size(), -1);
    std::vector<uint8_t> seen(stabs.size(), 0);
    std::queue<size_t> frontier;
    for (size_t i = 0; i < stabs.size(); i++) {
        if (owner[i] == int32_t(from)) {
            seen[i] = 1;
            frontier.push(i);
        }
    }
    while (!frontier.empty()) {
        size_t i = frontier.front();
        frontier.pop();
        if (owner[i] == int32_t(to)) {
            PauliOperator out(num_physical());
            for (size_t j = i; via[j] >= 0; j = size_t(parent[j])) {
                out.set(size_t(via[j]), k == StabKind::Z ? Pauli::X : Pauli::Z);
            }
            return out;
        }
        for (Coord s : kSteps) {
            auto q = base_.data_at(add(stabs[i].pos, s));
            auto j = base_.stabilizer_at(k, add(stabs[i].pos, twice(s)));
            if (!q || !j || lay.removed[*q] || seen[*j] || (owner[*j] >= 0 && owner[*j] != int32_t(to))) {
                continue;
            }
            seen[*j] = 1;
            via[*j] = int64_t(*q);
            parent[*j] = int64_t(i);
            frontier.push(*j);
        }
    }
    throw std::invalid_argument("no chain joins the two defects");
}

size_t DefectLattice::install_qubit(DefectType type, size_t da, size_t db) {
    LogicalQubit lq;
    lq.type = type;
    lq.defects = {da, db};
    PauliOperator r = ring(da);
    PauliOperator c = chain(type, da, db);
    for (const auto &other : qubits_) {
        if (!other.alive) {
            continue;
        }
        if (!r.commutes_with(other.x) || !r.commutes_with(other.z)) {
            throw std::logic_error("defect ring crosses another logical operator");
        }
        if (!c.commutes_with(other.z)) {
            c *= other.x;
        }
        if (!c.commutes_with(other.x)) {
            c *= other.z;
        }
    }
    if (c.commutes_with(r)) {
        throw std::logic_error("logical operators of a new qubit commute");
    }
    lq.x = type == DefectType::Smooth ? c : r;
    lq.z = type == DefectType::Smooth ? r : c;
    qubits_.push_back(std::move(lq));
    return qubits_.size() - 1;
}

size_t DefectLattice::create_qubit(DefectType type, const Region &a, const Region &b, LogicalBasis init) {
    validate_region(type, a);
    validate_region(type, b);
    std::string why = too_close(type, a, type, b);
    if (!why.empty()) {
        throw std::invalid_argument(why);
    }
    check_clearance(type, a, std::nullopt);
    check_clearance(type, b, std::nullopt);

    DefectLattice next = *this;
    size_t da = next.add_defect(type, a);
    size_t db = next.add_defect(type, b);
    size_t id = next.install_qubit(type, da, db);
    next.settle();
    LogicalBasis natural = natural_basis(type);
    if (next.peek_logical(id, natural) != 1) {
        throw std::logic_error("new qubit is not in its default state");
    }
    if (init != natural) {
        next.prepare_logical(id, init);
    }
    *this = std::move(next);
    return id;
}

size_t DefectLattice::create_smooth_qubit(const Region &a, const Region &b, LogicalBasis init) {
    return create_qubit(DefectType::Smooth, a, b, init);
}

size_t DefectLattice::create_rough_qubit(const Region &a, const Region &b, LogicalBasis init) {
    return create_qubit(DefectType::Rough, a, b, init);
}

void DefectLattice::move_defect(size_t defect, const Region &target) {
    const Defect &d = this->defect(defect);
    if (!d.alive) {
        throw std::invalid_argument("defect no longer exists");
    }
    validate_region(d.type, target);
    if (same_set(d.region, target)) {
        return;
    }
    Region both = d.region;
    for (Coord p : target) {
        if (std::find(both.begin(), both.end(), p) == both.end()) {
            both.push_back(p);
        }
    }
    if (!connected(both)) {
        throw std::invalid_argument("target region is not connected to the defect");
    }
    check_clearance(d.type, both, defect);

    DefectLattice next = *this;
    next.defects_[defect].region = both;
    next.settle();
    next.defects_[defect].region = target;
    next.settle();
    *this = std::move(next);
}

void DefectLattice::braid(size_t defect, const std::vector<Region> &path) {
    if (path.empty() || !same_set(path.back(), this->defect(defect).region)) {
        throw std::invalid_argument("braid path must return to the starting region");
    }
    DefectLattice next = *this;
    for (const auto &r : path) {
        next.move_defect(defect, r);
    }
    for (size_t i = 0; i < qubits_.size(); i++) {
        if (qubits_[i].alive) {
            auto xz = next.code_.reduce(std::vector{qubits_[i].x, qubits_[i].z});
            next.qubits_[i].x = std::move(xz[0]);
            next.qubits_[i].z = std::move(xz[1]);
        }
    }
    *this = std::move(next);
}

void DefectLattice::braid_cnot(size_t control, size_t target, const BraidSpec &spec) {
    check_qubit(control);
    check_qubit(target);
    if (qubits_[control].type != DefectType::Smooth || qubits_[target].type != DefectType::Rough) {
        throw std::invalid_argument("braided CNOT needs a smooth control and a rough target");
    }
    if (spec.which > 1) {
        throw std::invalid_argument("defect index must be 0 or 1");
    }
    braid(qubits_[control].defects[spec.which], spec.path);
}

SameTypeCnotResult DefectLattice::same_type_cnot(size_t control, size_t target, const SameTypeCnotPlan &plan) {
    check_qubit(control);
    check_qubit(target);
    if (control == target || qubits_[control].type != DefectType::Smooth ||
        qubits_[target].type != DefectType::Smooth) {
        throw std::invalid_argument("same-type CNOT needs two distinct smooth qubits");
    }
    DefectLattice next = *this;
    size_t anc = next.create_qubit(DefectType::Rough, plan.ancilla[0], plan.ancilla[1], LogicalBasis::Z);
    size_t copy = next.create_qubit(DefectType::Smooth, plan.target_copy[0], plan.target_copy[1], LogicalBasis::X);
    next.braid_cnot(control, anc, plan.control);
    next.braid_cnot(target, anc, plan.target);
    next.braid_cnot(copy, anc, plan.copy);
    SameTypeCnotResult res;
    res.m_x = next.measure_logical(target, LogicalBasis::X);
    res.m_z = next.measure_logical(anc, LogicalBasis::Z);
    next.remove_qubit(target);
    next.remove_qubit(anc);
    if (res.m_x < 0) {
        next.apply_logical(control, LogicalBasis::Z);
        next.apply_logical(copy, LogicalBasis::Z);
    }
    if (res.m_z < 0) {
        next.apply_logical(copy, LogicalBasis::X);
    }
    next.qubits_[target] = next.qubits_[copy];
    next.qubits_[copy].alive = false;
    *this = std::move(next);
    return res;
}

void DefectLattice::transversal_hadamard(size_t qubit, const HadamardPlan &plan) {
    check_qubit(qubit);
    if (qubits_[qubit].type != DefectType::Smooth) {
        throw std::invalid_argument("transversal Hadamard expects a smooth qubit");
    }
    for (size_t d = 0; d < defects_.size(); d++) {
        bool own = d == qubits_[qubit].defects[0] || d == qubits_[qubit].defects[1];
        if (defects_[d].alive && !own) {
            throw std::invalid_argument("transversal Hadamard needs the qubit alone on the lattice");
        }
    }
    Region cut;
    for (const auto &s : base_.stabilizers(StabKind::X)) {
        if (s.pos.r < plan.r0 || s.pos.r > plan.r1 || s.pos.c < plan.c0 || s.pos.c > plan.c1) {
            cut.push_back(s.pos);
        }
    }
    if (cut.empty()) {
        throw std::invalid_argument("isolation ring lies outside the lattice");
    }
    check_clearance(DefectType::Rough, cut, std::nullopt);

    DefectLattice next = *this;
    size_t ring_defect = next.add_defect(DefectType::Rough, cut);
    next.settle();

    size_t n = num_physical();
    for (size_t q = 0; q < n; q++) {
        next.state_.apply(CliffordGate::h(q));
        next.code_.apply(CliffordGate::h(q));
    }
    LogicalQubit &lq = next.qubits_[qubit];
    PauliOperator x = hadamard_image(lq.z);
    lq.z = hadamard_image(lq.x);
    lq.x = std::move(x);
    lq.type = DefectType::Rough;
    for (auto &w : next.watched_) {
        w = hadamard_image(w);
    }
    next.base_ = PlanarLattice(base_.r0() + 1, base_.r1() + 1, base_.c0() + 1, base_.c1() + 1);
    for (auto &d : next.defects_) {
        d.type = d.type == DefectType::Smooth ? DefectType::Rough : DefectType::Smooth;
        for (Coord &p : d.region) {
            p = {p.r + 1, p.c + 1};
        }
    }
    next.settle();
    next.defects_[ring_defect].alive = false;
    next.settle();

    size_t anc = next.create_qubit(DefectType::Smooth, plan.ancilla[0], plan.ancilla[1], LogicalBasis::X);
    next.braid_cnot(anc, qubit, plan.braid);
    int m = next.measure_logical(qubit, LogicalBasis::Z);
    next.remove_qubit(qubit);
    if (m < 0) {
        next.apply_logical(anc, LogicalBasis::X);
    }
    next.qubits_[qubit] = next.qubits_[anc];
    next.qubits_[anc].alive = false;
    *this = std::move(next);
}

int DefectLattice::measure_logical(size_t qubit, LogicalBasis b) {
    check_qubit(qubit);
    return state_.measure(qubits_[qubit].op(b), rng_).outcome;
}

std::optional<int> DefectLattice::peek_logical(size_t qubit, LogicalBasis b) const {
    check_qubit(qubit);
    return state_.peek(qubits_[qubit].op(b));
}

void DefectLattice::apply_logical(size_t qubit, LogicalBasis b) {
    check_qubit(qubit);
    state_.apply_pauli(qubits_[qubit].op(b));
}

void DefectLattice::prepare_logical(size_t qubit, LogicalBasis b) {
    if (measure_logical(qubit, b) < 0) {
        apply_logical(qubit, other(b));
    }
}

int DefectLattice::remove_qubit(size_t qubit) {
    check_qubit(qubit);
    DefectLattice next = *this;
    int m = next.measure_logical(qubit, natural_basis(qubits_[qubit].type));
    LogicalQubit &lq = next.qubits_[qubit];
    lq.alive = false;
    next.defects_[lq.defects[0]].alive = false;
    next.defects_[lq.defects[1]].alive = false;
    next.settle();
    *this = std::move(next);
    return m;
}

size_t DefectLattice::watch(const PauliOperator &op) {
    if (op.num_qubits() != num_physical()) {
        throw std::invalid_argument("operator size does not match the lattice");
    }
    for (const auto &g : code_.generators()) {
        if (!g.commutes_with(op)) {
            throw std::invalid_argument("watched operator must commute with the code group");
        }
    }
    watched_.push_back(code_.reduce(op));
    return watched_.size() - 1;
}

const PauliOperator &DefectLattice::watched(size_t id) const {
    if (id >= watched_.size()) {
        throw std::out_of_range("no such watched operator");
    }
    return watched_[id];
}

void DefectLattice::apply_pauli(const PauliOperator &p) { state_.apply_pauli(p); }

bool DefectLattice::equivalent(const PauliOperator &a, const PauliOperator &b) const {
    auto r = code_.reduce(std::vector{a, b});
    return r[0] == r[1];
}

std::vector<Region> rectangle_loop(int r0, int r1, int c0, int c1, Coord start) {
    if (r1 - r0 < 2 || c1 - c0 < 2 || (r1 - r0) % 2 || (c1 - c0) % 2) {
        throw std::invalid_argument("loop rectangle needs even side lengths of at least 2");
    }
    std::vector<Coord> per;
    for (int c = c0; c <= c1; c += 2) per.push_back({r0, c});
    for (int r = r0 + 2; r <= r1; r += 2) per.push_back({r, c1});
    for (int c = c1 - 2; c >= c0; c -= 2) per.push_back({r1, c});
    for (int r = r1 - 2; r > r0; r -= 2) per.push_back({r, c0});
    auto it = std::find(per.begin(), per.end(), start);
    if (it == per.end()) {
        throw std::invalid_argument("loop start is not on the rectangle");
    }
    size_t k = size_t(it - per.begin());
    std::vector<Region> path;
    for (size_t i = 1; i <= per.size(); i++) {
        path.push_back({per[(k + i) % per.size()]});
    }
    return path;
}

}  // namespace surfsim
