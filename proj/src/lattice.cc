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

#include "surfsim/lattice.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace surfsim {

namespace {

bool is_even(int v) { return (v & 1) == 0; }

// Neighbors in north, west, east, south order.
constexpr std::array<Coord, 4> kSteps{{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};

}  // namespace

PlanarLattice::PlanarLattice(int r0, int r1, int c0, int c1) : r0_(r0), r1_(r1), c0_(c0), c1_(c1) {
    if (r1 - r0 < 2 || c1 - c0 < 2) {
        throw std::invalid_argument("lattice too small");
    }
    size_t cells = size_t(r1 - r0 + 1) * size_t(c1 - c0 + 1);
    grid_.assign(cells, -1);
    z_grid_.assign(cells, -1);
    x_grid_.assign(cells, -1);
    for (int r = r0; r <= r1; r++) {
        for (int c = c0; c <= c1; c++) {
            Coord p{r, c};
            if (!is_even(r + c)) {
                grid_[cell(p)] = int32_t(data_.size());
                data_.push_back(p);
            }
        }
    }
    for (int r = r0; r <= r1; r++) {
        for (int c = c0; c <= c1; c++) {
            if (!is_even(r + c)) {
                continue;
            }
            Coord p{r, c};
            StabKind k = is_even(r) ? StabKind::X : StabKind::Z;
            Stabilizer s{k, p, {}};
            for (Coord d : kSteps) {
                if (auto q = data_at({r + d.r, c + d.c})) {
                    s.support.push_back(*q);
                }
            }
            std::sort(s.support.begin(), s.support.end());
            auto &list = k == StabKind::Z ? z_stabs_ : x_stabs_;
            auto &g = k == StabKind::Z ? z_grid_ : x_grid_;
            g[cell(p)] = int32_t(list.size());
            list.push_back(std::move(s));
        }
    }
}

PlanarLattice PlanarLattice::with_distance(size_t d) {
    if (d < 2) {
        throw std::invalid_argument("distance must be at least 2");
    }
    int n = int(d);
    return PlanarLattice(0, 2 * n - 2, 1, 2 * n - 1);
}

PlanarLattice PlanarLattice::all_smooth(size_t w, size_t h) {
    if (w < 1 || h < 1) {
        throw std::invalid_argument("lattice needs at least one face");
    }
    return PlanarLattice(0, 2 * int(h), 0, 2 * int(w));
}

Boundary PlanarLattice::boundary(Side s) const {
    int v = s == Side::Top ? r0_ : s == Side::Bottom ? r1_ : s == Side::Left ? c0_ : c1_;
    return is_even(v) ? Boundary::Smooth : Boundary::Rough;
}

std::optional<size_t> PlanarLattice::data_at(Coord p) const {
    if (!contains(p)) {
        return std::nullopt;
    }
    int32_t v = grid_[cell(p)];
    if (v < 0) {
        return std::nullopt;
    }
    return size_t(v);
}

std::optional<size_t> PlanarLattice::stabilizer_at(StabKind k, Coord p) const {
    if (!contains(p)) {
        return std::nullopt;
    }
    int32_t v = (k == StabKind::Z ? z_grid_ : x_grid_)[cell(p)];
    if (v < 0) {
        return std::nullopt;
    }
    return size_t(v);
}

PauliOperator PlanarLattice::stabilizer_operator(StabKind k, size_t i) const {
    PauliOperator p(num_data());
    for (size_t q : stabilizers(k)[i].support) {
        p.set(q, k == StabKind::Z ? Pauli::Z : Pauli::X);
    }
    return p;
}

std::vector<PauliOperator> PlanarLattice::all_stabilizer_operators() const {
    std::vector<PauliOperator> out;
    for (StabKind k : {StabKind::Z, StabKind::X}) {
        for (size_t i = 0; i < stabilizers(k).size(); i++) {
            out.push_back(stabilizer_operator(k, i));
        }
    }
    return out;
}

size_t PlanarLattice::distance() const {
    return std::min(logical_z_support().size(), logical_x_support().size());
}

std::vector<size_t> PlanarLattice::logical_z_support() const {
    std::vector<size_t> out;
    int r = is_even(r0_) ? r0_ : r0_ + 1;
    for (int c = c0_; c <= c1_; c++) {
        if (auto q = data_at({r, c})) {
            out.push_back(*q);
        }
    }
    return out;
}

std::vector<size_t> PlanarLattice::logical_x_support() const {
    std::vector<size_t> out;
    int c = is_even(c0_) ? c0_ + 1 : c0_;
    for (int r = r0_; r <= r1_; r++) {
        if (auto q = data_at({r, c})) {
            out.push_back(*q);
        }
    }
    return out;
}

PauliOperator PlanarLattice::logical_z() const {
    PauliOperator p(num_data());
    for (size_t q : logical_z_support()) {
        p.set(q, Pauli::Z);
    }
    return p;
}

PauliOperator PlanarLattice::logical_x() const {
    PauliOperator p(num_data());
    for (size_t q : logical_x_support()) {
        p.set(q, Pauli::X);
    }
    return p;
}

int PlanarLattice::stabilizer_distance(StabKind k, size_t a, size_t b) const {
    Coord pa = stabilizers(k)[a].pos;
    Coord pb = stabilizers(k)[b].pos;
    return (std::abs(pa.r - pb.r) + std::abs(pa.c - pb.c)) / 2;
}

std::vector<Side> PlanarLattice::terminating_sides(StabKind k) const {
    // X errors (seen by Z stabilizers) end on smooth sides, Z errors on rough sides.
    Boundary wanted = k == StabKind::Z ? Boundary::Smooth : Boundary::Rough;
    std::vector<Side> out;
    for (Side s : {Side::Top, Side::Bottom, Side::Left, Side::Right}) {
        if (boundary(s) == wanted) {
            out.push_back(s);
        }
    }
    return out;
}

int PlanarLattice::side_distance(StabKind k, size_t i, Side s) const {
    Coord p = stabilizers(k)[i].pos;
    switch (s) {
        case Side::Top:
            return (p.r - r0_ + 1) / 2;
        case Side::Bottom:
            return (r1_ - p.r + 1) / 2;
        case Side::Left:
            return (p.c - c0_ + 1) / 2;
        case Side::Right:
            return (c1_ - p.c + 1) / 2;
    }
    return 0;
}

std::pair<Side, int> PlanarLattice::nearest_boundary(StabKind k, size_t i) const {
    std::pair<Side, int> best{Side::Top, -1};
    for (Side s : terminating_sides(k)) {
        int d = side_distance(k, i, s);
        if (best.second < 0 || d < best.second) {
            best = {s, d};
        }
    }
    if (best.second < 0) {
        throw std::logic_error("no boundary where this chain type can terminate");
    }
    return best;
}

std::vector<size_t> PlanarLattice::chain_between(StabKind k, size_t a, size_t b) const {
    Coord p = stabilizers(k)[a].pos;
    Coord t = stabilizers(k)[b].pos;
    std::vector<size_t> out;
    while (p.c != t.c) {
        int step = t.c > p.c ? 1 : -1;
        out.push_back(*data_at({p.r, p.c + step}));
        p.c += 2 * step;
    }
    while (p.r != t.r) {
        int step = t.r > p.r ? 1 : -1;
        out.push_back(*data_at({p.r + step, p.c}));
        p.r += 2 * step;
    }
    return out;
}

std::vector<size_t> PlanarLattice::chain_to_side(StabKind k, size_t i, Side s) const {
    Coord p = stabilizers(k)[i].pos;
    Coord step = s == Side::Top ? Coord{-1, 0} : s == Side::Bottom ? Coord{1, 0} : s == Side::Left ? Coord{0, -1} : Coord{0, 1};
    std::vector<size_t> out;
    while (true) {
        Coord q{p.r + step.r, p.c + step.c};
        auto d = data_at(q);
        if (!d) {
            break;
        }
        out.push_back(*d);
        p = {p.r + 2 * step.r, p.c + 2 * step.c};
    }
    return out;
}

std::string PlanarLattice::dump() const {
    std::ostringstream out;
    out << "rows " << r0_ << ".." << r1_ << " cols " << c0_ << ".." << c1_ << "\n";
    for (int r = r0_; r <= r1_; r++) {
        for (int c = c0_; c <= c1_; c++) {
            Coord p{r, c};
            if (data_at(p)) {
                out << 'o';
            } else if (stabilizer_at(StabKind::Z, p)) {
                out << 'Z';
            } else {
                out << 'X';
            }
        }
        out << "\n";
    }
    for (StabKind k : {StabKind::Z, StabKind::X}) {
        const auto &list = stabilizers(k);
        for (size_t i = 0; i < list.size(); i++) {
            out << (k == StabKind::Z ? 'Z' : 'X') << i << " (" << list[i].pos.r << "," << list[i].pos.c << "):";
            for (size_t q : list[i].support) {
                out << ' ' << q;
            }
            out << "\n";
        }
    }
    return out.str();
}

ExtractionSchedule build_schedule(const PlanarLattice &l) {
    ExtractionSchedule s;
    for (size_t layer = 0; layer < 4; layer++) {
        for (StabKind k : {StabKind::Z, StabKind::X}) {
            const auto &list = l.stabilizers(k);
            for (size_t i = 0; i < list.size(); i++) {
                Coord p = list[i].pos;
                if (auto q = l.data_at({p.r + kSteps[layer].r, p.c + kSteps[layer].c})) {
                    s.layers[layer].push_back({k, i, *q});
                }
            }
        }
    }
    return s;
}

size_t ExtractionSchedule::cnots_for(StabKind k, size_t stabilizer) const {
    size_t n = 0;
    for (const auto &layer : layers) {
        for (const auto &g : layer) {
            n += g.kind == k && g.stabilizer == stabilizer;
        }
    }
    return n;
}

size_t ExtractionSchedule::same_step_conflicts(const PlanarLattice &l) const {
    size_t conflicts = 0;
    for (const auto &layer : layers) {
        std::vector<int> data_use(l.num_data(), 0);
        std::vector<int> z_use(l.stabilizers(StabKind::Z).size(), 0);
        std::vector<int> x_use(l.stabilizers(StabKind::X).size(), 0);
        for (const auto &g : layer) {
            conflicts += data_use[g.data]++ > 0;
            auto &anc = g.kind == StabKind::Z ? z_use : x_use;
            conflicts += anc[g.stabilizer]++ > 0;
        }
    }
    return conflicts;
}

size_t ExtractionSchedule::ordering_violations() const {
    // Step at which each circuit touches each data qubit.
    using Key = std::pair<int, size_t>;
    std::map<Key, std::map<size_t, size_t>> touch;
    for (size_t layer = 0; layer < layers.size(); layer++) {
        for (const auto &g : layers[layer]) {
            touch[{int(g.kind), g.stabilizer}][g.data] = layer;
        }
    }
    size_t violations = 0;
    for (auto a = touch.begin(); a != touch.end(); ++a) {
        for (auto b = std::next(a); b != touch.end(); ++b) {
            int a_first = 0;
            int b_first = 0;
            size_t shared = 0;
            for (const auto &[q, step] : a->second) {
                auto it = b->second.find(q);
                if (it == b->second.end()) {
                    continue;
                }
                shared++;
                (step < it->second ? a_first : b_first)++;
            }
            if (shared >= 2 && a_first != 0 && b_first != 0) {
                violations++;
            }
        }
    }
    return violations;
}

}  // namespace surfsim
