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

#include "surfsim/tableau.h"

#include <bit>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace surfsim {

namespace {

// Column c < n is x_c, column c >= n is z_(c-n).
bool column_bit(const PauliOperator &p, size_t col, size_t n) {
    return col < n ? p.x(col) : p.z(col - n);
}

// First set column (x part first), scanning whole words.
std::optional<size_t> first_column(const PauliOperator &p, size_t n) {
    for (const auto *bits : {&p.xs(), &p.zs()}) {
        for (size_t w = 0; w < bits->num_words(); w++) {
            if (uint64_t word = bits->words()[w]) {
                size_t col = w * 64 + size_t(std::countr_zero(word));
                return bits == &p.xs() ? col : n + col;
            }
        }
    }
    return std::nullopt;
}

/// Row echelon basis of generators, tracking which original generators built each row.
struct TrackedBasis {
    struct Row {
        PauliOperator op;  // unsigned bit pattern only
        BitVector combo;
        size_t pivot;
    };
    std::vector<Row> rows;
    size_t n;

    explicit TrackedBasis(size_t num_qubits) : n(num_qubits) {}

    // XORs basis rows into `op`; returns true (and sets the pivot of a fresh row) if something remains.
    bool reduce(PauliOperator &op, BitVector &combo) {
        for (const Row &r : rows) {
            if (column_bit(op, r.pivot, n)) {
                op.xs() ^= r.op.xs();
                op.zs() ^= r.op.zs();
                combo ^= r.combo;
            }
        }
        return first_set_column(op).has_value();
    }

    std::optional<size_t> first_set_column(const PauliOperator &op) const { return first_column(op, n); }

    bool reduce_and_record(Row &row) {
        if (!reduce(row.op, row.combo)) {
            return false;
        }
        row.pivot = *first_set_column(row.op);
        return true;
    }
};

// Builds the basis with pivots filled in.
TrackedBasis build_basis(const std::vector<PauliOperator> &gens, size_t n) {
    TrackedBasis basis(n);
    for (size_t g = 0; g < gens.size(); g++) {
        TrackedBasis::Row row{gens[g], BitVector(gens.size()), 0};
        row.op.set_negative(false);
        row.combo.set(g, true);
        if (basis.reduce_and_record(row)) {
            basis.rows.push_back(std::move(row));
        }
    }
    return basis;
}

}  // namespace

StabilizerTableau::StabilizerTableau(size_t num_qubits) : n_(num_qubits) {
    for (size_t k = 0; k < num_qubits; k++) {
        gens_.push_back(PauliOperator::single(num_qubits, k, Pauli::Z));
    }
}

StabilizerTableau StabilizerTableau::empty(size_t num_qubits) {
    StabilizerTableau t;
    t.n_ = num_qubits;
    return t;
}

StabilizerTableau StabilizerTableau::from_generators(size_t num_qubits, std::vector<PauliOperator> generators) {
    if (generators.size() > num_qubits) {
        throw std::invalid_argument("more generators than qubits");
    }
    for (const auto &g : generators) {
        if (g.num_qubits() != num_qubits) {
            throw std::invalid_argument("generator size mismatch");
        }
    }
    StabilizerTableau t;
    t.n_ = num_qubits;
    t.gens_ = std::move(generators);
    if (!t.all_commute()) {
        throw std::invalid_argument("generators do not commute");
    }
    if (t.rank() != t.gens_.size()) {
        throw std::invalid_argument("generators are not independent");
    }
    return t;
}

StabilizerTableau StabilizerTableau::parse(std::string_view text) {
    std::vector<PauliOperator> ops;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        size_t end = line.find_last_not_of(" \t\r");
        ops.push_back(PauliOperator::from_string(std::string_view(line).substr(start, end - start + 1)));
    }
    if (ops.empty()) {
        throw std::invalid_argument("no generators in tableau text");
    }
    size_t n = ops.front().num_qubits();
    return from_generators(n, std::move(ops));
}

std::string StabilizerTableau::str() const {
    std::string out;
    for (const auto &g : gens_) {
        out += g.str();
        out += '\n';
    }
    return out;
}

std::optional<int> StabilizerTableau::peek(const PauliOperator &op) const {
    if (op.num_qubits() != n_) {
        throw std::invalid_argument("operator size does not match tableau");
    }
    TrackedBasis basis = build_basis(gens_, n_);
    PauliOperator residue = op;
    residue.set_negative(false);
    BitVector combo(gens_.size());
    if (basis.reduce(residue, combo)) {
        return std::nullopt;
    }
    PauliOperator product(n_);
    for (size_t g = 0; g < gens_.size(); g++) {
        if (combo[g]) {
            product *= gens_[g];
        }
    }
    return product.sign() * op.sign();
}

MeasureResult StabilizerTableau::measure(const PauliOperator &op, Rng &rng, std::optional<int> forced_outcome) {
    if (op.num_qubits() != n_) {
        throw std::invalid_argument("operator size does not match tableau");
    }
    if (forced_outcome && *forced_outcome != 1 && *forced_outcome != -1) {
        throw std::invalid_argument("forced outcome must be +1 or -1");
    }
    auto random_outcome = [&]() {
        if (forced_outcome) {
            return *forced_outcome;
        }
        return std::bernoulli_distribution(0.5)(rng) ? -1 : +1;
    };

    std::optional<size_t> first;
    for (size_t g = 0; g < gens_.size(); g++) {
        if (!gens_[g].commutes_with(op)) {
            first = g;
            break;
        }
    }

    MeasureResult result;
    if (!first) {
        if (auto sign = peek(op)) {
            if (forced_outcome) {
                throw std::logic_error("forced outcome supplied for a deterministic measurement");
            }
            result.outcome = *sign;
            result.deterministic = true;
            result.kind = 1;
            return result;
        }
        result.outcome = random_outcome();
        result.deterministic = false;
        result.kind = 2;
        PauliOperator added = op;
        if (result.outcome < 0) {
            added.set_negative(!added.negative());
        }
        gens_.push_back(std::move(added));
        return result;
    }

    size_t f = *first;
    for (size_t g = f + 1; g < gens_.size(); g++) {
        if (!gens_[g].commutes_with(op)) {
            gens_[g] *= gens_[f];
        }
    }
    result.pivot = gens_[f];
    result.outcome = random_outcome();
    result.deterministic = false;
    result.kind = 3;
    gens_[f] = op;
    if (result.outcome < 0) {
        gens_[f].set_negative(!gens_[f].negative());
    }
    return result;
}

void StabilizerTableau::add_generator(const PauliOperator &op) {
    for (const auto &g : gens_) {
        if (!g.commutes_with(op)) {
            throw std::invalid_argument("added generator does not commute with the group");
        }
    }
    if (peek(op)) {
        throw std::invalid_argument("added generator is already in the group");
    }
    gens_.push_back(op);
}

void StabilizerTableau::apply(const CliffordGate &gate) {
    for (auto &g : gens_) {
        conjugate_inplace(g, gate);
    }
}

void StabilizerTableau::apply_pauli(const PauliOperator &p) {
    for (auto &g : gens_) {
        if (!g.commutes_with(p)) {
            g.set_negative(!g.negative());
        }
    }
}

void StabilizerTableau::permute(const std::vector<size_t> &perm) {
    if (perm.size() != n_) {
        throw std::invalid_argument("permutation size mismatch");
    }
    for (auto &g : gens_) {
        PauliOperator moved(n_);
        moved.set_negative(g.negative());
        for (size_t q = 0; q < n_; q++) {
            moved.set(perm[q], g.get(q));
        }
        g = std::move(moved);
    }
}

size_t StabilizerTableau::rank() const {
    return symplectic_rank(gens_);
}

bool StabilizerTableau::all_commute() const {
    for (size_t a = 0; a < gens_.size(); a++) {
        for (size_t b = a + 1; b < gens_.size(); b++) {
            if (!gens_[a].commutes_with(gens_[b])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<PauliOperator> StabilizerTableau::canonical_generators() const {
    std::vector<PauliOperator> rows = gens_;
    size_t next = 0;
    for (size_t col = 0; col < 2 * n_ && next < rows.size(); col++) {
        size_t pivot = next;
        while (pivot < rows.size() && !column_bit(rows[pivot], col, n_)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[next]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && column_bit(rows[r], col, n_)) {
                rows[r] *= rows[next];
            }
        }
        next++;
    }
    rows.resize(next);
    return rows;
}

bool StabilizerTableau::same_group(const StabilizerTableau &other) const {
    return n_ == other.n_ && canonical_generators() == other.canonical_generators();
}

PauliOperator StabilizerTableau::reduce(const PauliOperator &op) const { return reduce(std::vector{op}).front(); }

std::vector<PauliOperator> StabilizerTableau::reduce(std::vector<PauliOperator> ops) const {
    std::vector<PauliOperator> rows = canonical_generators();
    std::vector<size_t> pivots;
    for (const auto &row : rows) {
        pivots.push_back(*first_column(row, n_));
    }
    for (auto &op : ops) {
        for (size_t i = 0; i < rows.size(); i++) {
            if (column_bit(op, pivots[i], n_)) {
                op.inplace_mul_returning_log_i(rows[i]);
            }
        }
    }
    return ops;
}

size_t symplectic_rank(const std::vector<PauliOperator> &ops) {
    if (ops.empty()) {
        return 0;
    }
    size_t n = ops.front().num_qubits();
    // Each stored row is zero on the pivots of the rows before it, so one pass reduces.
    std::vector<PauliOperator> rows;
    std::vector<size_t> pivots;
    for (const auto &op : ops) {
        PauliOperator r = op;
        for (size_t i = 0; i < rows.size(); i++) {
            if (column_bit(r, pivots[i], n)) {
                r.xs() ^= rows[i].xs();
                r.zs() ^= rows[i].zs();
            }
        }
        auto pivot = first_column(r, n);
        if (!pivot) {
            continue;
        }
        rows.push_back(std::move(r));
        pivots.push_back(*pivot);
    }
    return rows.size();
}

}  // namespace surfsim
