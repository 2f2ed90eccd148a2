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

#include "surfsim/decoder.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace surfsim {

namespace {

constexpr size_t kSubsetLimit = 12;

int64_t event_distance(const PlanarLattice &l, StabKind k, const DetectionEvent &a, const DetectionEvent &b) {
    int64_t dt = a.cycle > b.cycle ? int64_t(a.cycle - b.cycle) : int64_t(b.cycle - a.cycle);
    int64_t ds = l.stabilizer_distance(k, a.stabilizer, b.stabilizer);
    return ds + dt - (ds > 0 && dt > 0 ? 1 : 0);
}

struct UnionFind {
    std::vector<uint32_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    uint32_t find(uint32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void unite(uint32_t a, uint32_t b) { parent[find(a)] = find(b); }
};

void flip_chain(std::vector<uint8_t> &bits, const std::vector<size_t> &chain) {
    for (size_t q : chain) {
        bits[q] ^= 1;
    }
}

}  // namespace

MatchingGraph build_graph(const std::vector<DetectionEvent> &events, const PlanarLattice &lattice, StabKind kind,
                          bool prune) {
    MatchingGraph g;
    g.kind = kind;
    size_t num_stabs = lattice.stabilizers(kind).size();
    for (const auto &e : events) {
        if (e.kind != kind || e.stabilizer >= num_stabs) {
            throw std::invalid_argument("detection event does not belong to this graph");
        }
    }
    g.events = events;
    size_t n = events.size();
    for (const auto &e : events) {
        auto [side, w] = lattice.nearest_boundary(kind, e.stabilizer);
        g.boundary_side.push_back(side);
        g.boundary_weight.push_back(w);
    }
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = i + 1; j < n; j++) {
            int64_t w = event_distance(lattice, kind, events[i], events[j]);
            if (!prune || w <= g.boundary_weight[i] + g.boundary_weight[j]) {
                g.edges.push_back({i, j, w});
            }
        }
    }
    for (uint32_t i = 0; i < n; i++) {
        g.edges.push_back({i, uint32_t(n + i), g.boundary_weight[i]});
    }
    return g;
}

DecodedMatching min_weight_match(const MatchingGraph &g) {
    size_t n = g.num_events();
    DecodedMatching result;
    result.partner.assign(n, -1);
    // Interior edges split the events into independent components.
    UnionFind uf(n);
    std::vector<std::vector<WeightedEdge>> interior(n);
    for (const auto &e : g.edges) {
        if (e.u < n && e.v < n) {
            uf.unite(e.u, e.v);
        }
    }
    std::vector<std::vector<uint32_t>> members(n);
    for (uint32_t v = 0; v < n; v++) {
        members[uf.find(v)].push_back(v);
    }
    for (const auto &e : g.edges) {
        if (e.u < n && e.v < n) {
            interior[uf.find(e.u)].push_back(e);
        }
    }
    std::vector<uint32_t> local(n, 0);
    for (uint32_t root = 0; root < n; root++) {
        const auto &nodes = members[root];
        size_t m = nodes.size();
        if (m == 0) {
            continue;
        }
        if (m == 1) {
            result.weight += g.boundary_weight[nodes[0]];
            continue;
        }
        for (uint32_t i = 0; i < m; i++) {
            local[nodes[i]] = i;
        }
        // Scale so that a +1 on boundary edges only breaks ties.
        int64_t scale = int64_t(m) + 1;
        if (m <= kSubsetLimit) {
            std::vector<int64_t> w(m * m, -1);
            for (const auto &e : interior[root]) {
                w[local[e.u] * m + local[e.v]] = w[local[e.v] * m + local[e.u]] = e.w;
            }
            std::vector<int64_t> best(size_t(1) << m, 0);
            std::vector<int8_t> choice(best.size(), -1);
            for (size_t mask = 1; mask < best.size(); mask++) {
                size_t i = size_t(std::countr_zero(mask));
                size_t rest = mask & ~(size_t(1) << i);
                best[mask] = best[rest] + int64_t(g.boundary_weight[nodes[i]]) * scale + 1;
                for (size_t j = i + 1; j < m; j++) {
                    int64_t wij = w[i * m + j];
                    if ((rest >> j & 1) && wij >= 0) {
                        int64_t c = best[rest & ~(size_t(1) << j)] + wij * scale;
                        if (c < best[mask]) {
                            best[mask] = c;
                            choice[mask] = int8_t(j);
                        }
                    }
                }
            }
            for (size_t mask = best.size() - 1; mask;) {
                size_t i = size_t(std::countr_zero(mask));
                mask &= ~(size_t(1) << i);
                if (choice[mask | (size_t(1) << i)] < 0) {
                    result.weight += g.boundary_weight[nodes[i]];
                    continue;
                }
                size_t j = size_t(choice[mask | (size_t(1) << i)]);
                mask &= ~(size_t(1) << j);
                result.partner[nodes[i]] = int32_t(nodes[j]);
                result.partner[nodes[j]] = int32_t(nodes[i]);
                result.weight += w[i * m + j];
            }
            continue;
        }
        // Pairing i with j instead of sending both to the boundary saves b_i + b_j - w_ij.
        std::vector<WeightedEdge> edges;
        for (const auto &e : interior[root]) {
            int64_t saving = (int64_t(g.boundary_weight[e.u]) + g.boundary_weight[e.v] - e.w) * scale + 2;
            if (saving > 0) {
                edges.push_back({local[e.u], local[e.v], saving});
            }
        }
        auto mate = max_weight_matching(m, edges);
        for (uint32_t i = 0; i < m; i++) {
            if (mate[i] >= 0) {
                result.partner[nodes[i]] = int32_t(nodes[size_t(mate[i])]);
            }
        }
        for (uint32_t i = 0; i < m; i++) {
            uint32_t v = nodes[i];
            if (result.partner[v] < 0) {
                result.weight += g.boundary_weight[v];
            } else if (uint32_t(result.partner[v]) > v) {
                for (const auto &e : interior[root]) {
                    if ((e.u == v && e.v == uint32_t(result.partner[v])) ||
                        (e.v == v && e.u == uint32_t(result.partner[v]))) {
                        result.weight += e.w;
                        break;
                    }
                }
            }
        }
    }
    return result;
}

void apply_correction(std::vector<uint8_t> &bits, const MatchingGraph &g, const DecodedMatching &m,
                      const PlanarLattice &lattice) {
    for (size_t i = 0; i < g.num_events(); i++) {
        int32_t p = m.partner[i];
        if (p < 0) {
            flip_chain(bits, lattice.chain_to_side(g.kind, g.events[i].stabilizer, g.boundary_side[i]));
        } else if (size_t(p) > i) {
            flip_chain(bits, lattice.chain_between(g.kind, g.events[i].stabilizer, g.events[p].stabilizer));
        }
    }
}

void apply_correction(ErrorFrame &frame, const MatchingGraph &g, const DecodedMatching &m,
                      const PlanarLattice &lattice) {
    apply_correction(g.kind == StabKind::Z ? frame.x : frame.z, g, m, lattice);
}

StreamingDecoder::StreamingDecoder(const PlanarLattice &lattice, StabKind kind, DecoderOptions options)
    : lattice_(&lattice), kind_(kind), options_(options), committed_(lattice.num_data(), 0) {
    line_ = kind == StabKind::Z ? lattice.logical_z_support() : lattice.logical_x_support();
}

bool StreamingDecoder::line_parity(const std::vector<uint8_t> &bits) const {
    uint8_t parity = 0;
    for (size_t q : line_) {
        parity ^= bits[q];
    }
    return parity;
}

void StreamingDecoder::push(const std::vector<DetectionEvent> &events, uint64_t now) {
    for (const auto &e : events) {
        if (e.kind == kind_) {
            active_.push_back(e);
            if (options_.audit) {
                history_.push_back(e);
            }
        }
    }
    uint64_t period = std::max<uint64_t>(1, options_.t_freeze / 2);
    if (now >= last_freeze_ + period) {
        freeze(now);
        last_freeze_ = now;
    }
}

void StreamingDecoder::freeze(uint64_t now) {
    if (active_.empty() || now <= options_.t_freeze) {
        return;
    }
    uint64_t horizon = now - options_.t_freeze;
    auto g = build_graph(active_, *lattice_, kind_);
    auto m = min_weight_match(g);
    std::vector<uint8_t> keep(active_.size(), 1);
    for (size_t i = 0; i < active_.size(); i++) {
        int32_t p = m.partner[i];
        if (p < 0) {
            if (active_[i].cycle <= horizon) {
                flip_chain(committed_, lattice_->chain_to_side(kind_, active_[i].stabilizer, g.boundary_side[i]));
                keep[i] = 0;
            }
        } else if (size_t(p) > i && active_[i].cycle <= horizon && active_[p].cycle <= horizon) {
            flip_chain(committed_, lattice_->chain_between(kind_, active_[i].stabilizer, active_[p].stabilizer));
            keep[i] = keep[p] = 0;
        }
    }
    std::vector<DetectionEvent> rest;
    for (size_t i = 0; i < active_.size(); i++) {
        if (keep[i]) {
            rest.push_back(active_[i]);
        }
    }
    active_ = std::move(rest);
}

std::vector<uint8_t> StreamingDecoder::correction_with(const std::vector<DetectionEvent> &extra) {
    std::vector<DetectionEvent> nodes = active_;
    for (const auto &e : extra) {
        if (e.kind == kind_) {
            nodes.push_back(e);
        }
    }
    std::vector<uint8_t> bits = committed_;
    auto g = build_graph(nodes, *lattice_, kind_);
    apply_correction(bits, g, min_weight_match(g), *lattice_);
    if (options_.audit) {
        auto full = full_correction_with(extra);
        audited_++;
        for (size_t q = 0; q < full.size(); q++) {
            full[q] ^= bits[q];
        }
        divergences_ += line_parity(full);
    }
    return bits;
}

std::vector<uint8_t> StreamingDecoder::full_correction_with(const std::vector<DetectionEvent> &extra) const {
    if (!options_.audit) {
        throw std::logic_error("full-history decoding needs audit mode");
    }
    std::vector<DetectionEvent> nodes = history_;
    for (const auto &e : extra) {
        if (e.kind == kind_) {
            nodes.push_back(e);
        }
    }
    std::vector<uint8_t> bits(lattice_->num_data(), 0);
    auto g = build_graph(nodes, *lattice_, kind_);
    apply_correction(bits, g, min_weight_match(g), *lattice_);
    return bits;
}

void replay_trace(const PlanarLattice &lattice, const std::vector<SyndromeRecord> &records, std::ostream &csv,
                  DecoderOptions options) {
    StreamingDecoder dz(lattice, StabKind::Z, options);
    StreamingDecoder dx(lattice, StabKind::X, options);
    csv << "cycle,nodes,edges,weight,time_us\n";
    for (size_t i = 0; i < records.size(); i++) {
        auto start = std::chrono::steady_clock::now();
        auto events = detection_events(i ? &records[i - 1] : nullptr, records[i]);
        dz.push(events, records[i].cycle);
        dx.push(events, records[i].cycle);
        size_t nodes = 0;
        size_t edges = 0;
        int64_t weight = 0;
        for (const StreamingDecoder *d : {&dz, &dx}) {
            auto g = build_graph(d->window(), lattice, d->kind());
            auto m = min_weight_match(g);
            nodes += g.num_nodes();
            edges += g.edges.size() + g.num_events() * (g.num_events() - (g.num_events() > 0)) / 2;
            weight += m.weight;
        }
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        csv << records[i].cycle << ',' << nodes << ',' << edges << ',' << weight << ',' << us.count() << '\n';
    }
}

}  // namespace surfsim
