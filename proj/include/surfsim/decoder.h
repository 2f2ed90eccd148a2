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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "surfsim/frame.h"
#include "surfsim/lattice.h"
#include "surfsim/matching.h"

namespace surfsim {

/// Space-time matching graph for one stabilizer kind. Interior node i is events[i]; node
/// num_events() + i is its boundary companion. Companion pairs cost 0 and are not stored.
struct MatchingGraph {
    StabKind kind = StabKind::Z;
    std::vector<DetectionEvent> events;
    std::vector<int32_t> boundary_weight;
    std::vector<Side> boundary_side;
    std::vector<WeightedEdge> edges;  // interior-interior and interior-companion

    size_t num_events() const { return events.size(); }
    size_t num_nodes() const { return 2 * events.size(); }
};

/// Builds the graph over events of one kind. Interior edges cost spatial distance plus cycle
/// difference, less one when both are nonzero (a single mid-cycle fault moves one step in
/// space and one in time). Edges longer than the two boundary distances combined are dropped.
MatchingGraph build_graph(const std::vector<DetectionEvent> &events, const PlanarLattice &lattice, StabKind kind,
                          bool prune = true);

/// Interior node i paired with `partner[i]`, or with its boundary companion when partner[i] < 0.
struct DecodedMatching {
    std::vector<int32_t> partner;
    int64_t weight = 0;
};

/// Exact minimum-weight perfect matching of the graph. Among minima, interior pairs are
/// preferred over boundary pairs.
DecodedMatching min_weight_match(const MatchingGraph &g);

/// Flips the spatial part of every matched path into `bits` (data qubit indexed).
void apply_correction(std::vector<uint8_t> &bits, const MatchingGraph &g, const DecodedMatching &m,
                      const PlanarLattice &lattice);
/// X flips for a Z-stabilizer graph, Z flips for an X-stabilizer graph.
void apply_correction(ErrorFrame &frame, const MatchingGraph &g, const DecodedMatching &m, const PlanarLattice &lattice);

struct DecoderOptions {
    uint64_t t_freeze = 20;
    /// Also decode the full history and count logical disagreements with the windowed answer.
    bool audit = false;
};

/// Windowed decoder for one stabilizer kind. Matches whose nodes are all older than t_freeze
/// cycles are committed to a correction and leave the window.
class StreamingDecoder {
   public:
    StreamingDecoder(const PlanarLattice &lattice, StabKind kind, DecoderOptions options = {});

    /// Adds the events of cycle `now` and freezes old matches.
    void push(const std::vector<DetectionEvent> &events, uint64_t now);
    /// Total correction (committed plus the current window matched together with `extra`).
    std::vector<uint8_t> correction_with(const std::vector<DetectionEvent> &extra);
    /// Full-history correction for the same query (audit mode only).
    std::vector<uint8_t> full_correction_with(const std::vector<DetectionEvent> &extra) const;

    const std::vector<uint8_t> &committed() const { return committed_; }
    const std::vector<DetectionEvent> &window() const { return active_; }
    size_t window_size() const { return active_.size(); }
    uint64_t divergences() const { return divergences_; }
    uint64_t audited_queries() const { return audited_; }
    StabKind kind() const { return kind_; }

   private:
    void freeze(uint64_t now);
    bool line_parity(const std::vector<uint8_t> &bits) const;

    const PlanarLattice *lattice_;
    StabKind kind_;
    DecoderOptions options_;
    std::vector<DetectionEvent> active_;
    std::vector<DetectionEvent> history_;
    std::vector<uint8_t> committed_;
    uint64_t last_freeze_ = 0;
    uint64_t divergences_ = 0;
    uint64_t audited_ = 0;
    std::vector<size_t> line_;
};

/// One CSV row per trace cycle: cycle, nodes, edges, weight, time-us, for the decoding windows
/// of both kinds after that cycle.
void replay_trace(const PlanarLattice &lattice, const std::vector<SyndromeRecord> &records, std::ostream &csv,
                  DecoderOptions options = {});

}  // namespace surfsim
