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
#include <utility>
#include <vector>

namespace surfsim {

struct WeightedEdge {
    uint32_t u;
    uint32_t v;
    int64_t w;
};

/// Maximum-weight matching on a general graph with Edmonds' blossom algorithm, O(n^3).
/// With max_cardinality, returns a maximum-weight matching among those of maximum size.
/// Returns the partner of every vertex, or -1.
std::vector<int32_t> max_weight_matching(size_t num_vertices, const std::vector<WeightedEdge> &edges,
                                         bool max_cardinality = false);

struct Matching {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;  // u < v, sorted
    int64_t weight = 0;
};

/// Minimum-weight perfect matching. Throws std::invalid_argument for an odd vertex count or a
/// graph without a perfect matching.
Matching min_weight_perfect_matching(size_t num_vertices, const std::vector<WeightedEdge> &edges);

}  // namespace surfsim
