/*
 *   Copyright 2026 spq developers
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */
#pragma once

#include <cstdint>
#include <vector>

namespace spq {

// Bipartite graph in CSR form: edges of left vertex u are
// adj[offsets[u] .. offsets[u+1]).
struct BipartiteGraph {
    size_t n_left = 0;
    size_t n_right = 0;
    std::vector<size_t> offsets{0};
    std::vector<int32_t> adj;

    void add_left(const std::vector<int32_t>& edges) {
        adj.insert(adj.end(), edges.begin(), edges.end());
        offsets.push_back(adj.size());
        ++n_left;
    }
};

struct MatchingResult {
    size_t size = 0;
    std::vector<int32_t> left_match;   // right vertex per left, -1 if unmatched
    std::vector<int32_t> right_match;  // left vertex per right, -1 if unmatched
};

// Maximum-cardinality matching via augmenting paths in BFS layers
// (Hopcroft-Karp), seeded with a greedy pass. Deterministic for a fixed
// vertex and adjacency order.
MatchingResult max_bipartite_matching(const BipartiteGraph& g);

} // namespace spq
