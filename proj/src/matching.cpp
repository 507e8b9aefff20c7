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
#include "spq/matching.hpp"

#include <limits>

namespace spq {

namespace {

constexpr int32_t kFree = -1;
constexpr uint32_t kInf = std::numeric_limits<uint32_t>::max();

struct Hk {
    const BipartiteGraph& g;
    MatchingResult& m;
    std::vector<uint32_t> dist;
    std::vector<int32_t> queue;

    bool bfs() {
        size_t qh = 0, qt = 0;
        queue.resize(g.n_left);
        dist.assign(g.n_left, kInf);
        for (size_t u = 0; u < g.n_left; ++u)
            if (m.left_match[u] == kFree) {
                dist[u] = 0;
                queue[qt++] = static_cast<int32_t>(u);
            }
        bool reachable_free_right = false;
        while (qh < qt) {
            int32_t u = queue[qh++];
            for (size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
                int32_t v = g.adj[e];
                int32_t w = m.right_match[v];
                if (w == kFree) {
                    reachable_free_right = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    queue[qt++] = w;
                }
            }
        }
        return reachable_free_right;
    }

    bool dfs(int32_t u) {
        for (size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
            int32_t v = g.adj[e];
            int32_t w = m.right_match[v];
            if (w == kFree || (dist[w] == dist[u] + 1 && dfs(w))) {
                m.left_match[u] = v;
                m.right_match[v] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    }
};

} // namespace

MatchingResult max_bipartite_matching(const BipartiteGraph& g) {
    MatchingResult m;
    m.left_match.assign(g.n_left, kFree);
    m.right_match.assign(g.n_right, kFree);

    // Greedy seed: takes most of the matching cheaply on dense inputs.
    for (size_t u = 0; u < g.n_left; ++u)
        for (size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
            int32_t v = g.adj[e];
            if (m.right_match[v] == kFree) {
                m.left_match[u] = v;
                m.right_match[v] = static_cast<int32_t>(u);
                ++m.size;
                break;
            }
        }

    Hk hk{g, m, {}, {}};
    while (hk.bfs()) {
        size_t augmented = 0;
        for (size_t u = 0; u < g.n_left; ++u)
            if (m.left_match[u] == kFree && hk.dfs(static_cast<int32_t>(u))) ++augmented;
        if (augmented == 0) break;
        m.size += augmented;
    }
    return m;
}

} // namespace spq
