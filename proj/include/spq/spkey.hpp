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

#include "spq/matching.hpp"
#include "spq/measure.hpp"
#include "spq/table.hpp"

namespace spq {

struct SpkeyOptions {
    // Evaluate against these domains instead of the table's own. Used to
    // re-check removal certificates against the domains of the table the
    // measure was computed on (removals may shrink a column's value set).
    const ActiveDomains* domains = nullptr;
    bool want_witness = true;
};

// The graph the matching stage runs on. Rows are sorted by ascending
// completion count; only the first `cut` of them get materialized
// projections, the rest always admit a lazy first-fit completion.
struct PrunedGraph {
    std::vector<uint64_t> ell;         // completions per row (original index)
    std::vector<size_t> order;         // row indices sorted by (ell, index)
    size_t cut = 0;                    // sorted prefix length handled by matching
    std::vector<std::vector<Sym>> right_vertices;
    BipartiteGraph graph;              // left u = sorted position u, u < cut
};

PrunedGraph build_pruned_graph(const Table& t, const AttrSet& key, const ActiveDomains& dom);

// Does some replacement world drawn from the active domains make `key` a
// key? Polynomial: a matching in the pruned graph plus greedy completion.
CheckResult check_spkey(const Table& t, const AttrSet& key, const SpkeyOptions& opts = {});

// Exact smallest fraction of rows to drop so the key holds in the rest
// (domains as of the input table). Certificate: the dropped rows plus a
// projection assignment for the kept ones.
MeasureResult g3_spkey(const Table& t, const AttrSet& key, const SpkeyOptions& opts = {});

// Exact smallest fraction of all-fresh rows to append so the key holds.
// Undefined when no extension can help (duplicate key-complete rows, a
// single-attribute key with missing entries) or when the minimum would
// exceed one (more additions than rows).
MeasureResult g5_spkey(const Table& t, const AttrSet& key, const SpkeyOptions& opts = {});

// True iff the addition measure is defined and both measures coincide.
bool g3_equals_g5(const Table& t, const AttrSet& key);

} // namespace spq
