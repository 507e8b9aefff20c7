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
#include "spq/spkey.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "spq/constraint.hpp"
#include "spq/fresh.hpp"
#include "spq/internal.hpp"

namespace spq {

namespace {

struct KeyAnalysis {
    size_t covered = 0;                 // maximum number of rows assignable
    std::vector<size_t> removed;        // unmatched rows, original indices
    std::optional<Witness> witness;     // per-row projections for covered rows
    PrunedStats stats;
    std::vector<std::string> warnings;
};

KeyAnalysis analyze(const Table& t, const AttrSet& key, const ActiveDomains& dom,
                    bool want_witness) {
    validate_key(t, key);
    KeyAnalysis res;
    size_t m = t.row_count();
    append_scope_gap_warnings(t, key, dom, res.warnings);
    if (m == 0) return res;

    PrunedGraph pg = build_pruned_graph(t, key, dom);
    res.stats.cut = pg.cut;
    res.stats.materialized_right = pg.right_vertices.size();

    MatchingResult matching = max_bipartite_matching(pg.graph);

    // Prefer dropping incomplete rows. An unmatched row that is complete on
    // the key has exactly one projection; whoever holds it can be displaced
    // without changing the matching size, unless it is another complete row
    // (a genuine duplicate). Maximality rules out the projection being free.
    for (size_t u = 0; u < pg.cut; ++u) {
        if (matching.left_match[u] >= 0) continue;
        if (!t.total_on(pg.order[u], key)) continue;
        if (pg.graph.offsets[u + 1] == pg.graph.offsets[u]) continue;
        int32_t v = pg.graph.adj[pg.graph.offsets[u]];
        int32_t w = matching.right_match[v];
        if (w < 0 || t.total_on(pg.order[static_cast<size_t>(w)], key)) continue;
        matching.left_match[static_cast<size_t>(w)] = -1;
        matching.left_match[u] = v;
        matching.right_match[static_cast<size_t>(v)] = static_cast<int32_t>(u);
    }

    std::vector<std::optional<std::vector<Sym>>> assigned(m);
    ProjSet used;
    for (size_t u = 0; u < pg.cut; ++u) {
        int32_t v = matching.left_match[u];
        if (v < 0) {
            res.removed.push_back(pg.order[u]);
            continue;
        }
        assigned[pg.order[u]] = pg.right_vertices[static_cast<size_t>(v)];
        used.insert(pg.right_vertices[static_cast<size_t>(v)]);
    }

    // Rows past the cut have at least position-many completions, and fewer
    // than that many projections are taken, so first-fit always lands.
    std::vector<Sym> cand;
    for (size_t p = pg.cut; p < m; ++p) {
        size_t row = pg.order[p];
        ExtensionEnumerator en(t, row, key, dom);
        bool placed = false;
        while (en.next(cand)) {
            ++res.stats.greedy_enumerated;
            if (used.insert(cand).second) {
                assigned[row] = cand;
                placed = true;
                break;
            }
        }
        if (!placed) res.removed.push_back(row); // unreachable if the cut is sound
    }

    res.covered = m - res.removed.size();
    std::sort(res.removed.begin(), res.removed.end());

    if (want_witness) {
        Witness w;
        w.scope = key;
        w.rows.resize(m);
        for (size_t r = 0; r < m; ++r) {
            if (!assigned[r]) continue;
            std::vector<std::string> names;
            names.reserve(key.size());
            for (Sym s : *assigned[r]) names.push_back(t.symbol_name(s));
            w.rows[r] = std::move(names);
        }
        res.witness = std::move(w);
    }
    return res;
}

} // namespace

PrunedGraph build_pruned_graph(const Table& t, const AttrSet& key, const ActiveDomains& dom) {
    validate_key(t, key);
    PrunedGraph pg;
    size_t m = t.row_count();
    pg.ell.resize(m);
    pg.order.resize(m);
    for (size_t r = 0; r < m; ++r) {
        pg.ell[r] = extension_count(t, r, key, dom);
        pg.order[r] = r;
    }
    std::stable_sort(pg.order.begin(), pg.order.end(),
                     [&](size_t a, size_t b) { return pg.ell[a] < pg.ell[b]; });

    // Largest 1-based position whose row has fewer completions than the
    // position itself; everything beyond it is completable greedily.
    pg.cut = 0;
    for (size_t p = 0; p < m; ++p)
        if (pg.ell[pg.order[p]] < p + 1) pg.cut = p + 1;

    std::unordered_map<std::vector<Sym>, int32_t, ProjHash> ids;
    std::vector<Sym> cand;
    std::vector<int32_t> edges;
    for (size_t u = 0; u < pg.cut; ++u) {
        edges.clear();
        ExtensionEnumerator en(t, pg.order[u], key, dom);
        while (en.next(cand)) {
            auto [it, inserted] = ids.emplace(cand, static_cast<int32_t>(pg.right_vertices.size()));
            if (inserted) pg.right_vertices.push_back(cand);
            edges.push_back(it->second);
        }
        pg.graph.add_left(edges);
    }
    pg.graph.n_right = pg.right_vertices.size();
    return pg;
}

CheckResult check_spkey(const Table& t, const AttrSet& key, const SpkeyOptions& opts) {
    ActiveDomains own;
    const ActiveDomains* dom = opts.domains;
    if (!dom) {
        own = ActiveDomains::compute(t);
        dom = &own;
    }
    KeyAnalysis a = analyze(t, key, *dom, opts.want_witness);
    CheckResult res;
    res.holds = a.covered == t.row_count();
    if (res.holds) res.witness = std::move(a.witness);
    res.warnings = std::move(a.warnings);
    return res;
}

MeasureResult g3_spkey(const Table& t, const AttrSet& key, const SpkeyOptions& opts) {
    ActiveDomains own;
    const ActiveDomains* dom = opts.domains;
    if (!dom) {
        own = ActiveDomains::compute(t);
        dom = &own;
    }
    validate_key(t, key);
    MeasureResult res;
    size_t m = t.row_count();
    if (m == 0) {
        res.value = Rational(0, 1);
        return res;
    }
    KeyAnalysis a = analyze(t, key, *dom, opts.want_witness);
    res.value = Rational(static_cast<int64_t>(m - a.covered), static_cast<int64_t>(m));
    res.certificate.removed_rows = std::move(a.removed);
    res.witness = std::move(a.witness);
    res.warnings = std::move(a.warnings);
    res.stats = a.stats;
    return res;
}

MeasureResult g5_spkey(const Table& t, const AttrSet& key, const SpkeyOptions& opts) {
    validate_key(t, key);
    MeasureResult res;
    size_t m = t.row_count();
    if (m == 0) {
        res.value = Rational(0, 1);
        return res;
    }

    ActiveDomains dom = ActiveDomains::compute(t);
    append_scope_gap_warnings(t, key, dom, res.warnings);

    // Two rows complete and equal on the key clash in every world of every
    // extension: no addition separates them.
    std::unordered_map<std::vector<Sym>, size_t, ProjHash> complete;
    size_t incomplete = 0;
    bool any_all_null = false;
    std::vector<Sym> proj(key.size());
    for (size_t r = 0; r < m; ++r) {
        if (!t.total_on(r, key)) {
            ++incomplete;
            bool all_null = true;
            for (int a : key)
                if (!t.at(r, static_cast<size_t>(a)).is_null()) all_null = false;
            any_all_null = any_all_null || all_null;
            continue;
        }
        for (size_t i = 0; i < key.size(); ++i)
            proj[i] = t.at(r, static_cast<size_t>(key[i])).sym();
        auto [it, inserted] = complete.emplace(proj, r);
        if (!inserted) {
            res.status = Status::Undefined;
            res.warnings.push_back("rows " + std::to_string(it->second) + " and " +
                                   std::to_string(r) +
                                   " are complete and equal on the key; no addition separates them");
            return res;
        }
    }

    // A missing entry on a single-attribute key collides with whichever row
    // supplies the replacement value, in every extension.
    if (key.size() == 1 && incomplete > 0) {
        res.status = Status::Undefined;
        res.warnings.push_back(
            "single-attribute key with missing entries; every replacement value "
            "collides with the row that provides it");
        return res;
    }

    // Minimal fresh-row count. One fresh row per incomplete row always
    // suffices, except that a row missing the whole key may need one extra
    // row to mix symbols from. Satisfaction is monotone in the number of
    // fresh rows, so binary search finds the minimum.
    size_t bound = incomplete + (any_all_null ? 1 : 0);
    auto probe = [&](size_t p) -> bool {
        if (p == 0) return check_spkey(t, key, {nullptr, false}).holds;
        FreshExtension ext = extend_with_fresh_rows(t, p);
        return check_spkey(ext.table, key, {nullptr, false}).holds;
    };
    if (!probe(bound)) {
        res.status = Status::Undefined;
        res.warnings.push_back("no fresh-row repair exists within the addition bound");
        return res;
    }
    size_t lo = 0, hi = bound;
    while (lo < hi) {
        size_t mid = lo + (hi - lo) / 2;
        if (probe(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    size_t p = lo;
    if (p > m) {
        res.status = Status::Undefined;
        res.warnings.push_back("minimum addition count " + std::to_string(p) + " exceeds the " +
                               std::to_string(m) + " existing rows; the ratio would leave [0,1]");
        return res;
    }

    res.value = Rational(static_cast<int64_t>(p), static_cast<int64_t>(m));
    if (p > 0) {
        FreshExtension ext = extend_with_fresh_rows(t, p);
        res.certificate.added_rows = ext.added;
        if (opts.want_witness) {
            CheckResult check = check_spkey(ext.table, key, {nullptr, true});
            res.witness = std::move(check.witness);
        }
    } else if (opts.want_witness) {
        CheckResult check = check_spkey(t, key, {nullptr, true});
        res.witness = std::move(check.witness);
    }
    return res;
}

bool g3_equals_g5(const Table& t, const AttrSet& key) {
    SpkeyOptions opts;
    opts.want_witness = false;
    MeasureResult g5 = g5_spkey(t, key, opts);
    if (g5.status != Status::Exact) return false;
    MeasureResult g3 = g3_spkey(t, key, opts);
    return g3.value == g5.value;
}

} // namespace spq
