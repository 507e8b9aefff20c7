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
#include "spq/keysystem.hpp"

#include <algorithm>

#include "spq/internal.hpp"
#include "spq/spkey.hpp"

namespace spq {

namespace {

struct SystemSearch {
    const Table& t;
    const ActiveDomains& dom;
    AttrSet scope;
    std::vector<std::vector<size_t>> key_pos; // per key: positions inside scope
    std::vector<size_t> order;                // rows, fewest completions first
    std::vector<ProjSet> taken;               // per key: projections in use
    uint64_t node_cap;
    uint64_t nodes = 0;

    SystemSearch(const Table& table, const KeySystem& ks, const ActiveDomains& domains,
                 uint64_t cap)
        : t(table), dom(domains), node_cap(cap) {
        Constraint c = Constraint::make_system(ks);
        scope = c.scope();
        for (const auto& k : ks.keys) {
            std::vector<size_t> pos;
            for (int a : k)
                pos.push_back(static_cast<size_t>(
                    std::lower_bound(scope.begin(), scope.end(), a) - scope.begin()));
            key_pos.push_back(std::move(pos));
        }
        taken.resize(ks.keys.size());
        order.resize(t.row_count());
        std::vector<uint64_t> ell(t.row_count());
        for (size_t r = 0; r < t.row_count(); ++r) {
            ell[r] = extension_count(t, r, scope, dom);
            order[r] = r;
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return ell[a] < ell[b]; });
    }

    void bump() {
        ++nodes;
        if (node_cap && nodes > node_cap) throw Exhausted{nodes};
    }

    bool push(const std::vector<Sym>& proj) {
        std::vector<std::vector<Sym>> subs(key_pos.size());
        for (size_t k = 0; k < key_pos.size(); ++k) {
            auto& sub = subs[k];
            sub.resize(key_pos[k].size());
            for (size_t i = 0; i < key_pos[k].size(); ++i) sub[i] = proj[key_pos[k][i]];
            if (taken[k].count(sub)) return false;
        }
        for (size_t k = 0; k < key_pos.size(); ++k) taken[k].insert(std::move(subs[k]));
        return true;
    }

    void pop(const std::vector<Sym>& proj) {
        std::vector<Sym> sub;
        for (size_t k = 0; k < key_pos.size(); ++k) {
            sub.resize(key_pos[k].size());
            for (size_t i = 0; i < key_pos[k].size(); ++i) sub[i] = proj[key_pos[k][i]];
            taken[k].erase(sub);
        }
    }
};

std::optional<Witness> make_witness(const Table& t, const AttrSet& scope,
                                    const std::vector<std::optional<std::vector<Sym>>>& chosen) {
    Witness w;
    w.scope = scope;
    w.rows.resize(t.row_count());
    for (size_t r = 0; r < t.row_count(); ++r) {
        if (!chosen[r]) continue;
        std::vector<std::string> names;
        names.reserve(scope.size());
        for (Sym s : *chosen[r]) names.push_back(t.symbol_name(s));
        w.rows[r] = std::move(names);
    }
    return w;
}

} // namespace

CheckResult check_spkey_system(const Table& t, const KeySystem& ks, const SearchOptions& opts) {
    validate_system(t, ks);
    ActiveDomains own;
    const ActiveDomains* dom = opts.domains;
    if (!dom) {
        own = ActiveDomains::compute(t);
        dom = &own;
    }
    CheckResult res;
    Constraint c = Constraint::make_system(ks);
    append_scope_gap_warnings(t, c.scope(), *dom, res.warnings);
    if (t.row_count() == 0) {
        res.holds = true;
        return res;
    }

    SystemSearch search(t, ks, *dom, opts.node_cap);
    std::vector<std::optional<std::vector<Sym>>> chosen(t.row_count());
    auto dfs = [&](auto&& self, size_t i) -> bool {
        if (i == search.order.size()) return true;
        size_t row = search.order[i];
        ExtensionEnumerator en(t, row, search.scope, *dom);
        std::vector<Sym> cand; // per level: the recursion below reuses its own
        while (en.next(cand)) {
            search.bump();
            if (!search.push(cand)) continue;
            chosen[row] = cand;
            if (self(self, i + 1)) return true;
            chosen[row].reset();
            search.pop(cand);
        }
        return false;
    };
    try {
        res.holds = dfs(dfs, 0);
    } catch (const Exhausted& e) {
        res.status = Status::Exhausted;
        res.nodes = e.nodes;
        return res;
    }
    res.nodes = search.nodes;
    if (res.holds && opts.want_witness) res.witness = make_witness(t, search.scope, chosen);
    return res;
}

MeasureResult g3_spkey_system(const Table& t, const KeySystem& ks, const SearchOptions& opts) {
    validate_system(t, ks);
    MeasureResult res;
    size_t m = t.row_count();
    if (m == 0) {
        res.value = Rational(0, 1);
        return res;
    }
    ActiveDomains own;
    const ActiveDomains* dom = opts.domains;
    if (!dom) {
        own = ActiveDomains::compute(t);
        dom = &own;
    }
    Constraint c = Constraint::make_system(ks);
    append_scope_gap_warnings(t, c.scope(), *dom, res.warnings);

    SystemSearch search(t, ks, *dom, opts.node_cap);
    std::vector<std::optional<std::vector<Sym>>> chosen(m);
    size_t best = m + 1;
    std::vector<std::optional<std::vector<Sym>>> best_chosen;

    auto dfs = [&](auto&& self, size_t i, size_t dropped) -> void {
        if (dropped >= best) return;
        if (i == search.order.size()) {
            best = dropped;
            best_chosen = chosen;
            return;
        }
        size_t row = search.order[i];
        ExtensionEnumerator en(t, row, search.scope, *dom);
        std::vector<Sym> cand;
        while (en.next(cand)) {
            search.bump();
            if (!search.push(cand)) continue;
            chosen[row] = cand;
            self(self, i + 1, dropped);
            chosen[row].reset();
            search.pop(cand);
        }
        self(self, i + 1, dropped + 1);
    };
    try {
        dfs(dfs, 0, 0);
    } catch (const Exhausted& e) {
        res.status = Status::Exhausted;
        res.nodes = e.nodes;
        return res;
    }
    res.nodes = search.nodes;
    res.value = Rational(static_cast<int64_t>(best), static_cast<int64_t>(m));
    for (size_t r = 0; r < m; ++r)
        if (!best_chosen[r]) res.certificate.removed_rows.push_back(r);
    if (opts.want_witness) res.witness = make_witness(t, search.scope, best_chosen);
    return res;
}

MaxG3Result max_g3_decision(const Table& t, const KeySystem& ks, const SearchOptions& opts) {
    validate_system(t, ks);
    MaxG3Result res;
    SpkeyOptions kopts;
    kopts.want_witness = false;
    for (const auto& k : ks.keys) {
        MeasureResult r = g3_spkey(t, k, kopts);
        res.per_key.push_back(*r.value);
    }
    res.argmax = 0;
    for (size_t i = 1; i < res.per_key.size(); ++i)
        if (res.per_key[i] > res.per_key[res.argmax]) res.argmax = i;

    res.system_detail = g3_spkey_system(t, ks, opts);
    res.nodes = res.system_detail.nodes;
    res.warnings = res.system_detail.warnings;
    if (res.system_detail.status != Status::Exact) {
        res.status = res.system_detail.status;
        return res;
    }
    res.system_value = *res.system_detail.value;
    res.equal = res.per_key.empty() ? true : res.system_value == res.per_key[res.argmax];
    return res;
}

} // namespace spq
