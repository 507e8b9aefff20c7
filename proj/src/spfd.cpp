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
#include "spq/spfd.hpp"

#include <algorithm>
#include <unordered_map>

#include "spq/fresh.hpp"
#include "spq/internal.hpp"

namespace spq {

namespace {

// Rows identical on the scope share one completion: in any satisfying
// world the copies can be normalized to a common projection, and dropping
// only part of such a group never beats keeping the whole of it.
struct Group {
    size_t first_row = 0;
    std::vector<size_t> rows;
    uint64_t completions = 0;
};

struct FdSearch {
    const Table& t;
    const ActiveDomains& dom;
    AttrSet scope;
    std::vector<size_t> x_pos; // positions of lhs attrs inside scope
    std::vector<size_t> y_pos;
    std::vector<Group> groups;
    uint64_t node_cap;
    uint64_t nodes = 0;

    // X-projection -> Y-projection forced so far.
    std::unordered_map<std::vector<Sym>, std::vector<Sym>, ProjHash> fmap;

    FdSearch(const Table& table, const FdConstraint& fd, const ActiveDomains& domains,
             uint64_t cap)
        : t(table), dom(domains), node_cap(cap) {
        Constraint c = Constraint::make_fd(fd);
        scope = c.scope();
        for (int a : fd.lhs)
            x_pos.push_back(static_cast<size_t>(
                std::lower_bound(scope.begin(), scope.end(), a) - scope.begin()));
        for (int a : fd.rhs)
            y_pos.push_back(static_cast<size_t>(
                std::lower_bound(scope.begin(), scope.end(), a) - scope.begin()));

        std::unordered_map<std::vector<Sym>, size_t, ProjHash> ids;
        std::vector<Sym> pattern(scope.size());
        for (size_t r = 0; r < t.row_count(); ++r) {
            for (size_t i = 0; i < scope.size(); ++i) {
                Value v = t.at(r, static_cast<size_t>(scope[i]));
                pattern[i] = v.is_null() ? -1 : v.sym();
            }
            auto [it, inserted] = ids.emplace(pattern, groups.size());
            if (inserted) groups.push_back({r, {}, extension_count(t, r, scope, dom)});
            groups[it->second].rows.push_back(r);
        }
        std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
            if (a.completions != b.completions) return a.completions < b.completions;
            return a.first_row < b.first_row;
        });
    }

    void bump() {
        ++nodes;
        if (node_cap && nodes > node_cap) throw Exhausted{nodes};
    }

    std::vector<Sym> project(const std::vector<Sym>& proj, const std::vector<size_t>& pos) const {
        std::vector<Sym> out(pos.size());
        for (size_t i = 0; i < pos.size(); ++i) out[i] = proj[pos[i]];
        return out;
    }

    // Tries to register proj's X->Y obligation; returns false on conflict.
    // Sets `inserted` so the caller can undo.
    bool push_proj(const std::vector<Sym>& proj, bool& inserted) {
        auto x = project(proj, x_pos);
        auto y = project(proj, y_pos);
        auto it = fmap.find(x);
        if (it != fmap.end()) {
            inserted = false;
            return it->second == y;
        }
        fmap.emplace(std::move(x), std::move(y));
        inserted = true;
        return true;
    }

    void pop_proj(const std::vector<Sym>& proj) { fmap.erase(project(proj, x_pos)); }
};

std::optional<Witness> make_witness(const Table& t, const AttrSet& scope,
                                    const std::vector<Group>& groups,
                                    const std::vector<std::optional<std::vector<Sym>>>& chosen) {
    Witness w;
    w.scope = scope;
    w.rows.resize(t.row_count());
    for (size_t g = 0; g < groups.size(); ++g) {
        if (!chosen[g]) continue;
        std::vector<std::string> names;
        names.reserve(scope.size());
        for (Sym s : *chosen[g]) names.push_back(t.symbol_name(s));
        for (size_t r : groups[g].rows) w.rows[r] = names;
    }
    return w;
}

} // namespace

CheckResult check_spfd(const Table& t, const FdConstraint& fd, const SearchOptions& opts) {
    validate_fd(t, fd);
    ActiveDomains own;
    const ActiveDomains* dom = opts.domains;
    if (!dom) {
        own = ActiveDomains::compute(t);
        dom = &own;
    }

    CheckResult res;
    Constraint c = Constraint::make_fd(fd);
    append_scope_gap_warnings(t, c.scope(), *dom, res.warnings);
    if (t.row_count() == 0) {
        res.holds = true;
        return res;
    }

    FdSearch search(t, fd, *dom, opts.node_cap);
    std::vector<std::optional<std::vector<Sym>>> chosen(search.groups.size());

    auto dfs = [&](auto&& self, size_t gi) -> bool {
        if (gi == search.groups.size()) return true;
        ExtensionEnumerator en(t, search.groups[gi].first_row, search.scope, *dom);
        std::vector<Sym> cand; // per level: the recursion below reuses its own
        while (en.next(cand)) {
            search.bump();
            bool inserted = false;
            if (!search.push_proj(cand, inserted)) continue;
            chosen[gi] = cand;
            if (self(self, gi + 1)) return true;
            chosen[gi].reset();
            if (inserted) search.pop_proj(cand);
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
    if (res.holds && opts.want_witness)
        res.witness = make_witness(t, search.scope, search.groups, chosen);
    return res;
}

MeasureResult g3_spfd(const Table& t, const FdConstraint& fd, const SearchOptions& opts) {
    validate_fd(t, fd);
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
    Constraint c = Constraint::make_fd(fd);
    append_scope_gap_warnings(t, c.scope(), *dom, res.warnings);

    FdSearch search(t, fd, *dom, opts.node_cap);
    size_t n_groups = search.groups.size();
    std::vector<std::optional<std::vector<Sym>>> chosen(n_groups);

    size_t best = m + 1;
    std::vector<std::optional<std::vector<Sym>>> best_chosen;

    auto dfs = [&](auto&& self, size_t gi, size_t dropped) -> void {
        if (dropped >= best) return;
        if (gi == n_groups) {
            best = dropped;
            best_chosen = chosen;
            return;
        }
        ExtensionEnumerator en(t, search.groups[gi].first_row, search.scope, *dom);
        std::vector<Sym> cand;
        while (en.next(cand)) {
            search.bump();
            bool inserted = false;
            if (!search.push_proj(cand, inserted)) continue;
            chosen[gi] = cand;
            self(self, gi + 1, dropped);
            chosen[gi].reset();
            if (inserted) search.pop_proj(cand);
        }
        // Drop the whole group of identical rows.
        self(self, gi + 1, dropped + search.groups[gi].rows.size());
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
    for (size_t g = 0; g < n_groups; ++g)
        if (!best_chosen[g])
            res.certificate.removed_rows.insert(res.certificate.removed_rows.end(),
                                                search.groups[g].rows.begin(),
                                                search.groups[g].rows.end());
    std::sort(res.certificate.removed_rows.begin(), res.certificate.removed_rows.end());
    if (opts.want_witness) res.witness = make_witness(t, search.scope, search.groups, best_chosen);
    return res;
}

MeasureResult g5_spfd(const Table& t, const FdConstraint& fd, const SearchOptions& opts) {
    validate_fd(t, fd);
    MeasureResult res;
    size_t m = t.row_count();
    if (m == 0) {
        res.value = Rational(0, 1);
        return res;
    }
    ActiveDomains dom = ActiveDomains::compute(t);
    Constraint c = Constraint::make_fd(fd);
    append_scope_gap_warnings(t, c.scope(), dom, res.warnings);

    // Two rows complete and equal on X that disagree with concrete values
    // somewhere on Y violate the dependency in every world of every
    // extension.
    {
        std::unordered_map<std::vector<Sym>, std::vector<size_t>, ProjHash> by_x;
        std::vector<Sym> x(fd.lhs.size());
        for (size_t r = 0; r < m; ++r) {
            if (!t.total_on(r, fd.lhs)) continue;
            for (size_t i = 0; i < fd.lhs.size(); ++i)
                x[i] = t.at(r, static_cast<size_t>(fd.lhs[i])).sym();
            by_x[x].push_back(r);
        }
        for (const auto& [xp, rows] : by_x) {
            for (int a : fd.rhs) {
                Sym seen = -1;
                size_t seen_row = 0;
                for (size_t r : rows) {
                    Value v = t.at(r, static_cast<size_t>(a));
                    if (v.is_null()) continue;
                    if (seen >= 0 && v.sym() != seen) {
                        res.status = Status::Undefined;
                        res.warnings.push_back(
                            "rows " + std::to_string(seen_row) + " and " + std::to_string(r) +
                            " agree and are complete on the left side but hold different values "
                            "of '" + t.attributes()[static_cast<size_t>(a)] +
                            "'; no addition repairs this");
                        return res;
                    }
                    if (seen < 0) {
                        seen = v.sym();
                        seen_row = r;
                    }
                }
            }
        }
    }

    size_t incomplete_x = 0;
    for (size_t r = 0; r < m; ++r)
        if (!t.total_on(r, fd.lhs)) ++incomplete_x;
    size_t bound = incomplete_x + 1;

    SearchOptions probe_opts;
    probe_opts.node_cap = opts.node_cap;
    probe_opts.want_witness = false;

    std::optional<size_t> found;
    uint64_t nodes = 0;
    for (size_t p = 0; p <= bound; ++p) {
        Table probe_table = p == 0 ? t : extend_with_fresh_rows(t, p).table;
        CheckResult check = check_spfd(probe_table, fd, probe_opts);
        nodes += check.nodes;
        if (check.status == Status::Exhausted) {
            res.status = Status::Exhausted;
            res.nodes = nodes;
            return res;
        }
        if (check.holds) {
            found = p;
            break;
        }
    }
    res.nodes = nodes;
    if (!found) {
        // Rows missing part of a one-attribute left side may be forced to
        // copy some provider's left value while conflicting on the right;
        // then no extension of any size helps.
        res.status = Status::Undefined;
        res.warnings.push_back("no extension satisfies the dependency (every replacement of the "
                               "missing left-side entries inherits a conflicting provider)");
        return res;
    }
    if (*found > m) {
        res.status = Status::Undefined;
        res.warnings.push_back("minimum addition count " + std::to_string(*found) +
                               " exceeds the " + std::to_string(m) +
                               " existing rows; the ratio would leave [0,1]");
        return res;
    }

    res.value = Rational(static_cast<int64_t>(*found), static_cast<int64_t>(m));
    if (*found > 0) {
        FreshExtension ext = extend_with_fresh_rows(t, *found);
        res.certificate.added_rows = ext.added;
        if (opts.want_witness) {
            SearchOptions wopts;
            wopts.node_cap = opts.node_cap;
            CheckResult check = check_spfd(ext.table, fd, wopts);
            res.witness = std::move(check.witness);
        }
    } else if (opts.want_witness) {
        SearchOptions wopts;
        wopts.node_cap = opts.node_cap;
        CheckResult check = check_spfd(t, fd, wopts);
        res.witness = std::move(check.witness);
    }
    return res;
}

} // namespace spq
