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
#include "spq/validate.hpp"

#include <algorithm>
#include <map>

#include "spq/internal.hpp"
#include "spq/keysystem.hpp"
#include "spq/spfd.hpp"
#include "spq/spkey.hpp"

namespace spq {

CheckResult run_check(const Table& t, const Constraint& c, const ActiveDomains* dom,
                      uint64_t node_cap, bool want_witness) {
    switch (c.kind) {
    case ConstraintKind::Key: {
        SpkeyOptions opts;
        opts.domains = dom;
        opts.want_witness = want_witness;
        return check_spkey(t, c.key, opts);
    }
    case ConstraintKind::Fd: {
        SearchOptions opts;
        opts.domains = dom;
        opts.node_cap = node_cap;
        opts.want_witness = want_witness;
        return check_spfd(t, c.fd, opts);
    }
    case ConstraintKind::System: {
        SearchOptions opts;
        opts.domains = dom;
        opts.node_cap = node_cap;
        opts.want_witness = want_witness;
        return check_spkey_system(t, c.system, opts);
    }
    }
    throw Error(Errc::BadArgument, "unreachable constraint kind");
}

namespace {

// Extracts the positions of `attrs` inside the sorted scope vector.
std::vector<size_t> positions_in(const AttrSet& scope, const AttrSet& attrs) {
    std::vector<size_t> pos;
    for (int a : attrs)
        pos.push_back(static_cast<size_t>(std::lower_bound(scope.begin(), scope.end(), a) -
                                          scope.begin()));
    return pos;
}

std::vector<std::string> slice(const std::vector<std::string>& proj,
                               const std::vector<size_t>& pos) {
    std::vector<std::string> out;
    out.reserve(pos.size());
    for (size_t p : pos) out.push_back(proj[p]);
    return out;
}

} // namespace

Validation validate_witness(const Table& t, const Constraint& c, const Witness& w,
                            const ActiveDomains& dom) {
    Validation v;
    AttrSet scope = c.scope();
    if (w.scope != scope) {
        v.fail("witness scope does not match the constraint scope");
        return v;
    }
    if (w.rows.size() != t.row_count()) {
        v.fail("witness row count does not match the table");
        return v;
    }

    // Cell-level validity: agree with concrete cells, replacements drawn
    // from the allowed domains.
    for (size_t r = 0; r < t.row_count(); ++r) {
        if (!w.rows[r]) continue;
        const auto& proj = *w.rows[r];
        if (proj.size() != scope.size()) {
            v.fail("row " + std::to_string(r) + ": projection width mismatch");
            continue;
        }
        for (size_t i = 0; i < scope.size(); ++i) {
            size_t col = static_cast<size_t>(scope[i]);
            Value cell = t.at(r, col);
            if (!cell.is_null()) {
                if (t.symbol_name(cell.sym()) != proj[i])
                    v.fail("row " + std::to_string(r) + ": projection changes a concrete cell");
                continue;
            }
            bool in_domain = false;
            for (Sym s : dom.order[col])
                if (t.symbol_name(s) == proj[i]) {
                    in_domain = true;
                    break;
                }
            if (!in_domain)
                v.fail("row " + std::to_string(r) + ": replacement '" + proj[i] +
                       "' is outside the allowed domain of '" + t.attributes()[col] + "'");
        }
    }

    // Constraint-level validity over the covered rows.
    std::vector<size_t> covered;
    for (size_t r = 0; r < t.row_count(); ++r)
        if (w.rows[r]) covered.push_back(r);

    auto check_key_distinct = [&](const AttrSet& key, const char* what) {
        auto pos = positions_in(scope, key);
        std::map<std::vector<std::string>, size_t> seen;
        for (size_t r : covered) {
            auto sub = slice(*w.rows[r], pos);
            auto [it, inserted] = seen.emplace(sub, r);
            if (!inserted)
                v.fail(std::string(what) + ": rows " + std::to_string(it->second) + " and " +
                       std::to_string(r) + " share a projection");
        }
    };

    switch (c.kind) {
    case ConstraintKind::Key:
        check_key_distinct(c.key, "key");
        break;
    case ConstraintKind::System:
        for (const auto& k : c.system.keys) check_key_distinct(k, "system key");
        break;
    case ConstraintKind::Fd: {
        auto xpos = positions_in(scope, c.fd.lhs);
        auto ypos = positions_in(scope, c.fd.rhs);
        std::map<std::vector<std::string>, std::pair<std::vector<std::string>, size_t>> fmap;
        for (size_t r : covered) {
            auto x = slice(*w.rows[r], xpos);
            auto y = slice(*w.rows[r], ypos);
            auto it = fmap.find(x);
            if (it == fmap.end())
                fmap.emplace(x, std::make_pair(y, r));
            else if (it->second.first != y)
                v.fail("dependency: rows " + std::to_string(it->second.second) + " and " +
                       std::to_string(r) + " map one left side to two right sides");
        }
        break;
    }
    }
    return v;
}

Validation validate_removal_certificate(const Table& t, const Constraint& c,
                                        const MeasureResult& r) {
    Validation v;
    if (r.status != Status::Exact || !r.value) {
        v.fail("no exact value to validate");
        return v;
    }
    size_t m = t.row_count();
    if (m == 0) return v;
    if (Rational(static_cast<int64_t>(r.certificate.removed_rows.size()),
                 static_cast<int64_t>(m)) != *r.value)
        v.fail("removal count does not match the reported value");

    // Removals may shrink a column's value set, so the re-check runs
    // against the measured table's domains.
    ActiveDomains frozen = ActiveDomains::compute(t);
    Table rest = t.without_rows(r.certificate.removed_rows);
    CheckResult check = run_check(rest, c, &frozen);
    if (check.status != Status::Exact || !check.holds)
        v.fail("constraint still fails after applying the removal certificate");

    if (r.witness) {
        std::vector<bool> removed(m, false);
        for (size_t row : r.certificate.removed_rows) removed[row] = true;
        for (size_t row = 0; row < m; ++row) {
            bool has = r.witness->rows[row].has_value();
            if (has == removed[row])
                v.fail("witness coverage disagrees with the removal set at row " +
                       std::to_string(row));
        }
        Validation wv = validate_witness(t, c, *r.witness, frozen);
        if (!wv.ok) {
            v.ok = false;
            v.problems.insert(v.problems.end(), wv.problems.begin(), wv.problems.end());
        }
    }
    return v;
}

Validation validate_addition_certificate(const Table& t, const Constraint& c,
                                         const MeasureResult& r) {
    Validation v;
    if (r.status != Status::Exact || !r.value) {
        v.fail("no exact value to validate");
        return v;
    }
    size_t m = t.row_count();
    if (m == 0) return v;
    if (Rational(static_cast<int64_t>(r.certificate.added_rows.size()),
                 static_cast<int64_t>(m)) != *r.value)
        v.fail("addition count does not match the reported value");

    Table ext = t.with_appended(r.certificate.added_rows);
    CheckResult check = run_check(ext, c, nullptr);
    if (check.status != Status::Exact || !check.holds)
        v.fail("constraint still fails after applying the addition certificate");

    if (r.witness) {
        for (size_t row = 0; row < ext.row_count(); ++row)
            if (row >= r.witness->rows.size() || !r.witness->rows[row])
                v.fail("witness does not cover row " + std::to_string(row) +
                       " of the extended table");
        ActiveDomains dom = ActiveDomains::compute(ext);
        Validation wv = validate_witness(ext, c, *r.witness, dom);
        if (!wv.ok) {
            v.ok = false;
            v.problems.insert(v.problems.end(), wv.problems.begin(), wv.problems.end());
        }
    }
    return v;
}

} // namespace spq
