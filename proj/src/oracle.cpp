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
#include "spq/oracle.hpp"

#include <algorithm>

#include "spq/fresh.hpp"

namespace spq {

SpWorldEnumerator::SpWorldEnumerator(const Table& t, const OracleOptions& opts) : t_(t) {
    ActiveDomains own;
    const ActiveDomains* dom = opts.domains;
    if (!dom) {
        own = ActiveDomains::compute(t);
        dom = &own;
    }
    count_ = 1;
    for (size_t r = 0; r < t.row_count(); ++r)
        for (size_t c = 0; c < t.attribute_count(); ++c)
            if (t.at(r, c).is_null()) {
                cells_.emplace_back(r, c);
                pools_.push_back(dom->order[c]);
                count_ = saturating_mul(count_, pools_.back().size());
            }
    if (count_ > opts.guard)
        throw Error(Errc::SizeGuard, "replacement world count " + std::to_string(count_) +
                                         " exceeds guard " + std::to_string(opts.guard));
    counters_.assign(cells_.size(), 0);
    done_ = count_ == 0;
}

std::optional<Table> SpWorldEnumerator::next() {
    if (done_) return std::nullopt;
    if (started_) {
        size_t i = cells_.size();
        while (true) {
            if (i == 0) {
                done_ = true;
                return std::nullopt;
            }
            --i;
            if (++counters_[i] < pools_[i].size()) break;
            counters_[i] = 0;
        }
    }
    started_ = true;
    if (cells_.empty()) done_ = true;
    std::vector<Sym> vals(cells_.size());
    for (size_t i = 0; i < cells_.size(); ++i) vals[i] = pools_[i][counters_[i]];
    return t_.filled(cells_, vals);
}

namespace {

// Complete search over replacements of the missing cells within the
// constraint's scope. Rows with the fewest missing cells go first, so
// conflicts between concrete rows surface before any branching; a row is
// checked against all earlier rows as soon as its cells are set.
struct WorldSearch {
    const Table& t;
    const Constraint& c;
    const ActiveDomains& dom;
    uint64_t guard;
    uint64_t nodes = 0;

    AttrSet scope;
    size_t width = 0;
    std::vector<Sym> world;                   // rows * width, -1 until set
    std::vector<std::vector<size_t>> missing; // per row: scope positions to fill
    std::vector<size_t> order;                // visiting order over rows

    WorldSearch(const Table& table, const Constraint& con, const ActiveDomains& domains,
                uint64_t g)
        : t(table), c(con), dom(domains), guard(g) {
        scope = c.scope();
        width = scope.size();
        size_t m = t.row_count();
        world.assign(m * width, -1);
        missing.resize(m);
        order.resize(m);
        for (size_t r = 0; r < m; ++r) {
            order[r] = r;
            for (size_t i = 0; i < width; ++i) {
                Value v = t.at(r, static_cast<size_t>(scope[i]));
                if (v.is_null())
                    missing[r].push_back(i);
                else
                    world[r * width + i] = v.sym();
            }
        }
        std::stable_sort(order.begin(), order.end(), [this](size_t a, size_t b) {
            return missing[a].size() < missing[b].size();
        });
    }

    bool equal_on(size_t a, size_t b, const AttrSet& attrs) const {
        for (int attr : attrs) {
            size_t i = static_cast<size_t>(
                std::lower_bound(scope.begin(), scope.end(), attr) - scope.begin());
            if (world[a * width + i] != world[b * width + i]) return false;
        }
        return true;
    }

    // The row at `pos` is fully set; compare with every row set before it.
    bool row_ok(size_t pos) const {
        size_t r = order[pos];
        for (size_t p = 0; p < pos; ++p) {
            size_t s = order[p];
            switch (c.kind) {
            case ConstraintKind::Key:
                if (equal_on(s, r, c.key)) return false;
                break;
            case ConstraintKind::Fd:
                if (equal_on(s, r, c.fd.lhs) && !equal_on(s, r, c.fd.rhs)) return false;
                break;
            case ConstraintKind::System:
                for (const auto& k : c.system.keys)
                    if (equal_on(s, r, k)) return false;
                break;
            }
        }
        return true;
    }

    bool fill(size_t pos, size_t mi) {
        size_t r = order[pos];
        if (mi == missing[r].size()) {
            if (!row_ok(pos)) return false;
            return row(pos + 1);
        }
        size_t i = missing[r][mi];
        const auto& pool = dom.order[static_cast<size_t>(scope[i])];
        for (Sym s : pool) {
            if (++nodes > guard)
                throw Error(Errc::SizeGuard, "exhaustive search exceeded its guard");
            world[r * width + i] = s;
            if (fill(pos, mi + 1)) return true;
        }
        world[r * width + i] = -1;
        return false;
    }

    bool row(size_t pos) {
        if (pos == t.row_count()) return true;
        return fill(pos, 0);
    }
};

size_t incomplete_on(const Table& t, const AttrSet& attrs) {
    size_t n = 0;
    for (size_t r = 0; r < t.row_count(); ++r)
        if (!t.total_on(r, attrs)) ++n;
    return n;
}

} // namespace

bool oracle_check(const Table& t, const Constraint& c, const OracleOptions& opts) {
    ActiveDomains own;
    const ActiveDomains* dom = opts.domains;
    if (!dom) {
        own = ActiveDomains::compute(t);
        dom = &own;
    }
    WorldSearch ws(t, c, *dom, opts.guard);
    return ws.row(0);
}

Rational oracle_g3(const Table& t, const Constraint& c, const OracleOptions& opts) {
    size_t m = t.row_count();
    if (m == 0) return Rational(0, 1);
    if (m > 20) throw Error(Errc::SizeGuard, "subset scan limited to 20 rows");

    ActiveDomains frozen = ActiveDomains::compute(t);
    OracleOptions probe = opts;
    probe.domains = &frozen;

    for (size_t s = 0; s <= m; ++s) {
        // Subsets of size s in lexicographic order.
        std::vector<size_t> pick(s);
        for (size_t i = 0; i < s; ++i) pick[i] = i;
        auto advance = [&]() -> bool {
            size_t i = s;
            while (i-- > 0) {
                if (pick[i] < m - s + i) {
                    ++pick[i];
                    for (size_t k = i + 1; k < s; ++k) pick[k] = pick[k - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            Table rem = t.without_rows(pick);
            if (oracle_check(rem, c, probe))
                return Rational(static_cast<int64_t>(s), static_cast<int64_t>(m));
        } while (advance());
    }
    return Rational(1, 1); // removing everything always satisfies
}

std::optional<Rational> oracle_g5(const Table& t, const Constraint& c,
                                  const OracleOptions& opts) {
    if (c.kind == ConstraintKind::System)
        throw Error(Errc::BadArgument, "addition measure is not defined for key systems");
    size_t m = t.row_count();
    if (m == 0) return Rational(0, 1);

    const AttrSet& lhs = c.kind == ConstraintKind::Key ? c.key : c.fd.lhs;
    size_t bound = incomplete_on(t, lhs) + 1;
    OracleOptions probe;
    probe.guard = opts.guard;
    for (size_t p = 0; p <= bound; ++p) {
        Table ext = p == 0 ? t : extend_with_fresh_rows(t, p).table;
        if (oracle_check(ext, c, probe)) {
            if (p > m) return std::nullopt; // ratio would leave [0,1]
            return Rational(static_cast<int64_t>(p), static_cast<int64_t>(m));
        }
    }
    return std::nullopt;
}

} // namespace spq
