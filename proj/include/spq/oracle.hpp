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

#include <optional>

#include "spq/constraint.hpp"
#include "spq/rational.hpp"
#include "spq/table.hpp"

namespace spq {

// Deliberately naive ground truth for tiny instances. Verdicts come from
// complete search over per-cell replacements; measures from scanning
// removal subsets in increasing size, or fresh additions counting upward.
// Shares no algorithmic machinery with the polynomial or branch-and-bound
// paths it cross-checks.

struct OracleOptions {
    // Evaluate replacements against these domains instead of the table's
    // own; removal probes pass the unmodified table's domains here.
    const ActiveDomains* domains = nullptr;
    uint64_t guard = 10'000'000; // cap on worlds / candidate assignments
};

// Streams every complete replacement world of the whole schema exactly
// once, deterministically. The count is the product over missing cells of
// the owning attribute's domain size; zero when some such domain is empty.
class SpWorldEnumerator {
public:
    explicit SpWorldEnumerator(const Table& t, const OracleOptions& opts = {});
    uint64_t world_count() const { return count_; }
    std::optional<Table> next();

private:
    const Table& t_;
    std::vector<std::pair<size_t, size_t>> cells_;
    std::vector<std::vector<Sym>> pools_;
    std::vector<size_t> counters_;
    uint64_t count_ = 0;
    bool done_ = false;
    bool started_ = false;
};

bool oracle_check(const Table& t, const Constraint& c, const OracleOptions& opts = {});

// Minimum removal fraction by subset scan; probes keep the input table's
// domains, matching the semantics of the fast paths.
Rational oracle_g3(const Table& t, const Constraint& c, const OracleOptions& opts = {});

// Minimum addition fraction by counting fresh rows upward; nullopt when no
// bounded extension helps or the ratio would leave [0,1].
std::optional<Rational> oracle_g5(const Table& t, const Constraint& c,
                                  const OracleOptions& opts = {});

} // namespace spq
