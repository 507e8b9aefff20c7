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

#include "spq/constraint.hpp"
#include "spq/measure.hpp"
#include "spq/table.hpp"

namespace spq {

struct SearchOptions {
    const ActiveDomains* domains = nullptr; // override, as in SpkeyOptions
    uint64_t node_cap = 0;                  // 0 = unlimited; else Exhausted past it
    bool want_witness = true;
};

// Does some replacement world satisfy X -> Y? Exact backtracking over
// per-row completions restricted to X∪Y, smallest-choice rows first,
// pruning on functional-map conflicts. Exponential in the worst case.
CheckResult check_spfd(const Table& t, const FdConstraint& fd, const SearchOptions& opts = {});

// Exact smallest fraction of rows to drop so the dependency holds in the
// rest (domains as of the input table). Branch and bound on kept rows.
MeasureResult g3_spfd(const Table& t, const FdConstraint& fd, const SearchOptions& opts = {});

// Exact smallest fraction of all-fresh rows to append so the dependency
// holds. Undefined when a conflict survives every extension or the minimum
// would exceed one.
MeasureResult g5_spfd(const Table& t, const FdConstraint& fd, const SearchOptions& opts = {});

} // namespace spq
