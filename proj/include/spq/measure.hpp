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
#include <string>
#include <vector>

#include "spq/rational.hpp"
#include "spq/table.hpp"

namespace spq {

enum class Status { Exact, Exhausted, Undefined, Error };

inline const char* status_name(Status s) {
    switch (s) {
    case Status::Exact: return "exact";
    case Status::Exhausted: return "exhausted";
    case Status::Undefined: return "undefined";
    case Status::Error: return "error";
    }
    return "error";
}

// One replacement-world assignment restricted to the constraint's scope.
// rows[i] is the projection chosen for row i (symbol text, aligned with
// `scope`), or nullopt for rows not covered (e.g. removed ones).
struct Witness {
    AttrSet scope;
    std::vector<std::optional<std::vector<std::string>>> rows;
};

// Proof object for a verdict or measure. For removal measures,
// removed_rows lists bag indices; for addition measures, added_rows holds
// the appended tuples (full schema width, symbol text).
struct Certificate {
    std::vector<size_t> removed_rows;
    std::vector<std::vector<std::optional<std::string>>> added_rows;
};

struct CheckResult {
    Status status = Status::Exact;
    bool holds = false;
    std::optional<Witness> witness;
    std::vector<std::string> warnings;
    uint64_t nodes = 0;
};

// Effort counters for the pruned-graph key path.
struct PrunedStats {
    size_t cut = 0;                // tuples handled by the matching stage
    size_t materialized_right = 0; // distinct projections built for it
    size_t greedy_enumerated = 0;  // candidates scanned by the lazy tail
};

struct MeasureResult {
    Status status = Status::Exact;
    std::optional<Rational> value;
    Certificate certificate;
    std::optional<Witness> witness;
    std::vector<std::string> warnings;
    uint64_t nodes = 0;
    std::optional<PrunedStats> stats;
};

} // namespace spq
