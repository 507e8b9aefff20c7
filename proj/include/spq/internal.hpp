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

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "spq/table.hpp"

namespace spq {

struct ProjHash {
    size_t operator()(const std::vector<Sym>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (Sym s : v) {
            h ^= static_cast<uint64_t>(static_cast<uint32_t>(s));
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

using ProjSet = std::unordered_set<std::vector<Sym>, ProjHash>;

// Constraints are evaluated on their own attributes. An attribute outside
// the scope whose column is entirely null admits no replacement value at
// all, so no complete world of the full schema exists; surface that.
inline void append_scope_gap_warnings(const Table& t, const AttrSet& scope,
                                      const ActiveDomains& dom,
                                      std::vector<std::string>& warnings) {
    if (t.row_count() == 0) return;
    for (size_t a = 0; a < t.attribute_count(); ++a) {
        if (std::binary_search(scope.begin(), scope.end(), static_cast<int>(a))) continue;
        if (dom.size(static_cast<int>(a)) == 0)
            warnings.push_back("attribute '" + t.attributes()[a] +
                               "' has no non-null values; no complete replacement world exists "
                               "for the full schema (constraint evaluated on its own attributes)");
    }
}

} // namespace spq
