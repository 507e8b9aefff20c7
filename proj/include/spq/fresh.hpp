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

#include <string>
#include <vector>

#include "spq/table.hpp"

namespace spq {

// Hands out "fresh_<n>" names guaranteed absent from the given table's
// symbol pool and from everything generated earlier by this instance.
class FreshSymbols {
public:
    explicit FreshSymbols(const Table& t) : table_(t) {}
    std::string next();

private:
    const Table& table_;
    uint64_t counter_ = 0;
};

// Rows of brand-new symbols, pairwise distinct in every cell. Appending
// them widens every attribute's active domain without creating any
// coincidence with existing data.
std::vector<std::vector<std::optional<std::string>>> fresh_rows(const Table& t, size_t count,
                                                                FreshSymbols& gen);

// Convenience: the table extended by `count` all-fresh rows, plus the rows
// themselves (for certificates).
struct FreshExtension {
    Table table;
    std::vector<std::vector<std::optional<std::string>>> added;
};
FreshExtension extend_with_fresh_rows(const Table& t, size_t count);

} // namespace spq
