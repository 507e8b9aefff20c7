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
#include "spq/fresh.hpp"

namespace spq {

std::string FreshSymbols::next() {
    while (true) {
        ++counter_;
        std::string name = "fresh_" + std::to_string(counter_);
        if (!table_.has_symbol(name)) return name;
    }
}

std::vector<std::vector<std::optional<std::string>>> fresh_rows(const Table& t, size_t count,
                                                                FreshSymbols& gen) {
    std::vector<std::vector<std::optional<std::string>>> rows;
    rows.reserve(count);
    for (size_t r = 0; r < count; ++r) {
        std::vector<std::optional<std::string>> row;
        row.reserve(t.attribute_count());
        for (size_t c = 0; c < t.attribute_count(); ++c) row.emplace_back(gen.next());
        rows.push_back(std::move(row));
    }
    return rows;
}

FreshExtension extend_with_fresh_rows(const Table& t, size_t count) {
    FreshSymbols gen(t);
    FreshExtension ext;
    ext.added = fresh_rows(t, count, gen);
    ext.table = t.with_appended(ext.added);
    return ext;
}

} // namespace spq
