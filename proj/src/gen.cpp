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
#include "spq/gen.hpp"

namespace spq {

Table random_table(const GenSpec& spec) {
    if (spec.cols == 0) throw Error(Errc::BadArgument, "need at least one column");
    if (spec.null_rate < 0.0 || spec.null_rate > 1.0 || spec.dup_rate < 0.0 ||
        spec.dup_rate > 1.0)
        throw Error(Errc::BadArgument, "rates must lie in [0,1]");

    SplitMix64 rng(spec.seed);
    std::vector<std::string> attrs;
    for (size_t c = 0; c < spec.cols; ++c) attrs.push_back("c" + std::to_string(c + 1));

    std::vector<std::vector<std::optional<std::string>>> rows;
    rows.reserve(spec.rows);
    for (size_t r = 0; r < spec.rows; ++r) {
        if (r > 0 && spec.dup_rate > 0.0 && rng.unit() < spec.dup_rate) {
            rows.push_back(rows.back());
            continue;
        }
        std::vector<std::optional<std::string>> row;
        row.reserve(spec.cols);
        for (size_t c = 0; c < spec.cols; ++c) {
            if (rng.unit() < spec.null_rate) {
                row.emplace_back(std::nullopt);
            } else {
                uint64_t s = rng.below(spec.symbols == 0 ? 1 : spec.symbols);
                row.emplace_back("s" + std::to_string(s + 1));
            }
        }
        rows.push_back(std::move(row));
    }
    return Table::from_rows(std::move(attrs), rows);
}

namespace {

const std::optional<std::string> N = std::nullopt;

} // namespace

Table fixture(const std::string& name) {
    if (name == "cars") {
        return Table::from_rows({"Car_Model", "DoorNo", "Engine_Type"},
                                {{"BMW I3", "4 doors", N},
                                 {"BMW I3", N, "electric"},
                                 {"Ford explorer", N, "V8"},
                                 {"Ford explorer", N, "V6"}});
    }
    if (name == "pair") {
        return Table::from_rows({"X1", "X2"}, {{N, "1"}, {"2", N}, {"2", N}, {"2", "2"}});
    }
    if (name == "pair_reduced") {
        return Table::from_rows({"X1", "X2"}, {{N, "1"}, {"2", "2"}});
    }
    if (name == "pair_extended") {
        return Table::from_rows({"X1", "X2"},
                                {{N, "1"}, {"2", N}, {"2", N}, {"2", "2"}, {"3", "3"}});
    }
    if (name == "trio") {
        return Table::from_rows({"A1", "A2", "A3"},
                                {{"1", N, "1"}, {"1", "2", "2"}, {"2", "1", "1"}, {"2", "1", "1"}});
    }
    throw Error(Errc::BadArgument, "unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
    return {"cars", "pair", "pair_reduced", "pair_extended", "trio"};
}

} // namespace spq
