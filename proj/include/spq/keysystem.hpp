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
#include "spq/spfd.hpp"

namespace spq {

// Does a single replacement world make every member of the family a key?
// Exact backtracking with one distinctness set per key.
CheckResult check_spkey_system(const Table& t, const KeySystem& ks,
                               const SearchOptions& opts = {});

// Exact smallest fraction of rows to drop so one world satisfies the whole
// family (domains as of the input table).
MeasureResult g3_spkey_system(const Table& t, const KeySystem& ks,
                              const SearchOptions& opts = {});

struct MaxG3Result {
    Status status = Status::Exact;
    bool equal = false;                 // family measure == max of member measures
    Rational system_value;
    std::vector<Rational> per_key;
    size_t argmax = 0;                  // member attaining the max
    MeasureResult system_detail;        // certificate + witness for the family
    std::vector<std::string> warnings;
    uint64_t nodes = 0;
};

// Compares the family's removal measure against the largest member measure
// (members computed on the polynomial path, the family exactly).
MaxG3Result max_g3_decision(const Table& t, const KeySystem& ks, const SearchOptions& opts = {});

} // namespace spq
