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

#include <cstdint>
#include <string>
#include <vector>

#include "spq/table.hpp"

namespace spq {

// splitmix64: fixed, widely documented update, so identical specs yield
// identical tables on any platform.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [0,1) with 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
};

struct GenSpec {
    uint64_t seed = 1;
    size_t rows = 0;
    size_t cols = 1;
    size_t symbols = 1;     // symbol pool size per column
    double null_rate = 0.0; // per-cell probability of a missing value
    double dup_rate = 0.0;  // probability a row repeats its predecessor
};

// Reproducible random table: attributes c1..cN, cells drawn independently.
Table random_table(const GenSpec& spec);

// Small built-in tables used across the test suites and handy for demos.
Table fixture(const std::string& name);
std::vector<std::string> fixture_names();

} // namespace spq
