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

namespace spq {

struct Validation {
    bool ok = true;
    std::vector<std::string> problems;

    void fail(std::string msg) {
        ok = false;
        problems.push_back(std::move(msg));
    }
};

// Checks a witness directly against the definition: projections agree with
// the row's concrete cells, draw replacements from the given domains, and
// jointly satisfy the constraint. No search or matching involved.
Validation validate_witness(const Table& t, const Constraint& c, const Witness& w,
                            const ActiveDomains& dom);

// Removal certificate: dropping the listed rows and re-checking against the
// domains of the measured table succeeds, and the witness covers exactly
// the kept rows.
Validation validate_removal_certificate(const Table& t, const Constraint& c,
                                        const MeasureResult& r);

// Addition certificate: appending the listed rows and re-checking the
// extended table succeeds, and the witness covers all of it.
Validation validate_addition_certificate(const Table& t, const Constraint& c,
                                         const MeasureResult& r);

// Dispatches a satisfaction check for any constraint kind, optionally
// against foreign domains.
CheckResult run_check(const Table& t, const Constraint& c, const ActiveDomains* dom,
                      uint64_t node_cap = 0, bool want_witness = false);

} // namespace spq
