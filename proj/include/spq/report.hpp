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

#include "spq/constraint.hpp"
#include "spq/measure.hpp"

namespace spq {

inline constexpr const char* kToolName = "spq";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportVersion = 1;

enum class Op { Check, G3, G5, G3EqualsG5, MaxG3, OracleCheck, OracleG3, OracleG5 };

const char* op_name(Op op);
std::optional<Op> parse_op(const std::string& name);

struct AnalyzeOptions {
    std::optional<Rational> bound;    // turns a measure into a decision
    uint64_t node_cap = 0;            // 0 = unlimited exact search
    uint64_t size_guard = 10'000'000; // oracle guard
    bool want_witness = true;
    bool validate_certificates = true;
};

// Everything one run produces, renderable as text or a versioned JSON
// document that parses back losslessly.
struct Report {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::string digest;
    size_t rows = 0;
    std::vector<std::string> attributes;
    std::string constraint_text;
    Op op = Op::Check;
    Status status = Status::Exact;
    std::optional<bool> holds;
    std::optional<Rational> value;
    std::optional<Rational> bound;
    std::optional<bool> within;
    Certificate certificate;
    std::optional<Witness> witness;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
    std::string error;
    uint64_t nodes = 0;
    std::optional<PrunedStats> stats;
    double time_ms = 0.0;

    // 0 holds / within bound, 1 fails / undefined, 2 error, 3 search gave up.
    int exit_code() const;

    std::string text() const;
    std::string json() const;
    static Report from_json(const std::string& doc);
};

Report analyze(const Table& t, const Constraint& c, Op op, const AnalyzeOptions& opts = {});
Report analyze(const Table& t, const std::string& constraint_spec, Op op,
               const AnalyzeOptions& opts = {});

} // namespace spq
