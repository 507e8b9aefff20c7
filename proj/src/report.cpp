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
#include "spq/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "spq/keysystem.hpp"
#include "spq/oracle.hpp"
#include "spq/spfd.hpp"
#include "spq/spkey.hpp"
#include "spq/validate.hpp"

namespace spq {

using jdoc = nlohmann::json;

const char* op_name(Op op) {
    switch (op) {
    case Op::Check: return "check";
    case Op::G3: return "g3";
    case Op::G5: return "g5";
    case Op::G3EqualsG5: return "g3eq5";
    case Op::MaxG3: return "maxg3";
    case Op::OracleCheck: return "oracle-check";
    case Op::OracleG3: return "oracle-g3";
    case Op::OracleG5: return "oracle-g5";
    }
    return "check";
}

std::optional<Op> parse_op(const std::string& name) {
    static const std::pair<const char*, Op> table[] = {
        {"check", Op::Check},
        {"g3", Op::G3},
        {"g5", Op::G5},
        {"g3eq5", Op::G3EqualsG5},
        {"maxg3", Op::MaxG3},
        {"oracle-check", Op::OracleCheck},
        {"oracle-g3", Op::OracleG3},
        {"oracle-g5", Op::OracleG5},
    };
    for (const auto& [n, op] : table)
        if (name == n) return op;
    return std::nullopt;
}

namespace {

Status parse_status(const std::string& s) {
    if (s == "exact") return Status::Exact;
    if (s == "exhausted") return Status::Exhausted;
    if (s == "undefined") return Status::Undefined;
    return Status::Error;
}

void take_measure(Report& rep, MeasureResult&& r) {
    rep.status = r.status;
    rep.value = r.value;
    rep.certificate = std::move(r.certificate);
    rep.witness = std::move(r.witness);
    rep.warnings.insert(rep.warnings.end(), r.warnings.begin(), r.warnings.end());
    rep.nodes += r.nodes;
    rep.stats = r.stats;
}

void take_check(Report& rep, CheckResult&& r) {
    rep.status = r.status;
    if (r.status == Status::Exact) rep.holds = r.holds;
    rep.witness = std::move(r.witness);
    rep.warnings.insert(rep.warnings.end(), r.warnings.begin(), r.warnings.end());
    rep.nodes += r.nodes;
}

void attach_validation(Report& rep, const Validation& v, const char* what) {
    if (v.ok) {
        rep.notes.push_back(std::string(what) + " re-validated");
        return;
    }
    rep.status = Status::Error;
    rep.error = std::string(what) + " failed re-validation";
    for (const auto& p : v.problems) rep.warnings.push_back(p);
}

} // namespace

Report analyze(const Table& t, const Constraint& c, Op op, const AnalyzeOptions& opts) {
    Report rep;
    rep.digest = t.digest();
    rep.rows = t.row_count();
    rep.attributes = t.attributes();
    rep.constraint_text = c.text(t);
    rep.op = op;
    rep.bound = opts.bound;

    auto start = std::chrono::steady_clock::now();
    try {
        switch (op) {
        case Op::Check:
            take_check(rep, run_check(t, c, nullptr, opts.node_cap, opts.want_witness));
            break;
        case Op::G3: {
            MeasureResult r;
            if (c.kind == ConstraintKind::Key) {
                SpkeyOptions o;
                o.want_witness = opts.want_witness;
                r = g3_spkey(t, c.key, o);
            } else {
                SearchOptions o;
                o.node_cap = opts.node_cap;
                o.want_witness = opts.want_witness;
                r = c.kind == ConstraintKind::Fd ? g3_spfd(t, c.fd, o)
                                                 : g3_spkey_system(t, c.system, o);
            }
            bool exact = r.status == Status::Exact;
            take_measure(rep, std::move(r));
            if (exact && opts.validate_certificates && rep.rows > 0) {
                MeasureResult view;
                view.status = Status::Exact;
                view.value = rep.value;
                view.certificate = rep.certificate;
                view.witness = rep.witness;
                attach_validation(rep, validate_removal_certificate(t, c, view),
                                  "removal certificate");
            }
            break;
        }
        case Op::G5: {
            if (c.kind == ConstraintKind::System)
                throw Error(Errc::BadArgument,
                            "the addition measure is not defined for key systems");
            MeasureResult r;
            if (c.kind == ConstraintKind::Key) {
                SpkeyOptions o;
                o.want_witness = opts.want_witness;
                r = g5_spkey(t, c.key, o);
            } else {
                SearchOptions o;
                o.node_cap = opts.node_cap;
                o.want_witness = opts.want_witness;
                r = g5_spfd(t, c.fd, o);
            }
            bool exact = r.status == Status::Exact;
            take_measure(rep, std::move(r));
            if (exact && opts.validate_certificates && rep.rows > 0) {
                MeasureResult view;
                view.status = Status::Exact;
                view.value = rep.value;
                view.certificate = rep.certificate;
                view.witness = rep.witness;
                attach_validation(rep, validate_addition_certificate(t, c, view),
                                  "addition certificate");
            }
            break;
        }
        case Op::G3EqualsG5: {
            if (c.kind != ConstraintKind::Key)
                throw Error(Errc::BadArgument, "measure comparison is defined for keys only");
            SpkeyOptions o;
            o.want_witness = false;
            MeasureResult g3 = g3_spkey(t, c.key, o);
            MeasureResult g5 = g5_spkey(t, c.key, o);
            rep.holds = g5.status == Status::Exact && g3.value == g5.value;
            rep.notes.push_back("g3 = " + g3.value->str());
            rep.notes.push_back(g5.status == Status::Exact ? "g5 = " + g5.value->str()
                                                           : "g5 undefined");
            rep.warnings.insert(rep.warnings.end(), g5.warnings.begin(), g5.warnings.end());
            break;
        }
        case Op::MaxG3: {
            if (c.kind != ConstraintKind::System)
                throw Error(Errc::BadArgument, "maxg3 needs a key system (keys=...)");
            SearchOptions o;
            o.node_cap = opts.node_cap;
            o.want_witness = opts.want_witness;
            MaxG3Result r = max_g3_decision(t, c.system, o);
            rep.status = r.status;
            rep.nodes = r.nodes;
            rep.warnings.insert(rep.warnings.end(), r.warnings.begin(), r.warnings.end());
            if (r.status == Status::Exact) {
                rep.holds = r.equal;
                rep.value = r.system_value;
                rep.certificate = std::move(r.system_detail.certificate);
                rep.witness = std::move(r.system_detail.witness);
                for (size_t i = 0; i < r.per_key.size(); ++i) {
                    Constraint kc = Constraint::make_key(c.system.keys[i]);
                    rep.notes.push_back("g3(" + kc.text(t).substr(4) + ") = " +
                                        r.per_key[i].str());
                }
                rep.notes.push_back("g3(system) = " + r.system_value.str());
                rep.notes.push_back("max attained by member " + std::to_string(r.argmax));
            }
            break;
        }
        case Op::OracleCheck: {
            OracleOptions o;
            o.guard = opts.size_guard;
            rep.holds = oracle_check(t, c, o);
            break;
        }
        case Op::OracleG3: {
            OracleOptions o;
            o.guard = opts.size_guard;
            rep.value = oracle_g3(t, c, o);
            break;
        }
        case Op::OracleG5: {
            OracleOptions o;
            o.guard = opts.size_guard;
            auto v = oracle_g5(t, c, o);
            if (v)
                rep.value = *v;
            else
                rep.status = Status::Undefined;
            break;
        }
        }
    } catch (const Error& e) {
        rep.status = Status::Error;
        rep.error = e.what();
    } catch (const std::exception& e) {
        rep.status = Status::Error;
        rep.error = e.what();
    }
    auto end = std::chrono::steady_clock::now();
    rep.time_ms = std::chrono::duration<double, std::milli>(end - start).count();

    if (rep.bound && rep.status == Status::Exact && rep.value) rep.within = *rep.value <= *rep.bound;
    return rep;
}

Report analyze(const Table& t, const std::string& constraint_spec, Op op,
               const AnalyzeOptions& opts) {
    Constraint c;
    try {
        c = parse_constraint(t, constraint_spec);
    } catch (const Error& e) {
        Report rep;
        rep.digest = t.digest();
        rep.rows = t.row_count();
        rep.attributes = t.attributes();
        rep.constraint_text = constraint_spec;
        rep.op = op;
        rep.status = Status::Error;
        rep.error = e.what();
        return rep;
    }
    return analyze(t, c, op, opts);
}

int Report::exit_code() const {
    if (status == Status::Error) return 2;
    if (status == Status::Exhausted) return 3;
    if (bound) return status == Status::Exact && within.value_or(false) ? 0 : 1;
    if (status == Status::Undefined) return 1;
    if (holds) return *holds ? 0 : 1;
    return 0;
}

std::string Report::text() const {
    std::ostringstream out;
    out << tool << " " << version << "\n";
    out << "input: " << rows << " rows, " << attributes.size() << " attributes (digest " << digest
        << ")\n";
    out << "constraint: " << constraint_text << "\n";
    out << "operation: " << op_name(op) << "\n";
    out << "status: " << status_name(status) << "\n";
    if (holds) out << "holds: " << (*holds ? "yes" : "no") << "\n";
    if (value) {
        out << "measure: " << value->str() << " (= " << value->to_double() << ")\n";
    }
    if (bound) {
        out << "bound: " << bound->str();
        if (within) out << " -> " << (*within ? "within" : "exceeded");
        out << "\n";
    }
    if (!certificate.removed_rows.empty()) {
        out << "certificate: remove " << certificate.removed_rows.size() << " row(s):";
        for (size_t r : certificate.removed_rows) out << " " << r;
        out << "\n";
    }
    if (!certificate.added_rows.empty()) {
        out << "certificate: add " << certificate.added_rows.size() << " row(s):\n";
        for (const auto& row : certificate.added_rows) {
            out << " ";
            for (const auto& cell : row) out << " " << (cell ? *cell : "<null>");
            out << "\n";
        }
    }
    if (witness) {
        size_t covered = 0;
        for (const auto& r : witness->rows)
            if (r) ++covered;
        out << "witness: projections for " << covered << " row(s)\n";
    }
    for (const auto& w : warnings) out << "warning: " << w << "\n";
    for (const auto& n : notes) out << "note: " << n << "\n";
    if (!error.empty()) out << "error: " << error << "\n";
    if (nodes) out << "search nodes: " << nodes << "\n";
    if (stats)
        out << "pruning: cut " << stats->cut << ", materialized " << stats->materialized_right
            << ", lazily scanned " << stats->greedy_enumerated << "\n";
    out << "time: " << time_ms << " ms\n";
    out << "exit: " << exit_code() << "\n";
    return out.str();
}

std::string Report::json() const {
    jdoc j;
    j["report_version"] = kReportVersion;
    j["tool"] = tool;
    j["version"] = version;
    j["input"] = {{"digest", digest}, {"rows", rows}, {"attributes", attributes}};
    j["constraint"] = constraint_text;
    j["operation"] = op_name(op);
    j["status"] = status_name(status);
    if (holds) j["holds"] = *holds;
    if (value)
        j["measure"] = {{"numerator", value->num},
                        {"denominator", value->den},
                        {"decimal", value->to_double()}};
    if (bound) {
        j["bound"] = {{"numerator", bound->num}, {"denominator", bound->den}};
        if (within) j["bound"]["within"] = *within;
    }
    if (!certificate.removed_rows.empty() || !certificate.added_rows.empty()) {
        jdoc cert;
        cert["removed_rows"] = certificate.removed_rows;
        jdoc added = jdoc::array();
        for (const auto& row : certificate.added_rows) {
            jdoc jr = jdoc::array();
            for (const auto& cell : row)
                jr.push_back(cell ? jdoc(*cell) : jdoc(nullptr));
            added.push_back(jr);
        }
        cert["added_rows"] = added;
        j["certificate"] = cert;
    }
    if (witness) {
        jdoc w;
        w["scope"] = witness->scope;
        jdoc names = jdoc::array();
        for (int a : witness->scope) names.push_back(attributes[static_cast<size_t>(a)]);
        w["attributes"] = names;
        jdoc rows_obj = jdoc::object();
        for (size_t r = 0; r < witness->rows.size(); ++r)
            if (witness->rows[r]) rows_obj[std::to_string(r)] = *witness->rows[r];
        w["row_count"] = witness->rows.size();
        w["rows"] = rows_obj;
        j["witness"] = w;
    }
    j["warnings"] = warnings;
    j["notes"] = notes;
    if (!error.empty()) j["error"] = error;
    jdoc st;
    st["nodes"] = nodes;
    if (stats) {
        st["cut"] = stats->cut;
        st["materialized_right"] = stats->materialized_right;
        st["greedy_enumerated"] = stats->greedy_enumerated;
    }
    j["stats"] = st;
    j["time_ms"] = time_ms;
    j["exit_code"] = exit_code();
    return j.dump(2);
}

Report Report::from_json(const std::string& doc) {
    jdoc j;
    try {
        j = jdoc::parse(doc);
    } catch (const std::exception& e) {
        throw Error(Errc::BadArgument, std::string("malformed report: ") + e.what());
    }
    Report rep;
    rep.tool = j.value("tool", "");
    rep.version = j.value("version", "");
    if (j.contains("input")) {
        rep.digest = j["input"].value("digest", "");
        rep.rows = j["input"].value("rows", size_t{0});
        rep.attributes = j["input"].value("attributes", std::vector<std::string>{});
    }
    rep.constraint_text = j.value("constraint", "");
    if (auto op = parse_op(j.value("operation", "check"))) rep.op = *op;
    rep.status = parse_status(j.value("status", "error"));
    if (j.contains("holds")) rep.holds = j["holds"].get<bool>();
    if (j.contains("measure"))
        rep.value = Rational(j["measure"]["numerator"].get<int64_t>(),
                             j["measure"]["denominator"].get<int64_t>());
    if (j.contains("bound")) {
        rep.bound = Rational(j["bound"]["numerator"].get<int64_t>(),
                             j["bound"]["denominator"].get<int64_t>());
        if (j["bound"].contains("within")) rep.within = j["bound"]["within"].get<bool>();
    }
    if (j.contains("certificate")) {
        rep.certificate.removed_rows =
            j["certificate"].value("removed_rows", std::vector<size_t>{});
        for (const auto& row : j["certificate"].value("added_rows", jdoc::array())) {
            std::vector<std::optional<std::string>> cells;
            for (const auto& cell : row)
                cells.push_back(cell.is_null() ? std::nullopt
                                               : std::optional<std::string>(cell.get<std::string>()));
            rep.certificate.added_rows.push_back(std::move(cells));
        }
    }
    if (j.contains("witness")) {
        Witness w;
        for (const auto& a : j["witness"]["scope"]) w.scope.push_back(a.get<int>());
        w.rows.resize(j["witness"].value("row_count", size_t{0}));
        for (const auto& [key, val] : j["witness"]["rows"].items()) {
            size_t r = std::stoull(key);
            if (r >= w.rows.size()) w.rows.resize(r + 1);
            w.rows[r] = val.get<std::vector<std::string>>();
        }
        rep.witness = std::move(w);
    }
    rep.warnings = j.value("warnings", std::vector<std::string>{});
    rep.notes = j.value("notes", std::vector<std::string>{});
    rep.error = j.value("error", "");
    if (j.contains("stats")) {
        rep.nodes = j["stats"].value("nodes", uint64_t{0});
        if (j["stats"].contains("cut")) {
            PrunedStats s;
            s.cut = j["stats"].value("cut", size_t{0});
            s.materialized_right = j["stats"].value("materialized_right", size_t{0});
            s.greedy_enumerated = j["stats"].value("greedy_enumerated", size_t{0});
            rep.stats = s;
        }
    }
    rep.time_ms = j.value("time_ms", 0.0);
    return rep;
}

} // namespace spq
