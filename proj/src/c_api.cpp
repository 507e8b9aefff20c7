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
#include "spq.h"

#include <cstring>
#include <new>
#include <string>

#include "spq/gen.hpp"
#include "spq/report.hpp"
#include "spq/table.hpp"

using namespace spq;

struct spq_table {
    Table table;
};

struct spq_result {
    Report report;
    std::string text;
    std::string json;
};

namespace {

void put_err(char* err, size_t cap, const std::string& msg) {
    if (!err || cap == 0) return;
    size_t n = msg.size() < cap - 1 ? msg.size() : cap - 1;
    std::memcpy(err, msg.data(), n);
    err[n] = '\0';
}

int code_for(const Error& e) {
    switch (e.code()) {
    case Errc::EmptyInput:
    case Errc::RaggedRow:
    case Errc::DuplicateAttribute:
        return SPQ_EPARSE;
    default:
        return SPQ_EINVAL;
    }
}

ParseOptions to_parse_options(const spq_parse_options* opts) {
    ParseOptions p;
    if (opts) {
        p.delimiter = opts->delimiter ? opts->delimiter : ',';
        p.null_token = opts->null_token ? opts->null_token : "";
        p.has_header = opts->has_header != 0;
    }
    return p;
}

} // namespace

extern "C" {

void spq_parse_options_init(spq_parse_options* opts) {
    if (!opts) return;
    opts->delimiter = ',';
    opts->null_token = "";
    opts->has_header = 1;
}

void spq_gen_options_init(spq_gen_options* opts) {
    if (!opts) return;
    opts->seed = 1;
    opts->rows = 0;
    opts->cols = 1;
    opts->symbols = 1;
    opts->null_rate = 0.0;
    opts->dup_rate = 0.0;
}

void spq_options_init(spq_options* opts) {
    if (!opts) return;
    opts->node_cap = 0;
    opts->size_guard = 10000000;
    opts->bound_num = 0;
    opts->bound_den = 0;
    opts->want_witness = 1;
}

int spq_table_parse(const char* text, const spq_parse_options* opts, spq_table** out,
                    char* err, size_t err_cap) {
    if (!text || !out) {
        put_err(err, err_cap, "null argument");
        return SPQ_EINVAL;
    }
    try {
        auto* handle = new spq_table{Table::parse(text, to_parse_options(opts))};
        *out = handle;
        return SPQ_OK;
    } catch (const Error& e) {
        put_err(err, err_cap, e.what());
        return code_for(e);
    } catch (const std::exception& e) {
        put_err(err, err_cap, e.what());
        return SPQ_EFAIL;
    }
}

int spq_table_generate(const spq_gen_options* opts, spq_table** out, char* err, size_t err_cap) {
    if (!opts || !out) {
        put_err(err, err_cap, "null argument");
        return SPQ_EINVAL;
    }
    try {
        GenSpec spec;
        spec.seed = opts->seed;
        spec.rows = static_cast<size_t>(opts->rows);
        spec.cols = static_cast<size_t>(opts->cols);
        spec.symbols = static_cast<size_t>(opts->symbols);
        spec.null_rate = opts->null_rate;
        spec.dup_rate = opts->dup_rate;
        *out = new spq_table{random_table(spec)};
        return SPQ_OK;
    } catch (const Error& e) {
        put_err(err, err_cap, e.what());
        return code_for(e);
    } catch (const std::exception& e) {
        put_err(err, err_cap, e.what());
        return SPQ_EFAIL;
    }
}

int spq_table_fixture(const char* name, spq_table** out, char* err, size_t err_cap) {
    if (!name || !out) {
        put_err(err, err_cap, "null argument");
        return SPQ_EINVAL;
    }
    try {
        *out = new spq_table{fixture(name)};
        return SPQ_OK;
    } catch (const Error& e) {
        put_err(err, err_cap, e.what());
        return code_for(e);
    } catch (const std::exception& e) {
        put_err(err, err_cap, e.what());
        return SPQ_EFAIL;
    }
}

int spq_table_serialize(const spq_table* t, const spq_parse_options* opts, char** out,
                        char* err, size_t err_cap) {
    if (!t || !out) {
        put_err(err, err_cap, "null argument");
        return SPQ_EINVAL;
    }
    try {
        std::string s = t->table.serialize(to_parse_options(opts));
        char* buf = static_cast<char*>(::operator new(s.size() + 1));
        std::memcpy(buf, s.data(), s.size());
        buf[s.size()] = '\0';
        *out = buf;
        return SPQ_OK;
    } catch (const std::exception& e) {
        put_err(err, err_cap, e.what());
        return SPQ_EFAIL;
    }
}

size_t spq_table_rows(const spq_table* t) { return t ? t->table.row_count() : 0; }

size_t spq_table_attributes(const spq_table* t) { return t ? t->table.attribute_count() : 0; }

const char* spq_table_attribute(const spq_table* t, size_t index) {
    if (!t || index >= t->table.attribute_count()) return nullptr;
    return t->table.attributes()[index].c_str();
}

void spq_table_free(spq_table* t) { delete t; }

int spq_analyze(const spq_table* t, const char* constraint, const char* op,
                const spq_options* opts, spq_result** out, char* err, size_t err_cap) {
    if (!t || !constraint || !op || !out) {
        put_err(err, err_cap, "null argument");
        return SPQ_EINVAL;
    }
    auto parsed_op = parse_op(op);
    if (!parsed_op) {
        put_err(err, err_cap, std::string("unknown operation: ") + op);
        return SPQ_EINVAL;
    }
    AnalyzeOptions aopts;
    if (opts) {
        aopts.node_cap = opts->node_cap;
        aopts.size_guard = opts->size_guard;
        aopts.want_witness = opts->want_witness != 0;
        if (opts->bound_den != 0) {
            try {
                aopts.bound = Rational(opts->bound_num, opts->bound_den);
            } catch (const Error& e) {
                put_err(err, err_cap, e.what());
                return SPQ_EINVAL;
            }
        }
    }
    try {
        auto* r = new spq_result{analyze(t->table, std::string(constraint), *parsed_op, aopts),
                                 {},
                                 {}};
        r->text = r->report.text();
        r->json = r->report.json();
        *out = r;
        return SPQ_OK;
    } catch (const std::exception& e) {
        put_err(err, err_cap, e.what());
        return SPQ_EFAIL;
    }
}

int spq_result_status(const spq_result* r) {
    if (!r) return SPQ_STATUS_ERROR;
    switch (r->report.status) {
    case Status::Exact: return SPQ_STATUS_EXACT;
    case Status::Exhausted: return SPQ_STATUS_EXHAUSTED;
    case Status::Undefined: return SPQ_STATUS_UNDEFINED;
    case Status::Error: return SPQ_STATUS_ERROR;
    }
    return SPQ_STATUS_ERROR;
}

int spq_result_exit_code(const spq_result* r) { return r ? r->report.exit_code() : 2; }

int spq_result_holds(const spq_result* r) {
    if (!r || !r->report.holds) return -1;
    return *r->report.holds ? 1 : 0;
}

int spq_result_value(const spq_result* r, int64_t* num, int64_t* den) {
    if (!r || !r->report.value) return SPQ_EINVAL;
    if (num) *num = r->report.value->num;
    if (den) *den = r->report.value->den;
    return SPQ_OK;
}

const char* spq_result_text(const spq_result* r) { return r ? r->text.c_str() : ""; }

const char* spq_result_json(const spq_result* r) { return r ? r->json.c_str() : ""; }

void spq_result_free(spq_result* r) { delete r; }

void spq_string_free(char* s) { ::operator delete(s); }

const char* spq_version(void) { return kToolVersion; }

} // extern "C"
