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

/*
 * C interface of the spq engine: key and dependency checking over
 * incomplete delimited tables, with exact removal (g3) and addition (g5)
 * approximation measures and machine-readable certificates.
 *
 * All objects are opaque handles freed with the matching *_free call.
 * Functions return SPQ_OK (0) on success; on failure they write a message
 * into the caller-supplied error buffer (always NUL-terminated).
 */
#ifndef SPQ_H
#define SPQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SPQ_OK 0
#define SPQ_EINVAL 1 /* bad arguments (unknown attribute, bad constraint, ...) */
#define SPQ_EPARSE 2 /* malformed input table */
#define SPQ_EFAIL 3  /* internal failure */

/* Result status, mirrored in reports as text. */
#define SPQ_STATUS_EXACT 0
#define SPQ_STATUS_EXHAUSTED 1
#define SPQ_STATUS_UNDEFINED 2
#define SPQ_STATUS_ERROR 3

typedef struct spq_table spq_table;
typedef struct spq_result spq_result;

typedef struct spq_parse_options {
    char delimiter;         /* default ',' */
    const char* null_token; /* cell text marking a missing value; default "" */
    int has_header;         /* default 1; else attributes are named c1..cN */
} spq_parse_options;

void spq_parse_options_init(spq_parse_options* opts);

typedef struct spq_gen_options {
    uint64_t seed;
    uint64_t rows;
    uint64_t cols;
    uint64_t symbols;  /* symbol pool size per column */
    double null_rate;  /* per-cell probability of a missing value */
    double dup_rate;   /* probability a row repeats its predecessor */
} spq_gen_options;

void spq_gen_options_init(spq_gen_options* opts);

typedef struct spq_options {
    uint64_t node_cap;    /* 0 = unlimited exact search */
    uint64_t size_guard;  /* oracle guard; default 10^7 */
    int64_t bound_num;    /* decision bound p/q; bound_den = 0 means none */
    int64_t bound_den;
    int want_witness;     /* include a replacement-world witness; default 1 */
} spq_options;

void spq_options_init(spq_options* opts);

/* -- tables -------------------------------------------------------------- */

int spq_table_parse(const char* text, const spq_parse_options* opts, spq_table** out,
                    char* err, size_t err_cap);
int spq_table_generate(const spq_gen_options* opts, spq_table** out, char* err, size_t err_cap);
int spq_table_fixture(const char* name, spq_table** out, char* err, size_t err_cap);

/* Serialized form; free with spq_string_free. Missing values are written
 * as the configured null token. */
int spq_table_serialize(const spq_table* t, const spq_parse_options* opts, char** out,
                        char* err, size_t err_cap);

size_t spq_table_rows(const spq_table* t);
size_t spq_table_attributes(const spq_table* t);
const char* spq_table_attribute(const spq_table* t, size_t index);
void spq_table_free(spq_table* t);

/* -- analysis ------------------------------------------------------------ */

/*
 * Runs one operation against a constraint.
 *
 *   constraint: "key=A,B", "fd=A,B->C" or "keys=A,B;B,C"
 *               (attribute names, or 1-based positions for headerless data)
 *   op:         "check", "g3", "g5", "g3eq5", "maxg3",
 *               "oracle-check", "oracle-g3", "oracle-g5"
 *
 * The call succeeds even when the analysed constraint fails or the search
 * gives up; inspect the result. It fails (non-OK) only when the request
 * itself is unusable.
 */
int spq_analyze(const spq_table* t, const char* constraint, const char* op,
                const spq_options* opts, spq_result** out, char* err, size_t err_cap);

int spq_result_status(const spq_result* r);
/* Process exit code convention: 0 holds / within bound, 1 fails or
 * undefined, 2 error, 3 exhausted. */
int spq_result_exit_code(const spq_result* r);
/* 1 / 0, or -1 when the operation has no verdict. */
int spq_result_holds(const spq_result* r);
/* SPQ_OK and fills num/den when the operation produced a measure. */
int spq_result_value(const spq_result* r, int64_t* num, int64_t* den);
/* Owned by the result; valid until spq_result_free. */
const char* spq_result_text(const spq_result* r);
const char* spq_result_json(const spq_result* r);
void spq_result_free(spq_result* r);

/* -- misc ---------------------------------------------------------------- */

void spq_string_free(char* s);
const char* spq_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SPQ_H */
