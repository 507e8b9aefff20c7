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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "spq/error.hpp"

namespace spq {

// Symbol id within one table's pool. Cell values are opaque tokens
// compared by identity; there is no numeric coercion.
using Sym = int32_t;

// A cell: either missing, or a symbol of the owning table. Missing is a
// dedicated state, never an interned token, so it can't leak into domains.
class Value {
public:
    static Value null() { return Value(); }
    static Value symbol(Sym s) {
        Value v;
        v.s_ = s;
        return v;
    }
    bool is_null() const { return s_ < 0; }
    Sym sym() const { return s_; }
    friend bool operator==(const Value&, const Value&) = default;

private:
    Sym s_ = -1;
};

// Attribute positions, kept sorted and duplicate-free.
using AttrSet = std::vector<int>;

struct ParseOptions {
    char delimiter = ',';
    std::string null_token;  // cells equal to this become missing
    bool has_header = true;
};

// An incomplete relation: a named schema plus an indexed bag of rows.
// Duplicates are preserved; rows are identified by their index. Tables are
// immutable after construction, so sharing across threads is safe.
class Table {
public:
    Table() = default;

    static Table parse(std::string_view text, const ParseOptions& opts = {});

    // Builds a table from literal cells; std::nullopt marks a missing value.
    static Table from_rows(std::vector<std::string> attributes,
                           const std::vector<std::vector<std::optional<std::string>>>& rows);

    std::string serialize(const ParseOptions& opts = {}) const;

    size_t row_count() const { return rows_; }
    size_t attribute_count() const { return attrs_.size(); }
    const std::vector<std::string>& attributes() const { return attrs_; }
    // Returns -1 when the name is unknown.
    int attribute_index(std::string_view name) const;

    Value at(size_t row, size_t col) const { return cells_[row * attrs_.size() + col]; }
    const std::string& symbol_name(Sym s) const { return sym_names_[static_cast<size_t>(s)]; }
    size_t symbol_count() const { return sym_names_.size(); }
    bool has_symbol(std::string_view name) const;

    bool total_on(size_t row, const AttrSet& attrs) const;
    bool weakly_similar(size_t a, size_t b, const AttrSet& attrs) const;
    bool strongly_similar(size_t a, size_t b, const AttrSet& attrs) const;

    // Bag minus the given (sorted, unique) row indices.
    Table without_rows(const std::vector<size_t>& sorted_rows) const;
    // Copy with the given cells overwritten by symbols of this table's pool.
    Table filled(const std::vector<std::pair<size_t, size_t>>& cells,
                 const std::vector<Sym>& values) const;
    // Bag plus literal rows; new symbols are interned in row-major order.
    Table with_appended(const std::vector<std::vector<std::optional<std::string>>>& rows) const;

    // Stable content hash of schema plus cell bag (FNV-1a, hex).
    std::string digest() const;

    void check_row(size_t row) const {
        if (row >= rows_) throw Error(Errc::BadIndex, "row index out of range");
    }
    void check_attrs(const AttrSet& attrs) const;

private:
    std::vector<std::string> attrs_;
    std::unordered_map<std::string, int> attr_ids_;
    std::vector<std::string> sym_names_;
    std::unordered_map<std::string, Sym> sym_ids_;
    std::vector<Value> cells_;
    size_t rows_ = 0;

    Sym intern(std::string_view s);
    void set_attributes(std::vector<std::string> attributes);
};

// Per-attribute sets of the symbols that actually occur, in first-occurrence
// order. Missing values are structurally excluded.
struct ActiveDomains {
    std::vector<std::vector<Sym>> order;            // iteration order per attribute
    std::vector<std::unordered_set<Sym>> members;   // membership per attribute

    static ActiveDomains compute(const Table& t);

    size_t size(int attr) const { return order[static_cast<size_t>(attr)].size(); }
    bool contains(int attr, Sym s) const {
        return members[static_cast<size_t>(attr)].count(s) > 0;
    }
};

// Number of completions of `row` restricted to `attrs`: the product of
// domain sizes at its missing positions (saturating; empty product = 1).
uint64_t extension_count(const Table& t, size_t row, const AttrSet& attrs,
                         const ActiveDomains& dom);

// Streams the distinct total projections of `row` on `attrs` that are weakly
// similar to it, in deterministic order: leftmost attribute is the most
// significant digit, domain symbols in first-occurrence order.
class ExtensionEnumerator {
public:
    ExtensionEnumerator(const Table& t, size_t row, const AttrSet& attrs,
                        const ActiveDomains& dom);

    // Writes the next projection (one Sym per attribute of `attrs`) into
    // `out`; returns false once exhausted.
    bool next(std::vector<Sym>& out);

private:
    std::vector<Sym> fixed_;                 // projection template, -1 at missing slots
    std::vector<size_t> open_;               // positions within attrs that are missing
    std::vector<const std::vector<Sym>*> pools_;
    std::vector<size_t> counters_;
    bool done_ = false;
    bool started_ = false;
};

uint64_t saturating_mul(uint64_t a, uint64_t b);

} // namespace spq
