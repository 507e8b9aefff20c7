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
#include "spq/table.hpp"

#include <algorithm>
#include <cstdio>

namespace spq {

uint64_t saturating_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

Sym Table::intern(std::string_view s) {
    auto it = sym_ids_.find(std::string(s));
    if (it != sym_ids_.end()) return it->second;
    Sym id = static_cast<Sym>(sym_names_.size());
    sym_names_.emplace_back(s);
    sym_ids_.emplace(sym_names_.back(), id);
    return id;
}

void Table::set_attributes(std::vector<std::string> attributes) {
    attrs_ = std::move(attributes);
    attr_ids_.clear();
    for (size_t i = 0; i < attrs_.size(); ++i) {
        if (!attr_ids_.emplace(attrs_[i], static_cast<int>(i)).second)
            throw Error(Errc::DuplicateAttribute, "duplicate attribute name: " + attrs_[i]);
    }
}

int Table::attribute_index(std::string_view name) const {
    auto it = attr_ids_.find(std::string(name));
    return it == attr_ids_.end() ? -1 : it->second;
}

bool Table::has_symbol(std::string_view name) const {
    return sym_ids_.count(std::string(name)) > 0;
}

void Table::check_attrs(const AttrSet& attrs) const {
    for (int a : attrs)
        if (a < 0 || static_cast<size_t>(a) >= attrs_.size())
            throw Error(Errc::UnknownAttribute, "attribute position out of range");
}

namespace {

std::vector<std::string> split_line(std::string_view line, char delim) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            break;
        }
        out.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t pos = text.find('\n', start);
        std::string_view line =
            pos == std::string_view::npos ? text.substr(start) : text.substr(start, pos - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return lines;
}

} // namespace

Table Table::parse(std::string_view text, const ParseOptions& opts) {
    auto lines = split_lines(text);
    if (lines.empty()) throw Error(Errc::EmptyInput, "no input columns");

    Table t;
    size_t first_data = 0;
    auto first = split_line(lines[0], opts.delimiter);
    if (opts.has_header) {
        t.set_attributes(first);
        first_data = 1;
    } else {
        std::vector<std::string> names;
        for (size_t i = 0; i < first.size(); ++i) names.push_back("c" + std::to_string(i + 1));
        t.set_attributes(std::move(names));
    }
    size_t ncols = t.attrs_.size();
    if (ncols == 0) throw Error(Errc::EmptyInput, "no input columns");

    t.cells_.reserve((lines.size() - first_data) * ncols);
    for (size_t li = first_data; li < lines.size(); ++li) {
        auto fields = split_line(lines[li], opts.delimiter);
        if (fields.size() != ncols)
            throw Error(Errc::RaggedRow, "row " + std::to_string(li + 1) + " has " +
                                             std::to_string(fields.size()) + " fields, expected " +
                                             std::to_string(ncols));
        for (auto& f : fields) {
            if (f == opts.null_token)
                t.cells_.push_back(Value::null());
            else
                t.cells_.push_back(Value::symbol(t.intern(f)));
        }
        ++t.rows_;
    }
    return t;
}

Table Table::from_rows(std::vector<std::string> attributes,
                       const std::vector<std::vector<std::optional<std::string>>>& rows) {
    Table t;
    t.set_attributes(std::move(attributes));
    if (t.attrs_.empty()) throw Error(Errc::EmptyInput, "no input columns");
    for (const auto& row : rows) {
        if (row.size() != t.attrs_.size()) throw Error(Errc::RaggedRow, "row width mismatch");
        for (const auto& cell : row) {
            if (cell.has_value())
                t.cells_.push_back(Value::symbol(t.intern(*cell)));
            else
                t.cells_.push_back(Value::null());
        }
        ++t.rows_;
    }
    return t;
}

std::string Table::serialize(const ParseOptions& opts) const {
    std::string out;
    if (opts.has_header) {
        for (size_t c = 0; c < attrs_.size(); ++c) {
            if (c) out.push_back(opts.delimiter);
            out += attrs_[c];
        }
        out.push_back('\n');
    }
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < attrs_.size(); ++c) {
            if (c) out.push_back(opts.delimiter);
            Value v = at(r, c);
            out += v.is_null() ? opts.null_token : symbol_name(v.sym());
        }
        out.push_back('\n');
    }
    return out;
}

bool Table::total_on(size_t row, const AttrSet& attrs) const {
    for (int a : attrs)
        if (at(row, static_cast<size_t>(a)).is_null()) return false;
    return true;
}

bool Table::weakly_similar(size_t a, size_t b, const AttrSet& attrs) const {
    check_row(a);
    check_row(b);
    check_attrs(attrs);
    for (int c : attrs) {
        Value x = at(a, static_cast<size_t>(c));
        Value y = at(b, static_cast<size_t>(c));
        if (x.is_null() || y.is_null()) continue;
        if (x != y) return false;
    }
    return true;
}

bool Table::strongly_similar(size_t a, size_t b, const AttrSet& attrs) const {
    check_row(a);
    check_row(b);
    check_attrs(attrs);
    for (int c : attrs) {
        Value x = at(a, static_cast<size_t>(c));
        Value y = at(b, static_cast<size_t>(c));
        if (x.is_null() || y.is_null() || x != y) return false;
    }
    return true;
}

Table Table::without_rows(const std::vector<size_t>& sorted_rows) const {
    Table t;
    t.attrs_ = attrs_;
    t.attr_ids_ = attr_ids_;
    t.sym_names_ = sym_names_;
    t.sym_ids_ = sym_ids_;
    size_t k = 0;
    for (size_t r = 0; r < rows_; ++r) {
        if (k < sorted_rows.size() && sorted_rows[k] == r) {
            ++k;
            continue;
        }
        for (size_t c = 0; c < attrs_.size(); ++c) t.cells_.push_back(at(r, c));
        ++t.rows_;
    }
    return t;
}

Table Table::filled(const std::vector<std::pair<size_t, size_t>>& cells,
                    const std::vector<Sym>& values) const {
    Table t = *this;
    for (size_t i = 0; i < cells.size(); ++i)
        t.cells_[cells[i].first * attrs_.size() + cells[i].second] = Value::symbol(values[i]);
    return t;
}

Table Table::with_appended(
    const std::vector<std::vector<std::optional<std::string>>>& rows) const {
    Table t;
    t.attrs_ = attrs_;
    t.attr_ids_ = attr_ids_;
    t.sym_names_ = sym_names_;
    t.sym_ids_ = sym_ids_;
    t.cells_ = cells_;
    t.rows_ = rows_;
    for (const auto& row : rows) {
        if (row.size() != attrs_.size()) throw Error(Errc::RaggedRow, "row width mismatch");
        for (const auto& cell : row) {
            if (cell.has_value())
                t.cells_.push_back(Value::symbol(t.intern(*cell)));
            else
                t.cells_.push_back(Value::null());
        }
        ++t.rows_;
    }
    return t;
}

std::string Table::digest() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::string_view s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        h ^= 0x1f;
        h *= 1099511628211ull;
    };
    for (const auto& a : attrs_) mix(a);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < attrs_.size(); ++c) {
            Value v = at(r, c);
            mix(v.is_null() ? std::string_view("\x01") : std::string_view(symbol_name(v.sym())));
        }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ActiveDomains ActiveDomains::compute(const Table& t) {
    ActiveDomains d;
    size_t n = t.attribute_count();
    d.order.resize(n);
    d.members.resize(n);
    for (size_t r = 0; r < t.row_count(); ++r)
        for (size_t c = 0; c < n; ++c) {
            Value v = t.at(r, c);
            if (v.is_null()) continue;
            if (d.members[c].insert(v.sym()).second) d.order[c].push_back(v.sym());
        }
    return d;
}

uint64_t extension_count(const Table& t, size_t row, const AttrSet& attrs,
                         const ActiveDomains& dom) {
    t.check_row(row);
    t.check_attrs(attrs);
    uint64_t n = 1;
    for (int a : attrs)
        if (t.at(row, static_cast<size_t>(a)).is_null())
            n = saturating_mul(n, dom.size(a));
    return n;
}

ExtensionEnumerator::ExtensionEnumerator(const Table& t, size_t row, const AttrSet& attrs,
                                         const ActiveDomains& dom) {
    t.check_row(row);
    t.check_attrs(attrs);
    fixed_.resize(attrs.size(), -1);
    for (size_t i = 0; i < attrs.size(); ++i) {
        Value v = t.at(row, static_cast<size_t>(attrs[i]));
        if (v.is_null()) {
            open_.push_back(i);
            pools_.push_back(&dom.order[static_cast<size_t>(attrs[i])]);
            if (pools_.back()->empty()) done_ = true;
        } else {
            fixed_[i] = v.sym();
        }
    }
    counters_.assign(open_.size(), 0);
}

bool ExtensionEnumerator::next(std::vector<Sym>& out) {
    if (done_) return false;
    if (started_) {
        // Advance the odometer; the rightmost open slot is the fastest digit.
        size_t i = open_.size();
        while (i > 0) {
            --i;
            if (++counters_[i] < pools_[i]->size()) break;
            counters_[i] = 0;
            if (i == 0) {
                done_ = true;
                return false;
            }
        }
        if (open_.empty()) {
            done_ = true;
            return false;
        }
    }
    started_ = true;
    out = fixed_;
    for (size_t i = 0; i < open_.size(); ++i) out[open_[i]] = (*pools_[i])[counters_[i]];
    return true;
}

} // namespace spq
