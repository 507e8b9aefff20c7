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
#include "spq/constraint.hpp"

#include <algorithm>
#include <cctype>

namespace spq {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

void canonicalize(AttrSet& a) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
}

std::string attr_list(const Table& t, const AttrSet& a) {
    std::string out;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += t.attributes()[static_cast<size_t>(a[i])];
    }
    return out;
}

} // namespace

Constraint Constraint::make_key(AttrSet k) {
    Constraint c;
    c.kind = ConstraintKind::Key;
    c.key = std::move(k);
    return c;
}

Constraint Constraint::make_fd(FdConstraint f) {
    Constraint c;
    c.kind = ConstraintKind::Fd;
    c.fd = std::move(f);
    return c;
}

Constraint Constraint::make_system(KeySystem s) {
    Constraint c;
    c.kind = ConstraintKind::System;
    c.system = std::move(s);
    return c;
}

AttrSet Constraint::scope() const {
    AttrSet s;
    switch (kind) {
    case ConstraintKind::Key:
        s = key;
        break;
    case ConstraintKind::Fd:
        s = fd.lhs;
        s.insert(s.end(), fd.rhs.begin(), fd.rhs.end());
        break;
    case ConstraintKind::System:
        for (const auto& k : system.keys) s.insert(s.end(), k.begin(), k.end());
        break;
    }
    canonicalize(s);
    return s;
}

std::string Constraint::text(const Table& t) const {
    switch (kind) {
    case ConstraintKind::Key:
        return "key=" + attr_list(t, key);
    case ConstraintKind::Fd:
        return "fd=" + attr_list(t, fd.lhs) + "->" + attr_list(t, fd.rhs);
    case ConstraintKind::System: {
        std::string out = "keys=";
        for (size_t i = 0; i < system.keys.size(); ++i) {
            if (i) out += ";";
            out += attr_list(t, system.keys[i]);
        }
        return out;
    }
    }
    return "";
}

AttrSet resolve_attrs(const Table& t, const std::vector<std::string>& refs) {
    AttrSet out;
    for (const auto& raw : refs) {
        std::string ref = trim(raw);
        if (ref.empty()) throw Error(Errc::BadConstraint, "empty attribute reference");
        int idx = t.attribute_index(ref);
        if (idx < 0 && std::all_of(ref.begin(), ref.end(),
                                   [](unsigned char c) { return std::isdigit(c); })) {
            long pos = std::stol(ref);
            if (pos >= 1 && static_cast<size_t>(pos) <= t.attribute_count())
                idx = static_cast<int>(pos - 1);
        }
        if (idx < 0) throw Error(Errc::UnknownAttribute, "unknown attribute: " + ref);
        out.push_back(idx);
    }
    canonicalize(out);
    return out;
}

Constraint parse_constraint(const Table& t, const std::string& spec) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw Error(Errc::BadConstraint, "expected key=..., fd=... or keys=...");
    std::string head = trim(spec.substr(0, eq));
    std::string body = spec.substr(eq + 1);

    if (head == "key") {
        auto k = resolve_attrs(t, split(body, ','));
        validate_key(t, k);
        return Constraint::make_key(std::move(k));
    }
    if (head == "fd") {
        auto arrow = body.find("->");
        if (arrow == std::string::npos)
            throw Error(Errc::BadConstraint, "fd constraint needs '->'");
        FdConstraint f;
        f.lhs = resolve_attrs(t, split(body.substr(0, arrow), ','));
        f.rhs = resolve_attrs(t, split(body.substr(arrow + 2), ','));
        validate_fd(t, f);
        return Constraint::make_fd(f);
    }
    if (head == "keys") {
        KeySystem s;
        for (const auto& part : split(body, ';')) s.keys.push_back(resolve_attrs(t, split(part, ',')));
        // Members are a set of sets: drop duplicates, keep first occurrence.
        std::vector<AttrSet> uniq;
        for (auto& k : s.keys)
            if (std::find(uniq.begin(), uniq.end(), k) == uniq.end()) uniq.push_back(k);
        s.keys = std::move(uniq);
        validate_system(t, s);
        return Constraint::make_system(std::move(s));
    }
    throw Error(Errc::BadConstraint, "unknown constraint form: " + head);
}

void validate_key(const Table& t, const AttrSet& k) {
    if (k.empty()) throw Error(Errc::EmptyKey, "key needs at least one attribute");
    t.check_attrs(k);
}

void validate_fd(const Table& t, const FdConstraint& f) {
    if (f.lhs.empty() || f.rhs.empty())
        throw Error(Errc::EmptyAttributeSet, "dependency sides must be nonempty");
    t.check_attrs(f.lhs);
    t.check_attrs(f.rhs);
}

void validate_system(const Table& t, const KeySystem& s) {
    if (s.keys.empty()) throw Error(Errc::EmptyKey, "key system needs at least one key");
    for (const auto& k : s.keys) validate_key(t, k);
}

} // namespace spq
