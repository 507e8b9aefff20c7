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

#include <string>
#include <vector>

#include "spq/table.hpp"

namespace spq {

// X -> Y dependency over attribute positions; X and Y may overlap.
struct FdConstraint {
    AttrSet lhs;
    AttrSet rhs;
};

// A family of candidate keys that must hold in one common replacement world.
struct KeySystem {
    std::vector<AttrSet> keys;
};

enum class ConstraintKind { Key, Fd, System };

struct Constraint {
    ConstraintKind kind = ConstraintKind::Key;
    AttrSet key;
    FdConstraint fd;
    KeySystem system;

    static Constraint make_key(AttrSet k);
    static Constraint make_fd(FdConstraint f);
    static Constraint make_system(KeySystem s);

    // Attributes the constraint actually depends on.
    AttrSet scope() const;
    std::string text(const Table& t) const;
};

// Resolves attribute references (names, or 1-based positions for headerless
// data) into canonical sorted positions.
AttrSet resolve_attrs(const Table& t, const std::vector<std::string>& refs);

// Parses "key=A,B", "fd=A,B->C" or "keys=A,B;B,C".
Constraint parse_constraint(const Table& t, const std::string& spec);

void validate_key(const Table& t, const AttrSet& k);
void validate_fd(const Table& t, const FdConstraint& f);
void validate_system(const Table& t, const KeySystem& s);

} // namespace spq
