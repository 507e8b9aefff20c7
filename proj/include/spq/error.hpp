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

#include <stdexcept>
#include <string>

namespace spq {

enum class Errc {
    EmptyInput,
    RaggedRow,
    DuplicateAttribute,
    UnknownAttribute,
    BadIndex,
    EmptyKey,
    EmptyAttributeSet,
    BadConstraint,
    BadArgument,
    SizeGuard,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Thrown by the exact searches when the node cap is hit; callers turn it
// into an Exhausted status instead of reporting a possibly wrong answer.
struct Exhausted {
    uint64_t nodes = 0;
};

} // namespace spq
