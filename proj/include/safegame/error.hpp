/*
 * Copyright 2026 The safegame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sg {

enum class ErrorKind {
    InvalidVertex,
    Capability,        // operation needs an explicit game
    Parse,
    InvalidStrategy,
    IncompleteStrategy,
    UnknownSymbol,
    Precondition,
    Resource,          // enumeration / search limit exceeded
    InvariantViolation,
    DegenerateSpec,
    Validation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// A diagnostic produced by a checker. Violations are data, not errors.
struct Violation {
    std::string kind;
    std::string message;
};

using Violations = std::vector<Violation>;

} // namespace sg
