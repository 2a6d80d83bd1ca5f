// Copyright 2026 The oal authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace oal {

// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vertex id or argument is out of range, or an instance violates a
// structural precondition.
struct InvalidInput : Error {
    using Error::Error;
};

// An alliance predicate was asked about the empty set. Alliances are
// non-empty by definition; emptiness is not the same thing as
// infeasibility, so it gets its own error.
struct EmptyCandidate : Error {
    using Error::Error;
};

// Projected work exceeds the configured cap. Distinct from a "no"
// answer: a certified no requires completed enumeration.
struct CapExceeded : Error {
    using Error::Error;
};

// A graph (or component) expected to be a single tree is not.
struct NotATree : Error {
    using Error::Error;
};

// The source instance cannot be expressed by the requested gadget
// construction; the caller should answer it directly.
struct UnrepresentableInstance : Error {
    using Error::Error;
};

// Malformed instance text. `line` is 1-based, 0 when the problem is not
// tied to a single line.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg), line(line_) {}
};

}  // namespace oal
