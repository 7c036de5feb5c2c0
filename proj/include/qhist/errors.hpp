// Copyright 2026 The qhist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qhist {

/// Scenario text that could not be parsed. `line` and `col` are 1-based;
/// 0 means "not tied to a position" (e.g. an unreadable file).
struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string &msg, int line = 0, int col = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", col " +
                                            std::to_string(col) + ": " + msg
                                      : msg),
          line(line),
          col(col) {}
};

/// A mathematical invariant failed validation: non-unitary evolution,
/// non-normalized state, broken projector family, and the like.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An observed outcome that no surviving branch can produce.
struct ImpossibleOutcomeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qhist
