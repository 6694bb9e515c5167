// Copyright 2026 The dynsolve Authors
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

#include "dynsolve/errors.hpp"

namespace dynsolve {

ParseError::ParseError(const std::string& what, std::size_t line)
    : Error(ErrorCategory::Input,
            "line " + std::to_string(line) + ": " + what),
      line_(line) {}

FormatError::FormatError(const std::string& what, std::size_t row)
    : Error(ErrorCategory::Input, "row " + std::to_string(row) + ": " + what),
      row_(row) {}

NonMonotonicTimeError::NonMonotonicTimeError(std::size_t row)
    : Error(ErrorCategory::Input,
            "row " + std::to_string(row) + ": time is not strictly increasing"),
      row_(row) {}

}  // namespace dynsolve
