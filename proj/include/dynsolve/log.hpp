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

#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace dynsolve::log {

using WarningHandler = std::function<void(std::string_view)>;

/// Emit a warning through the installed handler (stderr by default).
void warn(std::string_view message);

/// Install a handler and return the previous one. Passing an empty handler
/// restores the stderr default.
WarningHandler setWarningHandler(WarningHandler handler);

}  // namespace dynsolve::log
