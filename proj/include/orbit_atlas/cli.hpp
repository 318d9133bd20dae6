// Copyright 2026 The Orbit Atlas Authors
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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orbit_atlas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitValidation = 3;

/// Parses `--c2` values: decimals or "p/q" fractions. Values within 1e-6 of
/// 1/3 snap to 1/3 so a typed "0.3333333" reaches the center point.
double parse_c2(const std::string& text);

/// Runs the command line `args` (args[0] is the program name). Regular output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbit_atlas::cli
