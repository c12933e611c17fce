// Copyright 2026 The qdist Authors
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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qdist::cli {

/** Process exit codes. */
enum ExitCode : int { kOk = 0, kUserError = 1, kInternalError = 2 };

/** Environment variable consulted when --seed is absent. */
inline constexpr const char* kSeedEnv = "QDIST_SEED";

/**
 * Parses "2..10" (inclusive range), "2..10:2" (range with step) or "2,3,8".
 * Throws std::invalid_argument on malformed input.
 */
std::vector<std::size_t> parse_count_list(std::string_view text);

/**
 * Entry point shared by the binary and the tests. args[0] is the program
 * name. Never throws.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdist::cli
