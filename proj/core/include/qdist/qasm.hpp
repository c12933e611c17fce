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

/**
 * @file qasm.hpp
 * @brief Reader and writer for the OpenQASM 2 subset used by the toolkit.
 *
 * Accepted input: an optional `OPENQASM 2.0;` header, `include` lines
 * (ignored), exactly one `qreg`, at most one `creg`, `barrier` and
 * `measure` statements (ignored) and applications of the supported gates.
 * Gate parameters may be arithmetic expressions over numbers and `pi`.
 * `u`, `u1`, `u2` and `p` are read as their u3/rz equivalents; any other
 * gate name, and any `gate` definition, is rejected.
 */

#include <filesystem>
#include <string>
#include <string_view>

#include "qdist/circuit.hpp"

namespace qdist {

/**
 * Throws QasmSyntaxError, UnsupportedGateError or RegisterError.
 */
Circuit parse_qasm(std::string_view text, std::string id = {});

/**
 * One gate per line, angles with 17 significant digits so the output parses
 * back to the identical gate list. Throws MarkerPresentError.
 */
std::string emit_qasm(const Circuit& circuit);

Circuit read_qasm_file(const std::filesystem::path& path);
void write_qasm_file(const Circuit& circuit, const std::filesystem::path& path);

}  // namespace qdist
