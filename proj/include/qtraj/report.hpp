// Copyright 2026 The qtraj developers
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

#include <string>

#include <json.hpp>

#include "qtraj/types.hpp"

namespace qtraj {

/// FNV-1a hash of the compact serialization, rendered as 0x-prefixed hex.
/// Identifies a configuration independently of file formatting.
std::string config_fingerprint(const nlohmann::json& config);

/// Assembles the standard report envelope around scenario outputs.
nlohmann::json make_report(const nlohmann::json& config,
                           const std::string& scenario,
                           nlohmann::json outputs, double timing_ms);

/// Two-space-indented JSON with a trailing newline; keys are sorted by the
/// container, so equal reports serialize to identical bytes.
std::string report_to_json_text(const nlohmann::json& report);

/// Flattens the report to "key,value" lines. Paths join nested keys and
/// array indices with dots; numbers use 17 significant digits with '.' as
/// the decimal mark regardless of locale; lines end with LF.
std::string report_to_csv(const nlohmann::json& report);

/// JSON value for a complex matrix: {"re": [[..]], "im": [[..]]}.
nlohmann::json matrix_to_json(const Matrix& m);

}  // namespace qtraj
