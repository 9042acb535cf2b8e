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

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qtraj/channel.hpp"
#include "qtraj/error.hpp"
#include "qtraj/random.hpp"
#include "qtraj/types.hpp"

namespace qtraj {

/// Typed access into an experiment configuration. Every accessor addresses a
/// field by JSON pointer ("/coupling/s_values") and raises ConfigError with
/// that pointer in the message when the field is missing or mistyped.

bool config_has(const nlohmann::json& cfg, const std::string& pointer);
const nlohmann::json& config_require(const nlohmann::json& cfg,
                                     const std::string& pointer);

double config_number(const nlohmann::json& cfg, const std::string& pointer);
double config_number_or(const nlohmann::json& cfg, const std::string& pointer,
                        double fallback);
std::int64_t config_integer(const nlohmann::json& cfg,
                            const std::string& pointer);
std::int64_t config_integer_or(const nlohmann::json& cfg,
                               const std::string& pointer,
                               std::int64_t fallback);
std::uint64_t config_uint(const nlohmann::json& cfg,
                          const std::string& pointer);
bool config_bool_or(const nlohmann::json& cfg, const std::string& pointer,
                    bool fallback);
std::string config_string(const nlohmann::json& cfg,
                          const std::string& pointer);
RealVector config_real_vector(const nlohmann::json& cfg,
                              const std::string& pointer);
RealMatrix config_real_matrix(const nlohmann::json& cfg,
                              const std::string& pointer);

/// Normalized state vector from {"re": [...], "im": [...]} at the pointer.
Vector parse_pure_state(const nlohmann::json& cfg, const std::string& pointer,
                        Eigen::Index d);

/// Builds a density matrix from a state description object. Supported
/// "type" values: maximally_mixed, diagonal (populations), pure (re, im),
/// basis (index), random_mixed, random_pure. Random types draw from rng and
/// set used_random so the caller can enforce the seed requirement.
Matrix parse_state(const nlohmann::json& cfg, const std::string& pointer,
                   Eigen::Index d, Rng& rng, bool& used_random);

/// Builds a control channel from a description object. Supported "type"
/// values: identity, shift (power), unitary (re, im), random_unitary.
QuantumChannel parse_control(const nlohmann::json& cfg,
                             const std::string& pointer, Eigen::Index d,
                             Rng& rng, bool& used_random);

}  // namespace qtraj
