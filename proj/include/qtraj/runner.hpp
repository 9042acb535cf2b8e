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
#include <vector>

#include <json.hpp>

namespace qtraj {

/// One scenario-level invariant evaluated during a run. The runner always
/// records these; callers decide whether a failure is fatal.
struct AssertRecord {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct RunOptions {
    int threads = 1;
    bool deterministic = false;  // reports timing_ms as 0 for stable bytes
};

struct RunResult {
    nlohmann::json report;
    std::vector<AssertRecord> asserts;

    bool asserts_ok() const {
        for (const auto& a : asserts)
            if (!a.ok) return false;
        return true;
    }
};

/// Dispatches on config["scenario"]: tomography, reconstruct, markov-test,
/// game, mutualinfo, decouple or scaling-sweep. Scenarios that sample random
/// objects require a "seed" field; equal configs yield equal reports.
RunResult run_experiment(const nlohmann::json& config,
                         const RunOptions& opts = {});

}  // namespace qtraj
