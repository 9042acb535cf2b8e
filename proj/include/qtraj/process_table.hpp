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
#include <json.hpp>
#include <utility>
#include <vector>

#include "qtraj/causal_break.hpp"

namespace qtraj {

/// One slot per step: measurement outcome k and repreparation l, 0-based.
using BreakPair = std::pair<Eigen::Index, Eigen::Index>;
using TrajectoryIndex = std::vector<BreakPair>;

/// Default cap on trajectory enumeration; the environment variable
/// QTRAJ_MAX_TRAJECTORIES overrides it when set.
std::uint64_t trajectory_budget();

/// All (d^2)^{2(N-1)} trajectories in lexicographic (k_1, l_1, k_2, l_2, ...)
/// order. Throws BudgetExceeded when the count is over budget.
std::vector<TrajectoryIndex> enumerate_trajectories(Eigen::Index d, int n_times,
                                                    std::uint64_t budget);

/// Joint outcome probabilities p(k_final, xi) of every elementary trajectory
/// of a process: breaks at steps 1..N-1 described by xi, final measurement
/// k at t_N. Probabilities are joint over all measured outcomes given the
/// repreparation choices.
class ProcessTensorTable {
  public:
    ProcessTensorTable(Eigen::Index d, int n_times, std::uint64_t basis_fp);

    /// Stable 64-bit hash of the basis matrices (17 significant digits,
    /// row-major re/im), used to detect mismatched lookups after reload.
    static std::uint64_t fingerprint(const CausalBreakBasis& basis);

    Eigen::Index dim() const { return d_; }
    int n_times() const { return n_; }
    std::uint64_t basis_fingerprint() const { return fp_; }

    std::uint64_t trajectory_count() const { return count_; }
    std::uint64_t size() const { return count_ * std::uint64_t(d_ * d_); }

    /// Rank in lexicographic (k_1, l_1, ...) order.
    std::uint64_t rank(const TrajectoryIndex& xi) const;
    TrajectoryIndex unrank(std::uint64_t r) const;

    double probability(Eigen::Index k_final, const TrajectoryIndex& xi) const;
    double probability(Eigen::Index k_final, std::uint64_t xi_rank) const;
    void set(Eigen::Index k_final, std::uint64_t xi_rank, double p);

    bool complete() const;

    /// Deviation of sum over all outcome indices from 1, maximized over the
    /// repreparation multi-indices. Requires a complete table.
    double max_completeness_error() const;

    nlohmann::json to_json() const;
    static ProcessTensorTable from_json(const nlohmann::json& j);

  private:
    Eigen::Index d_ = 0;
    int n_ = 0;
    std::uint64_t fp_ = 0;
    std::uint64_t count_ = 0;
    std::vector<double> p_;
    std::vector<char> assigned_;
};

}  // namespace qtraj
