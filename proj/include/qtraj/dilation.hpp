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
#include <utility>
#include <vector>

#include "qtraj/causal_break.hpp"
#include "qtraj/spectral.hpp"

namespace qtraj {

/// Discrete-time system-environment process: a joint initial state and one
/// unitary per step. Time runs over N slots t_1 .. t_N with N-1 unitaries in
/// between; controls act on the system factor at t_1 .. t_{N-1}, each
/// immediately before the following unitary.
class DilatedProcess {
  public:
    DilatedProcess(const Matrix& initial_joint, std::vector<Matrix> unitaries,
                   Eigen::Index d_sys, Eigen::Index d_env);

    /// exp(-i (S x B) t) at every step, product initial state.
    static DilatedProcess equidistant(const SpectralHamiltonian& spec,
                                      const Matrix& rho_sys,
                                      const Matrix& rho_env, int n_times,
                                      double t);

    Eigen::Index system_dim() const { return d_sys_; }
    Eigen::Index env_dim() const { return d_env_; }
    int n_times() const { return int(unitaries_.size()) + 1; }
    int n_steps() const { return int(unitaries_.size()); }

    const Matrix& initial_joint() const { return initial_; }
    const Matrix& unitary(int step) const;  // step in [0, N-2]

    /// Markovian variant: the environment is replaced by tau after every
    /// step, erasing all system-environment correlations.
    void enable_environment_reset(const Matrix& tau);
    bool reset_enabled() const { return reset_.size() != 0; }
    const Matrix& reset_state() const;

    Matrix evolve_step(const Matrix& joint, int step) const;
    Matrix apply_system_control(const Matrix& joint,
                                const QuantumChannel& ctrl) const;

    /// Joint state after breaks (k, l) at steps 1..prefix.size(), each break
    /// followed by the step unitary. Trace equals the joint probability of
    /// the measured outcomes.
    Matrix joint_after_breaks(
        const CausalBreakBasis& basis,
        const std::vector<std::pair<Eigen::Index, Eigen::Index>>& prefix) const;

  private:
    Eigen::Index d_sys_ = 0, d_env_ = 0;
    Matrix initial_;
    std::vector<Matrix> unitaries_;
    Matrix reset_;
};

/// Final-time system state under one control channel per step; the result
/// carries an explicit weight when the controls are trace decreasing.
DensityMatrix run_dilated_process(const DilatedProcess& proc,
                                  const std::vector<QuantumChannel>& controls);

/// Same run returning the raw (possibly trace-decreased) joint matrix.
Matrix run_dilated_process_raw(const DilatedProcess& proc,
                               const std::vector<QuantumChannel>& controls);

/// System map across one step, conditioned on a causal-break history:
/// breaks at all earlier steps plus the measurement outcome at the current
/// one. The repreparation index of the current break is irrelevant because
/// the map is tomographed over all inputs.
struct ConditionalMap {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> prefix;
    Eigen::Index outcome;  // k at the conditioning break
    int step;              // 1-based step the map crosses
    double probability;    // joint probability of prefix outcomes + outcome
    QuantumChannel map;
};

ConditionalMap conditional_map(
    const DilatedProcess& proc, const CausalBreakBasis& basis,
    const std::vector<std::pair<Eigen::Index, Eigen::Index>>& prefix,
    Eigen::Index outcome, double probability_floor = 1e-12);

struct MarkovReport {
    bool markovian = true;
    double max_deviation = 0.0;  // superoperator max-entry distance
    double tolerance = 0.0;
    long histories_checked = 0;
    long histories_skipped = 0;  // conditioning probability under the floor
};

/// Compares all conditional maps within each step against the first valid
/// one; the process is Markovian when no pair differs beyond tol.
MarkovReport markovianity_check(const DilatedProcess& proc,
                                const CausalBreakBasis& basis,
                                double tol = 1e-6,
                                std::uint64_t budget = 1000000,
                                double probability_floor = 1e-12);

}  // namespace qtraj
