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

#include <utility>
#include <vector>

#include "qtraj/channel.hpp"
#include "qtraj/density_matrix.hpp"

namespace qtraj {

/// Informationally complete measure-and-reprepare instrument. A break with
/// outcome k and repreparation l acts as rho -> Tr(povm[k] rho) * reprep[l],
/// which erases the quantum memory of the system line.
///
/// The default basis uses the d^2 rank-one projectors onto computational and
/// pairwise-superposition vectors, congruence-corrected so the POVM sums to
/// the identity; repreparations are the same pure states, unrescaled. Duals
/// satisfy Tr(dual[k] povm[l]) = delta_kl.
class CausalBreakBasis {
  public:
    /// Builds the default basis for system dimension d.
    /// Throws NotInformationallyComplete if the Gram matrix of either set is
    /// ill-conditioned (condition number above cond_limit).
    static CausalBreakBasis standard(Eigen::Index d, double cond_limit = 1e8);

    /// Builds from explicit sets; validates POVM completeness, positivity and
    /// informational completeness of both sets.
    static CausalBreakBasis from_elements(std::vector<Matrix> povm,
                                          std::vector<Matrix> reprep,
                                          double cond_limit = 1e8);

    Eigen::Index dim() const { return d_; }
    Eigen::Index size() const { return Eigen::Index(povm_.size()); }

    const Matrix& povm(Eigen::Index k) const { return povm_.at(size_t(k)); }
    const Matrix& reprep(Eigen::Index l) const { return reprep_.at(size_t(l)); }
    const Matrix& dual(Eigen::Index k) const { return dual_.at(size_t(k)); }
    const Matrix& reprep_dual(Eigen::Index l) const {
        return reprep_dual_.at(size_t(l));
    }

    double gram_condition() const { return gram_cond_; }

    /// Trace-decreasing channel of one break: |reprep[l]>><<povm[k]|.
    const QuantumChannel& break_channel(Eigen::Index k, Eigen::Index l) const;

  private:
    CausalBreakBasis() = default;
    Eigen::Index d_ = 0;
    std::vector<Matrix> povm_, reprep_, dual_, reprep_dual_;
    std::vector<QuantumChannel> break_channels_;  // index k * d^2 + l
    double gram_cond_ = 0.0;
};

/// Dual frame of a spanning set of Hermitian operators via Gram inversion.
/// Throws NotInformationallyComplete when cond(Gram) exceeds cond_limit.
std::vector<Matrix> dual_frame(const std::vector<Matrix>& elements,
                               double cond_limit = 1e8,
                               double* condition_out = nullptr);

/// One causal break applied to a state: returns the outcome probability
/// Tr(povm[k] rho) and the reprepared state.
std::pair<double, DensityMatrix> apply_causal_break(
    const CausalBreakBasis& basis, Eigen::Index k, Eigen::Index l,
    const DensityMatrix& rho);

}  // namespace qtraj
