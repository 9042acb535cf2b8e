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

#ifndef QTRAJ_CLASSICAL_HPP
#define QTRAJ_CLASSICAL_HPP

#include <vector>

#include "qtraj/channel.hpp"
#include "qtraj/types.hpp"

namespace qtraj {

/// Throws ValidationError unless m is column stochastic within tol.
void validate_stochastic(const RealMatrix& m, double tol = 1e-12);

/// Throws ValidationError unless p is a probability vector within tol.
void validate_probability_vector(const RealVector& p, double tol = 1e-12);

/// Distribution at the final time of a controlled chain. Interventions act
/// at the intermediate times, each immediately before the transition that
/// follows it, so the order is T_{N-1} M_{N-1} ... T_1 M_1 p. Pass an empty
/// interventions vector for the bare chain.
RealVector classical_propagate(const std::vector<RealMatrix>& transitions,
                               const std::vector<RealMatrix>& interventions,
                               const RealVector& initial);

/// Probability of one final outcome under the same convention.
double classical_final_probability(const std::vector<RealMatrix>& transitions,
                                   const std::vector<RealMatrix>& interventions,
                                   const RealVector& initial,
                                   Eigen::Index final_outcome);

/// Embeds a column-stochastic matrix as a channel on basis-diagonal states,
/// with Kraus operators sqrt(T(j|i)) |j><i|.
QuantumChannel channel_from_stochastic(const RealMatrix& t);

}  // namespace qtraj

#endif  // QTRAJ_CLASSICAL_HPP
