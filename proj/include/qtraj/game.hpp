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

#ifndef QTRAJ_GAME_HPP
#define QTRAJ_GAME_HPP

#include "qtraj/causal_break.hpp"
#include "qtraj/spectral.hpp"
#include "qtraj/types.hpp"

namespace qtraj {

/// Outcome of the three-time recovery game on a dephasing qubit. The target
/// at the final time is the flipped input; a coherent midpoint flip undoes
/// the commuting coupling exactly, while any midpoint measure-and-reprepare
/// strategy is scored through break_strategy_fidelity.
struct GameResult {
    Complex coherence_factor;  // bath multiplier across one leg
    double fidelity_identity;  // leave the midpoint alone
    double fidelity_flip;      // coherent bit flip at the midpoint
};

GameResult three_step_game(const SpectralHamiltonian& spec,
                           const Matrix& rho_env, const Vector& psi, double t);

/// Fidelity to the flipped target when the midpoint action measures with
/// outcome k and reprepares basis state l with probability weights(l, k).
/// weights must be column stochastic.
double break_strategy_fidelity(const SpectralHamiltonian& spec,
                               const Matrix& rho_env, const Vector& psi,
                               double t, const CausalBreakBasis& basis,
                               const RealMatrix& weights);

}  // namespace qtraj

#endif  // QTRAJ_GAME_HPP
