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

#include "qtraj/game.hpp"

#include <cmath>

#include "qtraj/classical.hpp"
#include "qtraj/density_matrix.hpp"
#include "qtraj/dilation.hpp"
#include "qtraj/error.hpp"
#include "qtraj/linalg.hpp"

namespace qtraj {

namespace {

Matrix bit_flip() {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
}

DilatedProcess game_process(const SpectralHamiltonian& spec,
                            const Matrix& rho_env, const Vector& psi,
                            double t) {
    if (spec.system_dim() != 2)
        throw DimensionError("three_step_game: system must be a qubit");
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw ValidationError("three_step_game: input must be normalized");
    Matrix rho = psi * psi.adjoint();
    return DilatedProcess::equidistant(spec, rho, rho_env, 3, t);
}

}  // namespace

GameResult three_step_game(const SpectralHamiltonian& spec,
                           const Matrix& rho_env, const Vector& psi,
                           double t) {
    auto proc = game_process(spec, rho_env, psi, t);
    Vector target = bit_flip() * psi;

    auto ident = QuantumChannel::identity(2);
    DensityMatrix left_alone = run_dilated_process(proc, {ident, ident});
    DensityMatrix flipped = run_dilated_process(
        proc, {ident, QuantumChannel::from_unitary(bit_flip())});

    return GameResult{dephasing_factor(spec, rho_env, t),
                      fidelity_pure(target, left_alone),
                      fidelity_pure(target, flipped)};
}

double break_strategy_fidelity(const SpectralHamiltonian& spec,
                               const Matrix& rho_env, const Vector& psi,
                               double t, const CausalBreakBasis& basis,
                               const RealMatrix& weights) {
    auto proc = game_process(spec, rho_env, psi, t);
    if (basis.dim() != 2)
        throw DimensionError("break_strategy_fidelity: basis must be qubit");
    if (weights.rows() != basis.size() || weights.cols() != basis.size())
        throw DimensionError("break_strategy_fidelity: weight shape mismatch");
    validate_stochastic(weights, 1e-9);

    // convex mixture of causal breaks, trace preserving by construction
    Matrix superop = Matrix::Zero(4, 4);
    for (Eigen::Index k = 0; k < basis.size(); ++k)
        for (Eigen::Index l = 0; l < basis.size(); ++l)
            superop += weights(l, k) * basis.break_channel(k, l).superop();
    auto strategy = QuantumChannel::from_superop(superop);

    DensityMatrix out = run_dilated_process(
        proc, {QuantumChannel::identity(2), strategy});
    Vector target = bit_flip() * psi;
    return fidelity_pure(target, out);
}

}  // namespace qtraj
