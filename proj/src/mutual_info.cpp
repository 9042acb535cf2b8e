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

#include "qtraj/mutual_info.hpp"

#include <cmath>

#include "qtraj/classical.hpp"
#include "qtraj/density_matrix.hpp"
#include "qtraj/error.hpp"
#include "qtraj/linalg.hpp"

namespace qtraj {

namespace {

// plain evolution up to t_step, no interventions
Matrix joint_at_step(const DilatedProcess& proc, int step) {
    if (step < 1 || step > proc.n_steps())
        throw DimensionError("memory information: step out of range");
    Matrix joint = proc.initial_joint();
    for (int a = 0; a < step - 1; ++a) joint = proc.evolve_step(joint, a);
    return joint;
}

double entropy_bits(const Matrix& rho) {
    return von_neumann_entropy(DensityMatrix(rho));
}

}  // namespace

double quantum_memory_information(const DilatedProcess& proc, int step,
                                  const Matrix& resend) {
    const Eigen::Index d = proc.system_dim(), de = proc.env_dim();
    if (resend.rows() != d || resend.cols() != d)
        throw DimensionError("quantum_memory_information: resend dim mismatch");
    (void)DensityMatrix(resend);

    Matrix joint = joint_at_step(proc, step);

    // registers ordered (B, S, E): park the fresh state in B, then swap it
    // into S so B keeps the old system content with its bath correlations
    Matrix sigma = tensor_product(resend, joint);
    Matrix swap = Matrix::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) swap(j * d + i, i * d + j) = 1.0;
    Matrix w = tensor_product(swap, Matrix::Identity(de, de));
    sigma = (w * sigma * w.adjoint()).eval();

    Matrix lifted = tensor_product(Matrix::Identity(d, d),
                                   proc.unitary(step - 1));
    sigma = (lifted * sigma * lifted.adjoint()).eval();
    if (proc.reset_enabled()) {
        Matrix bs = partial_trace(sigma, d * d, de, Keep::First);
        sigma = tensor_product(bs, proc.reset_state());
    }

    Matrix rho_bc = partial_trace(sigma, d * d, de, Keep::First);
    Matrix rho_b = partial_trace(rho_bc, d, d, Keep::First);
    Matrix rho_c = partial_trace(rho_bc, d, d, Keep::Second);
    double info =
        entropy_bits(rho_b) + entropy_bits(rho_c) - entropy_bits(rho_bc);
    return std::max(0.0, info);
}

double classical_memory_information(const DilatedProcess& proc, int step,
                                    const CausalBreakBasis& basis,
                                    const RealMatrix& strategy) {
    const Eigen::Index d = proc.system_dim(), de = proc.env_dim();
    if (basis.dim() != d)
        throw DimensionError("classical_memory_information: basis mismatch");
    const Eigen::Index n = basis.size();
    if (strategy.rows() != n || strategy.cols() != n)
        throw DimensionError("classical_memory_information: strategy shape");
    validate_stochastic(strategy, 1e-9);

    Matrix joint = joint_at_step(proc, step);
    Matrix id_env = Matrix::Identity(de, de);

    Matrix average = Matrix::Zero(d, d);
    double conditional_entropy = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        Matrix env_cond = partial_trace(
            tensor_product(basis.povm(k), id_env) * joint, d, de,
            Keep::Second);
        double pk = env_cond.trace().real();
        if (pk < 1e-15) continue;
        env_cond = ((env_cond + env_cond.adjoint()) / (2.0 * pk)).eval();
        for (Eigen::Index l = 0; l < n; ++l) {
            double weight = pk * strategy(l, k);
            if (weight < 1e-15) continue;
            Matrix evolved = proc.evolve_step(
                tensor_product(basis.reprep(l), env_cond), step - 1);
            Matrix out = partial_trace(evolved, d, de, Keep::First);
            average += weight * out;
            conditional_entropy += weight * entropy_bits(out);
        }
    }
    double info = entropy_bits(average) - conditional_entropy;
    return std::max(0.0, info);
}

RealMatrix constant_strategy(const CausalBreakBasis& basis, Eigen::Index l) {
    if (l < 0 || l >= basis.size())
        throw DimensionError("constant_strategy: index out of range");
    RealMatrix s = RealMatrix::Zero(basis.size(), basis.size());
    s.row(l).setOnes();
    return s;
}

}  // namespace qtraj
