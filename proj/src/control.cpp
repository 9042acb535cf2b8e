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

#include "qtraj/control.hpp"

#include <cmath>
#include <limits>

#include "qtraj/error.hpp"
#include "qtraj/linalg.hpp"

namespace qtraj {

Matrix shift_operator(Eigen::Index d) {
    if (d < 2) throw DimensionError("shift_operator: need dim >= 2");
    Matrix g = Matrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) g((j + d - 1) % d, j) = 1.0;
    return g;
}

Matrix residual_pulse_unitary(Eigen::Index d,
                              const std::vector<Eigen::Index>& powers) {
    Eigen::Index total = 0;
    for (Eigen::Index c : powers) {
        if (c < 0) throw ValidationError("residual_pulse_unitary: negative power");
        total += c;
    }
    return matrix_power(shift_operator(d), total % d);
}

std::vector<Eigen::Index> decoupling_powers(Eigen::Index d) {
    if (d < 2) throw DimensionError("decoupling_powers: need dim >= 2");
    return std::vector<Eigen::Index>(size_t(d - 1), 1);
}

QuantumChannel simulate_pulsed_circuit(const SpectralHamiltonian& spec,
                                       const Matrix& rho_env, double t,
                                       const std::vector<Eigen::Index>& powers) {
    const Eigen::Index d = spec.system_dim(), de = spec.env_dim();
    if (rho_env.rows() != de || rho_env.cols() != de)
        throw DimensionError("simulate_pulsed_circuit: bath state dim mismatch");

    Matrix u = hermitian_evolve(build_product_hamiltonian(spec), t);
    Matrix g = shift_operator(d);
    Matrix id_env = Matrix::Identity(de, de);

    // total joint propagator of the pulsed circuit, one segment per power + 1
    Matrix circuit = u;
    for (Eigen::Index c : powers) {
        if (c < 0)
            throw ValidationError("simulate_pulsed_circuit: negative power");
        circuit = (u * tensor_product(matrix_power(g, c), id_env) * circuit)
                      .eval();
    }

    Matrix superop(d * d, d * d);
    for (Eigen::Index x = 0; x < d; ++x)
        for (Eigen::Index y = 0; y < d; ++y) {
            Matrix unit = Matrix::Zero(d, d);
            unit(x, y) = 1.0;
            Matrix out = partial_trace(
                circuit * tensor_product(unit, rho_env) * circuit.adjoint(),
                d, de, Keep::First);
            superop.col(x * d + y) = vec(out);
        }
    return QuantumChannel::from_superop(superop);
}

double effective_splitting(const SpectralHamiltonian& spec,
                           const std::vector<Eigen::Index>& powers,
                           Eigen::Index mu, Eigen::Index mup) {
    const Eigen::Index d = spec.system_dim();
    if (mu < 0 || mup < 0 || mu >= d || mup >= d)
        throw DimensionError("effective_splitting: level index out of range");
    for (Eigen::Index c : powers)
        if (c < 0) throw ValidationError("effective_splitting: negative power");
    // a shift pulse relabels every level one frame down per unit power
    double total = 0.0;
    Eigen::Index shift = 0;
    for (size_t r = 0; r <= powers.size(); ++r) {
        if (r > 0) shift = (shift + powers[r - 1]) % d;
        Eigen::Index fmu = (mu + d - shift) % d;
        Eigen::Index fmup = (mup + d - shift) % d;
        total += spec.omega(fmu, fmup);
    }
    return total;
}

Complex pulsed_coherence_factor(const SpectralHamiltonian& spec,
                                const RealVector& populations, double t,
                                const std::vector<Eigen::Index>& powers,
                                Eigen::Index mu, Eigen::Index mup) {
    if (populations.size() != spec.env_dim())
        throw DimensionError("pulsed_coherence_factor: population count");
    double omega_eff = effective_splitting(spec, powers, mu, mup);
    Complex c(0.0, 0.0);
    for (Eigen::Index g = 0; g < spec.env_dim(); ++g)
        c += populations(g) *
             std::exp(Complex(0.0, -spec.b_values()(g) * omega_eff * t));
    return c;
}

Matrix control_coefficient_matrix(const QuantumChannel& op,
                                  const Matrix& frame) {
    const Eigen::Index d = op.dim();
    if (frame.rows() != d || frame.cols() != d || !is_unitary(frame))
        throw ValidationError("control_coefficient_matrix: bad frame");
    Matrix w = tensor_product(frame, frame.conjugate());
    return w.adjoint() * op.superop() * w;
}

Matrix multistep_transfer(const SpectralHamiltonian& spec,
                          const RealVector& populations, double t,
                          const std::vector<QuantumChannel>& controls) {
    const Eigen::Index d = spec.system_dim();
    if (populations.size() != spec.env_dim())
        throw DimensionError("multistep_transfer: population count");
    if (controls.empty())
        throw DimensionError("multistep_transfer: need at least one control");

    std::vector<Matrix> g;
    g.reserve(controls.size());
    for (const auto& ctrl : controls) {
        if (ctrl.dim() != d)
            throw DimensionError("multistep_transfer: control dim mismatch");
        g.push_back(control_coefficient_matrix(ctrl, spec.s_vectors()));
    }

    Matrix total = Matrix::Zero(d * d, d * d);
    for (Eigen::Index gamma = 0; gamma < spec.env_dim(); ++gamma) {
        Vector phases(d * d);
        for (Eigen::Index mu = 0; mu < d; ++mu)
            for (Eigen::Index mup = 0; mup < d; ++mup)
                phases(mu * d + mup) = std::exp(Complex(
                    0.0, -spec.b_values()(gamma) * spec.omega(mu, mup) * t));
        Matrix acc = Matrix::Identity(d * d, d * d);
        for (const auto& ga : g) {
            acc = (ga * acc).eval();
            acc = (phases.asDiagonal() * acc).eval();
        }
        total += populations(gamma) * acc;
    }
    return total;
}

RealMatrix multistep_strengths(const Matrix& transfer) {
    RealMatrix out(transfer.rows(), transfer.cols());
    for (Eigen::Index i = 0; i < transfer.rows(); ++i)
        for (Eigen::Index j = 0; j < transfer.cols(); ++j) {
            double mag = std::abs(transfer(i, j));
            out(i, j) = mag < kLogGuard
                            ? std::numeric_limits<double>::infinity()
                            : -std::log(mag);
        }
    return out;
}

}  // namespace qtraj
