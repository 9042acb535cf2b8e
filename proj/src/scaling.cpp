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

#include "qtraj/scaling.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

#include "qtraj/error.hpp"
#include "qtraj/linalg.hpp"

namespace qtraj {

ScalingDecomposition scaling_unitary_decompose(const QuantumChannel& op,
                                               const GellMannBasis& basis,
                                               double tol) {
    RealMatrix m = channel_matrix(op, basis, tol);
    const Eigen::Index n = m.rows();

    // unital: identity direction is fixed, so the first column is trivial
    double unital_error = std::abs(m(0, 0) - 1.0);
    for (Eigen::Index a = 1; a < n; ++a)
        unital_error = std::max(unital_error, std::abs(m(a, 0)));
    if (unital_error > tol)
        throw NonUnitalError(
            "scaling_unitary_decompose: channel does not fix the identity");

    // trace preserving: the identity direction is never fed by the rest
    double tp_error = 0.0;
    for (Eigen::Index b = 1; b < n; ++b)
        tp_error = std::max(tp_error, std::abs(m(0, b)));
    if (tp_error > tol)
        throw ValidationError(
            "scaling_unitary_decompose: channel is not trace preserving");

    RealMatrix m_tilde = m.bottomRightCorner(n - 1, n - 1);
    Eigen::JacobiSVD<RealMatrix> svd(
        m_tilde, Eigen::ComputeFullU | Eigen::ComputeFullV);
    RealMatrix u = svd.matrixU();
    RealMatrix v = svd.matrixV();
    RealMatrix scaling =
        u * svd.singularValues().asDiagonal() * u.transpose();
    RealMatrix rotation = u * v.transpose();
    return ScalingDecomposition{std::move(m), std::move(m_tilde),
                                std::move(scaling), std::move(rotation),
                                unital_error, tp_error};
}

SubspaceParameters subspace_parameters(const RealMatrix& m,
                                       const GellMannBasis& basis,
                                       Eigen::Index mu, Eigen::Index mup,
                                       double phase_floor) {
    if (m.rows() != basis.size() || m.cols() != basis.size())
        throw DimensionError("subspace_parameters: matrix size mismatch");
    const Eigen::Index s = basis.sym_index(mu, mup);
    const Eigen::Index a = basis.asym_index(mu, mup);

    RealMatrix block(2, 2);
    block << m(s, s), m(s, a), m(a, s), m(a, a);

    Eigen::JacobiSVD<RealMatrix> svd(block);
    double s0 = svd.singularValues()(0);
    double s1 = svd.singularValues()(1);
    double ell;
    if (s0 < kLogGuard || s1 < kLogGuard)
        ell = std::numeric_limits<double>::infinity();
    else
        ell = -0.5 * (std::log(s0) + std::log(s1));

    // orthogonal Procrustes angle of the block
    Complex c((block(0, 0) + block(1, 1)) / 2.0,
              (block(0, 1) - block(1, 0)) / 2.0);
    std::optional<double> phi = scaling_phase(c, phase_floor);

    double leakage = 0.0;
    for (Eigen::Index row : {s, a})
        for (Eigen::Index col = 0; col < m.cols(); ++col)
            if (col != s && col != a) {
                leakage = std::max(leakage, std::abs(m(row, col)));
                leakage = std::max(leakage, std::abs(m(col, row)));
            }
    return SubspaceParameters{ell, phi, leakage};
}

Complex coherence_factor(const RealVector& b_values,
                         const RealVector& populations, double omega,
                         double t) {
    if (b_values.size() != populations.size())
        throw DimensionError("coherence_factor: population count mismatch");
    Complex c(0.0, 0.0);
    for (Eigen::Index g = 0; g < b_values.size(); ++g)
        c += populations(g) *
             std::exp(Complex(0.0, -b_values(g) * omega * t));
    return c;
}

double scaling_strength(Complex c) {
    double mag = std::abs(c);
    if (mag < kLogGuard) return std::numeric_limits<double>::infinity();
    return -std::log(mag);
}

std::optional<double> scaling_phase(Complex c, double floor) {
    if (std::abs(c) < floor) return std::nullopt;
    return std::atan2(c.imag(), c.real());
}

double linear_entropy_from_scaling(const SpectralHamiltonian& spec,
                                   const RealVector& populations,
                                   const Matrix& rho, double t) {
    const Eigen::Index d = spec.system_dim();
    if (rho.rows() != d || rho.cols() != d)
        throw DimensionError("linear_entropy_from_scaling: state dim mismatch");
    if (std::abs(rho.trace().real() - 1.0) > 1e-9)
        throw ValidationError("linear_entropy_from_scaling: state not unit trace");

    // coherence coordinates live in the coupling eigenframe
    Matrix rho_frame = spec.s_vectors().adjoint() * rho * spec.s_vectors();
    GellMannBasis basis(d);
    RealVector x = basis.coordinates(rho_frame);

    double purity = 1.0 / double(d);
    for (Eigen::Index l = 1; l < d; ++l) {
        double xd = x(basis.diag_index(l));
        purity += xd * xd;
    }
    for (Eigen::Index mu = 0; mu < d; ++mu)
        for (Eigen::Index mup = mu + 1; mup < d; ++mup) {
            Complex c = coherence_factor(spec.b_values(), populations,
                                         spec.omega(mu, mup), t);
            double ell = scaling_strength(c);
            double xs = x(basis.sym_index(mu, mup));
            double xa = x(basis.asym_index(mu, mup));
            purity += std::exp(-2.0 * ell) * (xs * xs + xa * xa);
        }
    return 1.0 - purity;
}

}  // namespace qtraj
