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

#include "qtraj/spectral.hpp"

#include <cmath>

namespace qtraj {

SpectralHamiltonian SpectralHamiltonian::diagonal(const RealVector& s_values,
                                                  const RealVector& b_values) {
    if (s_values.size() < 2 || b_values.size() < 1)
        throw DimensionError("SpectralHamiltonian: need d >= 2, d_E >= 1");
    SpectralHamiltonian h;
    h.s_values_ = s_values;
    h.b_values_ = b_values;
    h.s_vectors_ = Matrix::Identity(s_values.size(), s_values.size());
    h.b_vectors_ = Matrix::Identity(b_values.size(), b_values.size());
    return h;
}

SpectralHamiltonian SpectralHamiltonian::from_operators(const Matrix& s,
                                                        const Matrix& b,
                                                        double tol) {
    if (!is_hermitian(s, tol) || !is_hermitian(b, tol))
        throw ValidationError("SpectralHamiltonian: factors must be Hermitian");
    SpectralHamiltonian h;
    Eigen::SelfAdjointEigenSolver<Matrix> es(s), eb(b);
    h.s_values_ = es.eigenvalues();
    h.s_vectors_ = es.eigenvectors();
    h.b_values_ = eb.eigenvalues();
    h.b_vectors_ = eb.eigenvectors();
    return h;
}

Matrix SpectralHamiltonian::system_op() const {
    Vector d = s_values_.cast<Complex>();
    return s_vectors_ * d.asDiagonal() * s_vectors_.adjoint();
}

Matrix SpectralHamiltonian::env_op() const {
    Vector d = b_values_.cast<Complex>();
    return b_vectors_ * d.asDiagonal() * b_vectors_.adjoint();
}

Matrix SpectralHamiltonian::s_projector(Eigen::Index mu) const {
    return s_vectors_.col(mu) * s_vectors_.col(mu).adjoint();
}

Matrix SpectralHamiltonian::b_projector(Eigen::Index gamma) const {
    return b_vectors_.col(gamma) * b_vectors_.col(gamma).adjoint();
}

double SpectralHamiltonian::env_population(const Matrix& rho_env,
                                           Eigen::Index gamma) const {
    Complex p =
        (b_vectors_.col(gamma).adjoint() * rho_env * b_vectors_.col(gamma))(0, 0);
    return p.real();
}

Matrix build_product_hamiltonian(const SpectralHamiltonian& spec) {
    return tensor_product(spec.system_op(), spec.env_op());
}

Complex dephasing_factor(const SpectralHamiltonian& spec, const Matrix& rho_env,
                         double t) {
    if (rho_env.rows() != spec.env_dim())
        throw DimensionError("dephasing_factor: environment dimension mismatch");
    Complex f = 0.0;
    for (Eigen::Index g = 0; g < spec.env_dim(); ++g)
        f += spec.env_population(rho_env, g) *
             std::exp(Complex(0.0, -spec.b_values()(g) * t));
    return f;
}

}  // namespace qtraj
