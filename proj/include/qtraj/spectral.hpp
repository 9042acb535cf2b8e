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

#include "qtraj/linalg.hpp"

namespace qtraj {

/// Product interaction Hamiltonian H = S (x) B given through the spectra of
/// the two factors. Eigenvectors are the columns of the stored unitaries, so
/// the rank-one eigenprojectors are complete and orthogonal by construction.
class SpectralHamiltonian {
  public:
    /// Both factors diagonal in the computational basis.
    static SpectralHamiltonian diagonal(const RealVector& s_values,
                                        const RealVector& b_values);

    /// General Hermitian factors; spectra via eigendecomposition.
    static SpectralHamiltonian from_operators(
        const Matrix& s, const Matrix& b,
        double tol = default_tolerances().hermiticity);

    Eigen::Index system_dim() const { return s_values_.size(); }
    Eigen::Index env_dim() const { return b_values_.size(); }
    Eigen::Index joint_dim() const { return system_dim() * env_dim(); }

    const RealVector& s_values() const { return s_values_; }
    const RealVector& b_values() const { return b_values_; }
    const Matrix& s_vectors() const { return s_vectors_; }
    const Matrix& b_vectors() const { return b_vectors_; }

    Matrix system_op() const;   // S
    Matrix env_op() const;      // B
    Matrix s_projector(Eigen::Index mu) const;
    Matrix b_projector(Eigen::Index gamma) const;

    /// Gap s_mu - s_mu'.
    double omega(Eigen::Index mu, Eigen::Index mu_p) const {
        return s_values_(mu) - s_values_(mu_p);
    }

    /// Population of env eigenvector gamma in rho_env.
    double env_population(const Matrix& rho_env, Eigen::Index gamma) const;

  private:
    RealVector s_values_, b_values_;
    Matrix s_vectors_, b_vectors_;
};

/// H = S (x) B as a joint-space matrix.
Matrix build_product_hamiltonian(const SpectralHamiltonian& spec);

/// Coherence multiplier Tr(rho_env exp(-i B t)); modulus is at most 1, with
/// equality when rho_env is an eigenprojector of B.
Complex dephasing_factor(const SpectralHamiltonian& spec, const Matrix& rho_env,
                         double t);

}  // namespace qtraj
