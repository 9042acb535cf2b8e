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

#ifndef QTRAJ_SCALING_HPP
#define QTRAJ_SCALING_HPP

#include <optional>

#include "qtraj/gell_mann.hpp"
#include "qtraj/spectral.hpp"
#include "qtraj/types.hpp"

namespace qtraj {

/// Left polar split of the traceless transfer block of a unital channel:
/// m_tilde = scaling * rotation with scaling symmetric positive semidefinite
/// and rotation orthogonal.
struct ScalingDecomposition {
    RealMatrix m;         // full transfer matrix, trivial first row and column
    RealMatrix m_tilde;   // traceless block
    RealMatrix scaling;   // symmetric PSD factor
    RealMatrix rotation;  // orthogonal factor
    double unital_error;
    double tp_error;
};

/// Throws NonUnitalError when the identity is not fixed and ValidationError
/// when the map is not trace preserving within tol.
ScalingDecomposition scaling_unitary_decompose(const QuantumChannel& op,
                                               const GellMannBasis& basis,
                                               double tol = 1e-9);

/// Strength and angle read off one coherence subspace of a transfer matrix.
/// ell is the negative log contraction (infinite when the block vanishes),
/// phi the rotation angle (empty below phase_floor), leakage the largest
/// coupling between the subspace and any other basis direction.
struct SubspaceParameters {
    double ell;
    std::optional<double> phi;
    double leakage;
};

SubspaceParameters subspace_parameters(const RealMatrix& m,
                                       const GellMannBasis& basis,
                                       Eigen::Index mu, Eigen::Index mup,
                                       double phase_floor = 1e-12);

/// Coherence multiplier of a product dilation after time t on the subspace
/// with level splitting omega: sum_gamma p_gamma exp(-i b_gamma omega t).
Complex coherence_factor(const RealVector& b_values,
                         const RealVector& populations, double omega,
                         double t);

/// -ln|c|, infinite under the representable-log guard.
double scaling_strength(Complex c);

/// arg c, empty when |c| is below the floor.
std::optional<double> scaling_phase(Complex c, double floor = 1e-12);

/// Linear entropy of the post-step state predicted from the per-subspace
/// scaling strengths alone. Populations are untouched by the family, so only
/// coherence coordinates contract.
double linear_entropy_from_scaling(const SpectralHamiltonian& spec,
                                   const RealVector& populations,
                                   const Matrix& rho, double t);

}  // namespace qtraj

#endif  // QTRAJ_SCALING_HPP
