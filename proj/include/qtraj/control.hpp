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

#ifndef QTRAJ_CONTROL_HPP
#define QTRAJ_CONTROL_HPP

#include <optional>
#include <vector>

#include "qtraj/channel.hpp"
#include "qtraj/spectral.hpp"
#include "qtraj/types.hpp"

namespace qtraj {

/// Cyclic shift on the coupling eigenbasis: |j> -> |j-1 mod d|. For a qubit
/// this is the bit flip.
Matrix shift_operator(Eigen::Index d);

/// Net frame change left over after all interior pulses: shift to the power
/// of the summed pulse exponents.
Matrix residual_pulse_unitary(Eigen::Index d,
                              const std::vector<Eigen::Index>& powers);

/// Pulse exponents of the echo sequence that averages every level splitting
/// to zero: d - 1 interior unit shifts, giving one full frame cycle.
std::vector<Eigen::Index> decoupling_powers(Eigen::Index d);

/// System channel of the pulsed evolution: powers.size() + 1 equal segments
/// of exp(-i S x B t) with a shift-power pulse between consecutive segments.
/// Tomographed from the joint-space simulation, no closed form involved.
QuantumChannel simulate_pulsed_circuit(const SpectralHamiltonian& spec,
                                       const Matrix& rho_env, double t,
                                       const std::vector<Eigen::Index>& powers);

/// Splitting accumulated by the (mu, mu') coherence across all segments,
/// with the frame permuted by the cumulative pulses. Zero for every pair
/// exactly when the sequence decouples.
double effective_splitting(const SpectralHamiltonian& spec,
                           const std::vector<Eigen::Index>& powers,
                           Eigen::Index mu, Eigen::Index mup);

/// Closed-form coherence multiplier of the pulsed family on one subspace,
/// evaluated in the frame of the residual pulse unitary.
Complex pulsed_coherence_factor(const SpectralHamiltonian& spec,
                                const RealVector& populations, double t,
                                const std::vector<Eigen::Index>& powers,
                                Eigen::Index mu, Eigen::Index mup);

/// Transfer representation of a system operation on matrix units of the
/// coupling eigenframe: g((mu, mu'), (nu, nu')) = <mu|A[|nu><nu'|]|mu'>.
Matrix control_coefficient_matrix(const QuantumChannel& op,
                                  const Matrix& frame);

/// Closed-form transfer matrix of a multi-time dilation with a system
/// control before every step: the bath level sum of alternating dephasing
/// phases and control coefficient matrices. Entries live on matrix units of
/// the coupling eigenframe.
Matrix multistep_transfer(const SpectralHamiltonian& spec,
                          const RealVector& populations, double t,
                          const std::vector<QuantumChannel>& controls);

/// Entrywise decay strengths -ln|T| of a transfer matrix.
RealMatrix multistep_strengths(const Matrix& transfer);

}  // namespace qtraj

#endif  // QTRAJ_CONTROL_HPP
