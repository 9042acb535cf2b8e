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

#include <optional>
#include <vector>

#include "qtraj/density_matrix.hpp"
#include "qtraj/linalg.hpp"

namespace qtraj {

/// Linear map on d x d operators. The superoperator acts on row-major
/// vectorisations: vec(Phi[X]) = S vec(X), so for Kraus operators K_i,
/// S = sum_i K_i (x) conj(K_i). Kraus form is kept when known and can be
/// recovered from the Choi matrix on demand.
class QuantumChannel {
  public:
    static QuantumChannel from_kraus(const std::vector<Matrix>& kraus);
    static QuantumChannel from_superop(const Matrix& superop);
    static QuantumChannel from_unitary(const Matrix& u);
    static QuantumChannel identity(Eigen::Index d);

    Eigen::Index dim() const { return dim_; }
    const Matrix& superop() const { return superop_; }

    /// Kraus operators; extracted from the Choi eigendecomposition when the
    /// channel was built from a superoperator. Throws ValidationError if the
    /// map is not CP within tol_psd.
    const std::vector<Matrix>& kraus() const;

    Matrix apply(const Matrix& rho) const;
    DensityMatrix apply(const DensityMatrix& rho) const;

    /// this after other: (this * other)[x] = this[other[x]].
    QuantumChannel compose(const QuantumChannel& other) const;

    /// Choi matrix C((i,x),(j,y)) = Phi(E_xy)_(i,j); reshuffle of superop.
    Matrix choi() const;

    bool is_trace_preserving(double tol = default_tolerances().trace) const;
    bool is_unital(double tol = default_tolerances().trace) const;
    bool is_completely_positive(double tol = default_tolerances().psd) const;

    /// Convex combination sum_i w_i ch_i; weights need not be normalized.
    static QuantumChannel mixture(const std::vector<double>& weights,
                                  const std::vector<QuantumChannel>& channels);

  private:
    QuantumChannel() = default;
    Eigen::Index dim_ = 0;
    Matrix superop_;
    mutable std::optional<std::vector<Matrix>> kraus_;
};

}  // namespace qtraj
