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

#ifndef QTRAJ_GELL_MANN_HPP
#define QTRAJ_GELL_MANN_HPP

#include <vector>

#include "qtraj/channel.hpp"
#include "qtraj/types.hpp"

namespace qtraj {

/// Orthonormal Hermitian operator basis: the normalized identity first, then
/// for every index pair j < k (lexicographic) a symmetric and an antisymmetric
/// element, then the diagonal traceless elements. Tr(f_a f_b) = delta_ab.
class GellMannBasis {
  public:
    explicit GellMannBasis(Eigen::Index d);

    /// The same basis conjugated by a unitary, for channels naturally
    /// expressed in a rotated eigenframe.
    GellMannBasis in_frame(const Matrix& v) const;

    Eigen::Index dim() const { return d_; }
    Eigen::Index size() const { return Eigen::Index(f_.size()); }
    const Matrix& element(Eigen::Index a) const { return f_.at(size_t(a)); }

    /// Positions of the pair elements spanning the (mu, mu') coherence
    /// directions, mu < mu'.
    Eigen::Index sym_index(Eigen::Index mu, Eigen::Index mup) const;
    Eigen::Index asym_index(Eigen::Index mu, Eigen::Index mup) const;
    /// Position of the l-th diagonal traceless element, 1 <= l < d.
    Eigen::Index diag_index(Eigen::Index l) const;

    /// Real expansion coordinates of a Hermitian operator.
    RealVector coordinates(const Matrix& h, double tol = 1e-9) const;
    Matrix from_coordinates(const RealVector& x) const;

  private:
    Eigen::Index d_ = 0;
    std::vector<Matrix> f_;
};

/// Real transfer matrix M(a, b) = Tr[f_a op(f_b)]. Throws ValidationError
/// when the map is not Hermiticity preserving within imag_tol.
RealMatrix channel_matrix(const QuantumChannel& op, const GellMannBasis& basis,
                          double imag_tol = 1e-9);

}  // namespace qtraj

#endif  // QTRAJ_GELL_MANN_HPP
