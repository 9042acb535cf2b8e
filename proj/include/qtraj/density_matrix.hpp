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

/// Validated quantum state. The stored matrix always has unit trace; states
/// that arise with probability p < 1 carry the weight explicitly instead of
/// storing a subnormalized matrix.
class DensityMatrix {
  public:
    /// Validates hermiticity, unit trace and positivity of m.
    explicit DensityMatrix(const Matrix& m,
                           const Tolerances& tols = default_tolerances());

    /// Accepts a trace-decreased matrix, splitting it into (weight, state).
    /// A weight below zero_floor yields weight 0 and the maximally mixed
    /// placeholder state; callers must treat such branches as never occurring.
    static DensityMatrix subnormalized(
        const Matrix& m, const Tolerances& tols = default_tolerances(),
        double zero_floor = 1e-14);

    static DensityMatrix pure(const Vector& psi);
    static DensityMatrix maximally_mixed(Eigen::Index d);

    const Matrix& matrix() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }
    double weight() const { return weight_; }

  private:
    DensityMatrix(Matrix m, double w) : mat_(std::move(m)), weight_(w) {}
    Matrix mat_;
    double weight_ = 1.0;
};

/// <psi|rho|psi> for a normalized pure reference state.
double fidelity_pure(const Vector& psi, const DensityMatrix& rho);
double fidelity_pure(const Vector& psi, const Matrix& rho);

/// Von Neumann entropy in bits. Eigenvalues in [-tol_psd, 0) clip to zero.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const Matrix& rho);

/// 1 - Tr(rho^2).
double linear_entropy(const DensityMatrix& rho);
double linear_entropy(const Matrix& rho);

/// (1/2) * trace norm of the difference.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance(const Matrix& a, const Matrix& b);

}  // namespace qtraj
