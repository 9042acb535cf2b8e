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

#include "qtraj/density_matrix.hpp"

#include <cmath>

namespace qtraj {

namespace {

void check_state(const Matrix& m, double expected_trace,
                 const Tolerances& tols) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw DimensionError("DensityMatrix: matrix must be square");
    if (!is_hermitian(m, tols.hermiticity))
        throw ValidationError("DensityMatrix: not Hermitian");
    if (std::abs(m.trace().real() - expected_trace) > tols.trace ||
        std::abs(m.trace().imag()) > tols.trace)
        throw ValidationError("DensityMatrix: trace out of tolerance");
    RealVector lam = hermitian_eigenvalues(m);
    if (lam.minCoeff() < -tols.psd)
        throw ValidationError("DensityMatrix: negative eigenvalue");
}

}  // namespace

DensityMatrix::DensityMatrix(const Matrix& m, const Tolerances& tols)
    : mat_(m), weight_(1.0) {
    check_state(m, 1.0, tols);
}

DensityMatrix DensityMatrix::subnormalized(const Matrix& m,
                                           const Tolerances& tols,
                                           double zero_floor) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw DimensionError("DensityMatrix: matrix must be square");
    double w = m.trace().real();
    if (w < -zero_floor || w > 1.0 + tols.trace)
        throw ValidationError("DensityMatrix: weight outside [0, 1]");
    if (w <= zero_floor) {
        return DensityMatrix(
            Matrix::Identity(m.rows(), m.rows()) / double(m.rows()), 0.0);
    }
    Matrix unit = m / w;
    check_state(unit, 1.0, tols);
    return DensityMatrix(std::move(unit), w);
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
    double n = psi.norm();
    if (std::abs(n - 1.0) > default_tolerances().trace)
        throw ValidationError("DensityMatrix::pure: state not normalized");
    Matrix m = psi * psi.adjoint();
    return DensityMatrix(std::move(m), 1.0);
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index d) {
    return DensityMatrix(Matrix::Identity(d, d) / double(d), 1.0);
}

double fidelity_pure(const Vector& psi, const Matrix& rho) {
    if (psi.size() != rho.rows())
        throw DimensionError("fidelity_pure: dimension mismatch");
    if (std::abs(psi.norm() - 1.0) > default_tolerances().trace)
        throw ValidationError("fidelity_pure: reference state not normalized");
    Complex f = (psi.adjoint() * rho * psi)(0, 0);
    return f.real();
}

double fidelity_pure(const Vector& psi, const DensityMatrix& rho) {
    return fidelity_pure(psi, rho.matrix());
}

double von_neumann_entropy(const Matrix& rho) {
    RealVector lam = hermitian_eigenvalues(rho);
    if (lam.minCoeff() < -default_tolerances().psd)
        throw ValidationError("von_neumann_entropy: negative eigenvalue");
    double s = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        double p = lam(i);
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return von_neumann_entropy(rho.matrix());
}

double linear_entropy(const Matrix& rho) {
    return 1.0 - (rho * rho).trace().real();
}

double linear_entropy(const DensityMatrix& rho) {
    return linear_entropy(rho.matrix());
}

double trace_distance(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw DimensionError("trace_distance: dimension mismatch");
    RealVector lam = hermitian_eigenvalues(a - b);
    return 0.5 * lam.cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return trace_distance(a.matrix(), b.matrix());
}

}  // namespace qtraj
