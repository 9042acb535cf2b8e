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

#include "qtraj/linalg.hpp"

#include <cmath>

namespace qtraj {

Matrix identity(Eigen::Index d) { return Matrix::Identity(d, d); }

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

Matrix partial_trace(const Matrix& m, Eigen::Index d1, Eigen::Index d2,
                     Keep keep) {
    if (m.rows() != d1 * d2 || m.cols() != d1 * d2)
        throw DimensionError("partial_trace: matrix is not (d1*d2) square");
    if (keep == Keep::First) {
        Matrix out = Matrix::Zero(d1, d1);
        for (Eigen::Index i = 0; i < d1; ++i)
            for (Eigen::Index j = 0; j < d1; ++j)
                for (Eigen::Index k = 0; k < d2; ++k)
                    out(i, j) += m(i * d2 + k, j * d2 + k);
        return out;
    }
    Matrix out = Matrix::Zero(d2, d2);
    for (Eigen::Index k = 0; k < d2; ++k)
        for (Eigen::Index l = 0; l < d2; ++l)
            for (Eigen::Index i = 0; i < d1; ++i)
                out(k, l) += m(i * d2 + k, i * d2 + l);
    return out;
}

Matrix hermitian_evolve(const Matrix& h, double t, double tol) {
    if (!is_hermitian(h, tol))
        throw ValidationError("hermitian_evolve: generator is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const auto& lam = es.eigenvalues();
    const Matrix& v = es.eigenvectors();
    Vector phases(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        phases(i) = std::exp(Complex(0.0, -lam(i) * t));
    return v * phases.asDiagonal() * v.adjoint();
}

Vector vec(const Matrix& x) {
    Vector v(x.rows() * x.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) v(i * x.cols() + j) = x(i, j);
    return v;
}

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.size() != rows * cols)
        throw DimensionError("unvec: size mismatch");
    Matrix x(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) x(i, j) = v(i * cols + j);
    return x;
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    Matrix g = m.adjoint() * m;
    return (g - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <=
           tol;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("max_abs_diff: shape mismatch");
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

Matrix matrix_power(const Matrix& m, int n) {
    if (m.rows() != m.cols()) throw DimensionError("matrix_power: not square");
    if (n < 0) throw DimensionError("matrix_power: negative exponent");
    Matrix out = Matrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < n; ++i) out = out * m;
    return out;
}

RealVector hermitian_eigenvalues(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

Matrix inverse_sqrt(const Matrix& m, double floor) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    const auto& lam = es.eigenvalues();
    if (lam.minCoeff() < floor)
        throw ValidationError("inverse_sqrt: matrix is not positive definite");
    Vector d(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        d(i) = 1.0 / std::sqrt(lam(i));
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace qtraj
