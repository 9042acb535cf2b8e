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

#include "qtraj/error.hpp"
#include "qtraj/types.hpp"

namespace qtraj {

enum class Keep { First, Second };

Matrix identity(Eigen::Index d);

/// Kronecker product, row-major index convention:
/// out((i*rb+k), (j*cb+l)) = a(i,j) * b(k,l).
Matrix tensor_product(const Matrix& a, const Matrix& b);

/// Trace out one tensor factor of a (d1*d2) x (d1*d2) matrix.
Matrix partial_trace(const Matrix& m, Eigen::Index d1, Eigen::Index d2,
                     Keep keep);

/// exp(-i h t) for Hermitian h, computed through the eigendecomposition.
/// Throws ValidationError if h is not Hermitian within tol.
Matrix hermitian_evolve(const Matrix& h, double t,
                        double tol = default_tolerances().hermiticity);

/// Row-major vectorisation: vec(X)(i*cols + j) = X(i, j).
Vector vec(const Matrix& x);
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

bool is_hermitian(const Matrix& m,
                  double tol = default_tolerances().hermiticity);
bool is_unitary(const Matrix& m, double tol = default_tolerances().unitarity);

/// Largest absolute entry of a - b; zero-size operands must match in shape.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Integer matrix power by repeated multiplication; exponent >= 0.
Matrix matrix_power(const Matrix& m, int n);

/// Eigenvalues of a Hermitian matrix, ascending.
RealVector hermitian_eigenvalues(const Matrix& m);

/// Inverse square root of a positive definite Hermitian matrix.
/// Throws ValidationError if an eigenvalue falls below floor.
Matrix inverse_sqrt(const Matrix& m, double floor = 1e-14);

}  // namespace qtraj
