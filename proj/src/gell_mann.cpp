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

#include "qtraj/gell_mann.hpp"

#include <cmath>

#include "qtraj/error.hpp"
#include "qtraj/linalg.hpp"

namespace qtraj {

GellMannBasis::GellMannBasis(Eigen::Index d) : d_(d) {
    if (d < 2) throw DimensionError("GellMannBasis: need dim >= 2");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    f_.reserve(size_t(d * d));
    f_.push_back(Matrix::Identity(d, d) / std::sqrt(double(d)));
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index k = j + 1; k < d; ++k) {
            Matrix sym = Matrix::Zero(d, d);
            sym(j, k) = sym(k, j) = inv_sqrt2;
            f_.push_back(sym);
            Matrix asym = Matrix::Zero(d, d);
            asym(j, k) = Complex(0.0, -inv_sqrt2);
            asym(k, j) = Complex(0.0, inv_sqrt2);
            f_.push_back(asym);
        }
    for (Eigen::Index l = 1; l < d; ++l) {
        Matrix diag = Matrix::Zero(d, d);
        double norm = 1.0 / std::sqrt(double(l) * double(l + 1));
        for (Eigen::Index j = 0; j < l; ++j) diag(j, j) = norm;
        diag(l, l) = -double(l) * norm;
        f_.push_back(diag);
    }
}

GellMannBasis GellMannBasis::in_frame(const Matrix& v) const {
    if (!is_unitary(v) || v.rows() != d_)
        throw ValidationError("GellMannBasis: frame must be a unitary of dim");
    GellMannBasis out(*this);
    for (auto& f : out.f_) f = (v * f * v.adjoint()).eval();
    return out;
}

Eigen::Index GellMannBasis::sym_index(Eigen::Index mu, Eigen::Index mup) const {
    if (mu < 0 || mup <= mu || mup >= d_)
        throw DimensionError("GellMannBasis: need 0 <= mu < mu' < dim");
    Eigen::Index rank = mu * d_ - mu * (mu + 1) / 2 + (mup - mu - 1);
    return 1 + 2 * rank;
}

Eigen::Index GellMannBasis::asym_index(Eigen::Index mu,
                                       Eigen::Index mup) const {
    return sym_index(mu, mup) + 1;
}

Eigen::Index GellMannBasis::diag_index(Eigen::Index l) const {
    if (l < 1 || l >= d_)
        throw DimensionError("GellMannBasis: need 1 <= l < dim");
    return 1 + d_ * (d_ - 1) + (l - 1);
}

RealVector GellMannBasis::coordinates(const Matrix& h, double tol) const {
    if (h.rows() != d_ || h.cols() != d_)
        throw DimensionError("GellMannBasis: operator dim mismatch");
    if (!is_hermitian(h, tol))
        throw ValidationError("GellMannBasis: operator is not Hermitian");
    RealVector x(size());
    for (Eigen::Index a = 0; a < size(); ++a)
        x(a) = (f_[size_t(a)] * h).trace().real();
    return x;
}

Matrix GellMannBasis::from_coordinates(const RealVector& x) const {
    if (x.size() != size())
        throw DimensionError("GellMannBasis: coordinate count mismatch");
    Matrix h = Matrix::Zero(d_, d_);
    for (Eigen::Index a = 0; a < size(); ++a) h += x(a) * f_[size_t(a)];
    return h;
}

RealMatrix channel_matrix(const QuantumChannel& op, const GellMannBasis& basis,
                          double imag_tol) {
    if (op.dim() != basis.dim())
        throw DimensionError("channel_matrix: basis dim mismatch");
    const Eigen::Index n = basis.size();
    RealMatrix m(n, n);
    for (Eigen::Index b = 0; b < n; ++b) {
        Matrix img = op.apply(basis.element(b));
        for (Eigen::Index a = 0; a < n; ++a) {
            Complex v = (basis.element(a) * img).trace();
            if (std::abs(v.imag()) > imag_tol)
                throw ValidationError(
                    "channel_matrix: map is not Hermiticity preserving");
            m(a, b) = v.real();
        }
    }
    return m;
}

}  // namespace qtraj
