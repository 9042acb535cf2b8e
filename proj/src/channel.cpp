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

#include "qtraj/channel.hpp"

#include <cmath>

namespace qtraj {

QuantumChannel QuantumChannel::from_kraus(const std::vector<Matrix>& kraus) {
    if (kraus.empty()) throw DimensionError("from_kraus: empty operator list");
    Eigen::Index d = kraus.front().rows();
    QuantumChannel ch;
    ch.dim_ = d;
    ch.superop_ = Matrix::Zero(d * d, d * d);
    for (const Matrix& k : kraus) {
        if (k.rows() != d || k.cols() != d)
            throw DimensionError("from_kraus: inconsistent dimensions");
        ch.superop_ += tensor_product(k, k.conjugate());
    }
    ch.kraus_ = kraus;
    return ch;
}

QuantumChannel QuantumChannel::from_superop(const Matrix& superop) {
    Eigen::Index n = superop.rows();
    auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(n))));
    if (superop.cols() != n || d * d != n)
        throw DimensionError("from_superop: size is not a perfect square");
    QuantumChannel ch;
    ch.dim_ = d;
    ch.superop_ = superop;
    return ch;
}

QuantumChannel QuantumChannel::from_unitary(const Matrix& u) {
    if (!is_unitary(u))
        throw ValidationError("from_unitary: operator is not unitary");
    return from_kraus({u});
}

QuantumChannel QuantumChannel::identity(Eigen::Index d) {
    return from_kraus({Matrix::Identity(d, d)});
}

Matrix QuantumChannel::choi() const {
    Matrix c(dim_ * dim_, dim_ * dim_);
    for (Eigen::Index i = 0; i < dim_; ++i)
        for (Eigen::Index x = 0; x < dim_; ++x)
            for (Eigen::Index j = 0; j < dim_; ++j)
                for (Eigen::Index y = 0; y < dim_; ++y)
                    c(i * dim_ + x, j * dim_ + y) =
                        superop_(i * dim_ + j, x * dim_ + y);
    return c;
}

const std::vector<Matrix>& QuantumChannel::kraus() const {
    if (kraus_) return *kraus_;
    Matrix c = choi();
    if (!is_hermitian(c, 1e-9))
        throw ValidationError("kraus: Choi matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(c);
    const auto& lam = es.eigenvalues();
    if (lam.minCoeff() < -default_tolerances().psd)
        throw ValidationError("kraus: channel is not completely positive");
    std::vector<Matrix> ops;
    for (Eigen::Index m = 0; m < lam.size(); ++m) {
        if (lam(m) <= default_tolerances().psd) continue;
        Vector col = es.eigenvectors().col(m) * std::sqrt(lam(m));
        ops.push_back(unvec(col, dim_, dim_));
    }
    if (ops.empty()) ops.push_back(Matrix::Zero(dim_, dim_));
    kraus_ = std::move(ops);
    return *kraus_;
}

Matrix QuantumChannel::apply(const Matrix& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_)
        throw DimensionError("apply: state dimension mismatch");
    return unvec(superop_ * vec(rho), dim_, dim_);
}

DensityMatrix QuantumChannel::apply(const DensityMatrix& rho) const {
    return DensityMatrix::subnormalized(apply(rho.matrix()));
}

QuantumChannel QuantumChannel::compose(const QuantumChannel& other) const {
    if (dim_ != other.dim_)
        throw DimensionError("compose: dimension mismatch");
    QuantumChannel ch;
    ch.dim_ = dim_;
    ch.superop_ = superop_ * other.superop_;
    return ch;
}

bool QuantumChannel::is_trace_preserving(double tol) const {
    // Tr(Phi[E_xy]) = delta_xy translates to a row condition on the superop.
    for (Eigen::Index x = 0; x < dim_; ++x)
        for (Eigen::Index y = 0; y < dim_; ++y) {
            Complex s = 0.0;
            for (Eigen::Index i = 0; i < dim_; ++i)
                s += superop_(i * dim_ + i, x * dim_ + y);
            Complex want = (x == y) ? Complex(1.0) : Complex(0.0);
            if (std::abs(s - want) > tol) return false;
        }
    return true;
}

bool QuantumChannel::is_unital(double tol) const {
    Matrix img = apply(Matrix(Matrix::Identity(dim_, dim_)));
    return max_abs_diff(img, Matrix(Matrix::Identity(dim_, dim_))) <= tol;
}

bool QuantumChannel::is_completely_positive(double tol) const {
    Matrix c = choi();
    if (!is_hermitian(c, 1e-9)) return false;
    return hermitian_eigenvalues(c).minCoeff() >= -tol;
}

QuantumChannel QuantumChannel::mixture(
    const std::vector<double>& weights,
    const std::vector<QuantumChannel>& channels) {
    if (weights.size() != channels.size() || channels.empty())
        throw DimensionError("mixture: weights/channels mismatch");
    QuantumChannel ch;
    ch.dim_ = channels.front().dim_;
    ch.superop_ = Matrix::Zero(ch.dim_ * ch.dim_, ch.dim_ * ch.dim_);
    for (size_t i = 0; i < channels.size(); ++i) {
        if (channels[i].dim_ != ch.dim_)
            throw DimensionError("mixture: dimension mismatch");
        ch.superop_ += weights[i] * channels[i].superop_;
    }
    return ch;
}

}  // namespace qtraj
