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

#include "qtraj/causal_break.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qtraj {

namespace {

// d^2 pure vectors whose projectors span Hermitian operator space:
// the computational basis plus real and imaginary pairwise superpositions.
std::vector<Vector> spanning_vectors(Eigen::Index d) {
    std::vector<Vector> vs;
    vs.reserve(size_t(d * d));
    for (Eigen::Index j = 0; j < d; ++j) {
        Vector v = Vector::Zero(d);
        v(j) = 1.0;
        vs.push_back(v);
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index k = j + 1; k < d; ++k) {
            Vector v = Vector::Zero(d);
            v(j) = inv_sqrt2;
            v(k) = inv_sqrt2;
            vs.push_back(v);
            Vector w = Vector::Zero(d);
            w(j) = inv_sqrt2;
            w(k) = Complex(0.0, inv_sqrt2);
            vs.push_back(w);
        }
    return vs;
}

RealMatrix gram_matrix(const std::vector<Matrix>& ops) {
    auto n = Eigen::Index(ops.size());
    RealMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            g(i, j) = (ops[size_t(i)] * ops[size_t(j)]).trace().real();
    return g;
}

std::vector<Matrix> kraus_of_break(const Matrix& povm, const Matrix& reprep) {
    Eigen::SelfAdjointEigenSolver<Matrix> ep(povm), er(reprep);
    std::vector<Matrix> kraus;
    for (Eigen::Index i = 0; i < er.eigenvalues().size(); ++i) {
        double lam = er.eigenvalues()(i);
        if (lam <= 1e-14) continue;
        for (Eigen::Index j = 0; j < ep.eigenvalues().size(); ++j) {
            double mu = ep.eigenvalues()(j);
            if (mu <= 1e-14) continue;
            Matrix k = std::sqrt(lam * mu) * er.eigenvectors().col(i) *
                       ep.eigenvectors().col(j).adjoint();
            kraus.push_back(std::move(k));
        }
    }
    return kraus;
}

}  // namespace

std::vector<Matrix> dual_frame(const std::vector<Matrix>& elements,
                               double cond_limit, double* condition_out) {
    if (elements.empty()) throw DimensionError("dual_frame: empty set");
    RealMatrix g = gram_matrix(elements);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(g);
    double lo = es.eigenvalues().minCoeff();
    double hi = es.eigenvalues().maxCoeff();
    double cond = (lo <= 0.0) ? std::numeric_limits<double>::infinity()
                              : hi / lo;
    if (condition_out) *condition_out = cond;
    if (!(cond < cond_limit))
        throw NotInformationallyComplete(
            "dual_frame: operator set is not informationally complete "
            "(Gram condition number " +
            std::to_string(cond) + ")");
    RealMatrix ginv = g.inverse();
    std::vector<Matrix> duals(elements.size());
    for (size_t k = 0; k < elements.size(); ++k) {
        Matrix acc = Matrix::Zero(elements[0].rows(), elements[0].cols());
        for (size_t l = 0; l < elements.size(); ++l)
            acc += ginv(Eigen::Index(k), Eigen::Index(l)) * elements[l];
        duals[k] = std::move(acc);
    }
    return duals;
}

CausalBreakBasis CausalBreakBasis::standard(Eigen::Index d, double cond_limit) {
    if (d < 2) throw DimensionError("CausalBreakBasis: need d >= 2");
    auto vectors = spanning_vectors(d);
    std::vector<Matrix> projectors;
    projectors.reserve(vectors.size());
    Matrix frame_sum = Matrix::Zero(d, d);
    for (const Vector& v : vectors) {
        projectors.push_back(v * v.adjoint());
        frame_sum += projectors.back();
    }
    // Congruence by T^{-1/2} turns the projector set into a proper POVM while
    // preserving linear independence.
    Matrix corr = inverse_sqrt(frame_sum);
    std::vector<Matrix> povm;
    povm.reserve(projectors.size());
    for (const Matrix& p : projectors) povm.push_back(corr * p * corr);
    return from_elements(std::move(povm), std::move(projectors), cond_limit);
}

CausalBreakBasis CausalBreakBasis::from_elements(std::vector<Matrix> povm,
                                                 std::vector<Matrix> reprep,
                                                 double cond_limit) {
    CausalBreakBasis b;
    if (povm.empty() || povm.size() != reprep.size())
        throw DimensionError("CausalBreakBasis: set sizes must match");
    b.d_ = povm.front().rows();
    if (Eigen::Index(povm.size()) != b.d_ * b.d_)
        throw DimensionError("CausalBreakBasis: need exactly d^2 elements");

    Matrix total = Matrix::Zero(b.d_, b.d_);
    for (const Matrix& p : povm) {
        if (!is_hermitian(p))
            throw ValidationError("CausalBreakBasis: POVM element not Hermitian");
        if (hermitian_eigenvalues(p).minCoeff() < -default_tolerances().psd)
            throw ValidationError("CausalBreakBasis: POVM element not PSD");
        total += p;
    }
    if (max_abs_diff(total, Matrix(Matrix::Identity(b.d_, b.d_))) >
        default_tolerances().trace)
        throw ValidationError("CausalBreakBasis: POVM does not sum to identity");
    for (const Matrix& r : reprep) (void)DensityMatrix(r);

    b.dual_ = dual_frame(povm, cond_limit, &b.gram_cond_);
    double reprep_cond = 0.0;
    b.reprep_dual_ = dual_frame(reprep, cond_limit, &reprep_cond);
    b.gram_cond_ = std::max(b.gram_cond_, reprep_cond);

    b.povm_ = std::move(povm);
    b.reprep_ = std::move(reprep);

    b.break_channels_.reserve(b.povm_.size() * b.reprep_.size());
    for (const Matrix& p : b.povm_)
        for (const Matrix& r : b.reprep_)
            b.break_channels_.push_back(
                QuantumChannel::from_kraus(kraus_of_break(p, r)));
    return b;
}

const QuantumChannel& CausalBreakBasis::break_channel(Eigen::Index k,
                                                      Eigen::Index l) const {
    return break_channels_.at(size_t(k * size() + l));
}

std::pair<double, DensityMatrix> apply_causal_break(
    const CausalBreakBasis& basis, Eigen::Index k, Eigen::Index l,
    const DensityMatrix& rho) {
    if (rho.dim() != basis.dim())
        throw DimensionError("apply_causal_break: dimension mismatch");
    double p = (basis.povm(k) * rho.matrix()).trace().real();
    return {p, DensityMatrix(basis.reprep(l))};
}

}  // namespace qtraj
