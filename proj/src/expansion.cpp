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

#include "qtraj/expansion.hpp"

#include <algorithm>
#include <cmath>

namespace qtraj {

ExpansionCoefficients expand_operation(const QuantumChannel& op,
                                       const CausalBreakBasis& basis,
                                       double tol) {
    if (op.dim() != basis.dim())
        throw DimensionError("expand_operation: dimension mismatch");
    const Eigen::Index n = basis.size();        // d^2
    const Eigen::Index m = n * n;               // columns: (l, k) pairs
    const Eigen::Index rows = op.superop().size();

    Eigen::MatrixXcd design(rows, m);
    for (Eigen::Index l = 0; l < n; ++l)
        for (Eigen::Index k = 0; k < n; ++k)
            design.col(l * n + k) = vec(basis.break_channel(k, l).superop());
    Vector target = vec(op.superop());

    Eigen::VectorXcd sol = design.colPivHouseholderQr().solve(target);
    double residual = (design * sol - target).norm();
    if (residual > tol)
        throw ExpansionError("expand_operation: residual " +
                             std::to_string(residual) +
                             " exceeds tolerance; op not in span");

    ExpansionCoefficients out;
    out.a.resize(n, n);
    out.max_imag = 0.0;
    for (Eigen::Index l = 0; l < n; ++l)
        for (Eigen::Index k = 0; k < n; ++k) {
            Complex c = sol(l * n + k);
            out.max_imag = std::max(out.max_imag, std::abs(c.imag()));
            out.a(l, k) = c.real();
        }
    if (out.max_imag > tol)
        throw ExpansionError(
            "expand_operation: coefficients have imaginary parts beyond "
            "tolerance");
    out.residual = residual;
    return out;
}

MixtureVerdict is_mixed_wrt_basis(const QuantumChannel& op,
                                  const CausalBreakBasis& basis, double tol) {
    ExpansionCoefficients c = expand_operation(op, basis, tol);
    MixtureVerdict v{};
    v.min_coefficient = c.a(0, 0);
    v.witness_l = 0;
    v.witness_k = 0;
    for (Eigen::Index l = 0; l < c.a.rows(); ++l)
        for (Eigen::Index k = 0; k < c.a.cols(); ++k)
            if (c.a(l, k) < v.min_coefficient) {
                v.min_coefficient = c.a(l, k);
                v.witness_l = l;
                v.witness_k = k;
            }
    v.max_column_sum_error = 0.0;
    for (Eigen::Index k = 0; k < c.a.cols(); ++k)
        v.max_column_sum_error =
            std::max(v.max_column_sum_error, std::abs(c.column_sum(k) - 1.0));
    v.mixed = v.min_coefficient >= -tol;
    return v;
}

}  // namespace qtraj
