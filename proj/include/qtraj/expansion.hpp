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

#include "qtraj/causal_break.hpp"

namespace qtraj {

/// Real coefficients a(l, k) expanding a channel over the break channels:
/// Phi = sum_{l,k} a(l,k) |reprep[l]>><<povm[k]|. For a trace-preserving
/// channel every column sums to one.
struct ExpansionCoefficients {
    RealMatrix a;     // row l (repreparation), column k (measurement)
    double residual;  // least-squares residual, Frobenius
    double max_imag;  // largest imaginary part dropped from the solution

    double column_sum(Eigen::Index k) const { return a.col(k).sum(); }
};

/// Solves the vectorised least-squares problem for the coefficients.
/// Throws ExpansionError if the residual exceeds tol (the operation does not
/// lie in the span) or if the solution is not real within tol.
ExpansionCoefficients expand_operation(const QuantumChannel& op,
                                       const CausalBreakBasis& basis,
                                       double tol = 1e-9);

/// Verdict of a convex-mixture test with the most negative coefficient as
/// witness. A trace-preserving op is a mixture of causal breaks iff all
/// expansion coefficients are nonnegative (within tol).
struct MixtureVerdict {
    bool mixed;
    double min_coefficient;
    Eigen::Index witness_l;
    Eigen::Index witness_k;
    double max_column_sum_error;
};

MixtureVerdict is_mixed_wrt_basis(const QuantumChannel& op,
                                  const CausalBreakBasis& basis,
                                  double tol = 1e-9);

}  // namespace qtraj
