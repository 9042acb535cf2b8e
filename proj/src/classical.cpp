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

#include "qtraj/classical.hpp"

#include <cmath>

#include "qtraj/error.hpp"

namespace qtraj {

void validate_stochastic(const RealMatrix& m, double tol) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw DimensionError("validate_stochastic: matrix must be square");
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        double sum = 0.0;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (m(i, j) < -tol)
                throw ValidationError("validate_stochastic: negative entry");
            sum += m(i, j);
        }
        if (std::abs(sum - 1.0) > tol)
            throw ValidationError("validate_stochastic: column sum not 1");
    }
}

void validate_probability_vector(const RealVector& p, double tol) {
    if (p.size() < 1)
        throw DimensionError("validate_probability_vector: empty vector");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) < -tol)
            throw ValidationError(
                "validate_probability_vector: negative entry");
        sum += p(i);
    }
    if (std::abs(sum - 1.0) > tol)
        throw ValidationError("validate_probability_vector: sum not 1");
}

RealVector classical_propagate(const std::vector<RealMatrix>& transitions,
                               const std::vector<RealMatrix>& interventions,
                               const RealVector& initial) {
    validate_probability_vector(initial);
    if (!interventions.empty() && interventions.size() != transitions.size())
        throw DimensionError(
            "classical_propagate: need one intervention per transition");
    RealVector p = initial;
    for (size_t step = 0; step < transitions.size(); ++step) {
        if (!interventions.empty()) {
            const RealMatrix& mu = interventions[step];
            validate_stochastic(mu);
            if (mu.rows() != p.size())
                throw DimensionError(
                    "classical_propagate: intervention dim mismatch");
            p = mu * p;
        }
        const RealMatrix& t = transitions[step];
        validate_stochastic(t);
        if (t.rows() != p.size())
            throw DimensionError("classical_propagate: transition dim mismatch");
        p = t * p;
    }
    return p;
}

double classical_final_probability(const std::vector<RealMatrix>& transitions,
                                   const std::vector<RealMatrix>& interventions,
                                   const RealVector& initial,
                                   Eigen::Index final_outcome) {
    RealVector p = classical_propagate(transitions, interventions, initial);
    if (final_outcome < 0 || final_outcome >= p.size())
        throw DimensionError(
            "classical_final_probability: outcome out of range");
    return p(final_outcome);
}

QuantumChannel channel_from_stochastic(const RealMatrix& t) {
    validate_stochastic(t);
    const Eigen::Index d = t.rows();
    std::vector<Matrix> kraus;
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) {
            if (t(j, i) <= 0.0) continue;
            Matrix k = Matrix::Zero(d, d);
            k(j, i) = std::sqrt(t(j, i));
            kraus.push_back(std::move(k));
        }
    return QuantumChannel::from_kraus(kraus);
}

}  // namespace qtraj
