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

#include "qtraj/random.hpp"

#include <cmath>

namespace qtraj {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    return splitmix64(s);
}

double Rng::uniform(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(eng_);
}

double Rng::gaussian() {
    std::normal_distribution<double> dist(0.0, 1.0);
    return dist(eng_);
}

Vector Rng::pure_state(Eigen::Index d) {
    Vector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(gaussian(), gaussian());
    double n = v.norm();
    if (n == 0.0) {
        v.setZero();
        v(0) = 1.0;
        return v;
    }
    return v / n;
}

Matrix Rng::density_matrix(Eigen::Index d) {
    Matrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            g(i, j) = Complex(gaussian(), gaussian());
    Matrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

Matrix Rng::unitary(Eigen::Index d) {
    Matrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            g(i, j) = Complex(gaussian(), gaussian());
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is Haar.
    for (Eigen::Index j = 0; j < d; ++j) {
        Complex rj = r(j, j);
        double a = std::abs(rj);
        q.col(j) *= (a == 0.0) ? Complex(1.0) : rj / a;
    }
    return q;
}

RealVector Rng::probability_vector(Eigen::Index n) {
    RealVector p(n);
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        p(i) = -std::log(uniform(1e-16, 1.0));
        s += p(i);
    }
    return p / s;
}

}  // namespace qtraj
