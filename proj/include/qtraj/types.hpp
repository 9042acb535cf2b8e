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

#include <complex>
#include <Eigen/Dense>

namespace qtraj {

using Complex = std::complex<double>;

// Dense row-major storage throughout; dimensions stay small (<= ~64) so no
// sparsity is used anywhere.
using Matrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealVector = Eigen::Matrix<double, Eigen::Dynamic, 1>;

/// Numerical tolerances shared by validation routines. All are configurable
/// per call site; these are the library-wide defaults.
struct Tolerances {
    double hermiticity = 1e-10;
    double trace = 1e-10;
    double psd = 1e-9;
    double unitarity = 1e-10;
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tols{};
    return tols;
}

constexpr double kPi = 3.14159265358979323846;

// Guard for log-domain quantities; magnitudes below this are treated as an
// exact zero and map to an infinite scaling parameter.
constexpr double kLogGuard = 1e-300;

}  // namespace qtraj
