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

#include <cstdint>
#include <random>

#include "qtraj/types.hpp"

namespace qtraj {

/// splitmix64 step; used to derive independent child seeds so that parallel
/// tasks draw from disjoint deterministic streams.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic child seed for task index i under a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Seeded RNG wrapper for reproducible sampling of quantum objects.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0);
    double gaussian();

    /// Haar-like pure state from normalized complex Gaussian entries.
    Vector pure_state(Eigen::Index d);

    /// Full-rank state G G^dag / Tr(G G^dag) with Ginibre G.
    Matrix density_matrix(Eigen::Index d);

    /// Haar unitary via QR of a Ginibre matrix with phase correction.
    Matrix unitary(Eigen::Index d);

    /// Probability vector from normalized uniform draws.
    RealVector probability_vector(Eigen::Index n);

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace qtraj
