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

#ifndef QTRAJ_MUTUAL_INFO_HPP
#define QTRAJ_MUTUAL_INFO_HPP

#include "qtraj/causal_break.hpp"
#include "qtraj/dilation.hpp"
#include "qtraj/types.hpp"

namespace qtraj {

/// Mutual information, in bits, between a register that coherently swaps out
/// the system content at time t_step and the system one step later. The
/// fresh state fed back in is resend. Quantifies how much the environment
/// carries across the interface.
double quantum_memory_information(const DilatedProcess& proc, int step,
                                  const Matrix& resend);

/// Holevo information, in bits, of the causal-break record at t_step about
/// the system one step later. The break measures outcome k and reprepares
/// basis state l with probability strategy(l, k); strategy must be column
/// stochastic.
double classical_memory_information(const DilatedProcess& proc, int step,
                                    const CausalBreakBasis& basis,
                                    const RealMatrix& strategy);

/// Strategy matrix that always reprepares the same basis state. Matched with
/// resend = basis.reprep(l) the quantum protocol majorizes the classical one.
RealMatrix constant_strategy(const CausalBreakBasis& basis, Eigen::Index l);

}  // namespace qtraj

#endif  // QTRAJ_MUTUAL_INFO_HPP
