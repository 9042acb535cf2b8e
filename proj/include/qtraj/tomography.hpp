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

#ifndef QTRAJ_TOMOGRAPHY_HPP
#define QTRAJ_TOMOGRAPHY_HPP

#include <cstdint>
#include <vector>

#include "qtraj/causal_break.hpp"
#include "qtraj/channel.hpp"
#include "qtraj/density_matrix.hpp"
#include "qtraj/dilation.hpp"
#include "qtraj/process_table.hpp"

namespace qtraj {

/// Runs every measure-and-reprepare trajectory through the process and
/// records the joint outcome probabilities. Work is split across threads;
/// each trajectory writes its own preassigned slots, so the result does not
/// depend on the thread count.
ProcessTensorTable tomograph_process(const DilatedProcess& proc,
                                     const CausalBreakBasis& basis,
                                     std::uint64_t budget = trajectory_budget(),
                                     int threads = 1);

/// Final-time state under the given control sequence, predicted from the
/// table alone. Controls are expanded in the causal-break frame and the
/// expansion coefficients weight the recorded probabilities. Requires one
/// control per intermediate time and a table built from the same basis.
DensityMatrix reconstruct_final_state(const ProcessTensorTable& table,
                                      const std::vector<QuantumChannel>& controls,
                                      const CausalBreakBasis& basis,
                                      double expansion_tol = 1e-9);

}  // namespace qtraj

#endif  // QTRAJ_TOMOGRAPHY_HPP
