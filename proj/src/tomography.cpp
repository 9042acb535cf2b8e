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

#include "qtraj/tomography.hpp"

#include <algorithm>
#include <thread>

#include "qtraj/expansion.hpp"
#include "qtraj/linalg.hpp"

namespace qtraj {

ProcessTensorTable tomograph_process(const DilatedProcess& proc,
                                     const CausalBreakBasis& basis,
                                     std::uint64_t budget, int threads) {
    if (proc.system_dim() != basis.dim())
        throw DimensionError("tomograph_process: basis dim mismatch");
    const Eigen::Index d = basis.dim();
    const Eigen::Index n = basis.size();
    const int n_times = proc.n_times();

    ProcessTensorTable table(d, n_times,
                             ProcessTensorTable::fingerprint(basis));
    const std::uint64_t count = table.trajectory_count();
    {
        // budget covers the full entry count, matching enumerate_trajectories
        std::uint64_t entries = count * std::uint64_t(n);
        if (entries / std::uint64_t(n) != count || entries > budget)
            throw BudgetExceeded("tomograph_process: over budget");
    }

    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t r = begin; r < end; ++r) {
            TrajectoryIndex xi = table.unrank(r);
            Matrix joint = proc.joint_after_breaks(basis, xi);
            Matrix sys = partial_trace(joint, d, proc.env_dim(), Keep::First);
            for (Eigen::Index k = 0; k < n; ++k) {
                double p = (basis.povm(k) * sys).trace().real();
                table.set(k, r, std::clamp(p, 0.0, 1.0));
            }
        }
    };

    int n_threads = std::max(1, threads);
    if (n_threads == 1 || count < 2) {
        worker(0, count);
    } else {
        n_threads = int(std::min<std::uint64_t>(std::uint64_t(n_threads), count));
        std::vector<std::thread> pool;
        pool.reserve(size_t(n_threads));
        std::uint64_t chunk = (count + std::uint64_t(n_threads) - 1) /
                              std::uint64_t(n_threads);
        for (int t = 0; t < n_threads; ++t) {
            std::uint64_t begin = std::uint64_t(t) * chunk;
            std::uint64_t end = std::min(count, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return table;
}

DensityMatrix reconstruct_final_state(const ProcessTensorTable& table,
                                      const std::vector<QuantumChannel>& controls,
                                      const CausalBreakBasis& basis,
                                      double expansion_tol) {
    if (table.basis_fingerprint() != ProcessTensorTable::fingerprint(basis))
        throw ValidationError(
            "reconstruct_final_state: table was built from a different basis");
    if (table.dim() != basis.dim())
        throw DimensionError("reconstruct_final_state: basis dim mismatch");
    if (int(controls.size()) != table.n_times() - 1)
        throw DimensionError(
            "reconstruct_final_state: need one control per intermediate time");
    if (!table.complete())
        throw IncompleteTable("reconstruct_final_state: table incomplete");

    std::vector<ExpansionCoefficients> coeffs;
    coeffs.reserve(controls.size());
    for (const auto& ctrl : controls)
        coeffs.push_back(expand_operation(ctrl, basis, expansion_tol));

    const Eigen::Index n = basis.size();
    const std::uint64_t count = table.trajectory_count();
    RealVector weight = RealVector::Zero(n);
    for (std::uint64_t r = 0; r < count; ++r) {
        TrajectoryIndex xi = table.unrank(r);
        double c = 1.0;
        for (size_t pos = 0; pos < xi.size(); ++pos)
            c *= coeffs[pos].a(xi[pos].second, xi[pos].first);
        if (c == 0.0) continue;
        for (Eigen::Index k = 0; k < n; ++k)
            weight(k) += c * table.probability(k, r);
    }

    Matrix rho = Matrix::Zero(table.dim(), table.dim());
    for (Eigen::Index k = 0; k < n; ++k) rho += weight(k) * basis.dual(k);
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    return DensityMatrix::subnormalized(rho);
}

}  // namespace qtraj
