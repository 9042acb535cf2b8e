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

#include "qtraj/dilation.hpp"

#include <algorithm>
#include <cmath>

namespace qtraj {

DilatedProcess::DilatedProcess(const Matrix& initial_joint,
                               std::vector<Matrix> unitaries,
                               Eigen::Index d_sys, Eigen::Index d_env)
    : d_sys_(d_sys), d_env_(d_env), initial_(initial_joint),
      unitaries_(std::move(unitaries)) {
    if (d_sys_ < 2 || d_env_ < 1)
        throw DimensionError("DilatedProcess: need d >= 2 and d_E >= 1");
    const Eigen::Index dj = d_sys_ * d_env_;
    if (initial_.rows() != dj || initial_.cols() != dj)
        throw DimensionError("DilatedProcess: joint state dimension mismatch");
    (void)DensityMatrix(initial_);
    if (unitaries_.empty())
        throw DimensionError("DilatedProcess: need at least one step");
    for (const Matrix& u : unitaries_) {
        if (u.rows() != dj || u.cols() != dj)
            throw DimensionError("DilatedProcess: unitary dimension mismatch");
        if (!is_unitary(u))
            throw ValidationError("DilatedProcess: step operator not unitary");
    }
}

DilatedProcess DilatedProcess::equidistant(const SpectralHamiltonian& spec,
                                           const Matrix& rho_sys,
                                           const Matrix& rho_env, int n_times,
                                           double t) {
    if (n_times < 2)
        throw DimensionError("DilatedProcess: need at least two time slots");
    Matrix u = hermitian_evolve(build_product_hamiltonian(spec), t);
    std::vector<Matrix> us(size_t(n_times - 1), u);
    Matrix joint = tensor_product(rho_sys, rho_env);
    return DilatedProcess(joint, std::move(us), spec.system_dim(),
                          spec.env_dim());
}

const Matrix& DilatedProcess::unitary(int step) const {
    if (step < 0 || step >= n_steps())
        throw DimensionError("DilatedProcess: step out of range");
    return unitaries_[size_t(step)];
}

void DilatedProcess::enable_environment_reset(const Matrix& tau) {
    if (tau.rows() != d_env_ || tau.cols() != d_env_)
        throw DimensionError("environment reset: dimension mismatch");
    (void)DensityMatrix(tau);
    reset_ = tau;
}

const Matrix& DilatedProcess::reset_state() const {
    if (!reset_enabled())
        throw ValidationError("reset_state: environment reset is not enabled");
    return reset_;
}

Matrix DilatedProcess::evolve_step(const Matrix& joint, int step) const {
    const Matrix& u = unitary(step);
    Matrix out = u * joint * u.adjoint();
    if (reset_enabled()) {
        Matrix sys = partial_trace(out, d_sys_, d_env_, Keep::First);
        out = tensor_product(sys, reset_);
    }
    return out;
}

Matrix DilatedProcess::apply_system_control(const Matrix& joint,
                                            const QuantumChannel& ctrl) const {
    if (ctrl.dim() != d_sys_)
        throw DimensionError("apply_system_control: dimension mismatch");
    Matrix id_env = Matrix::Identity(d_env_, d_env_);
    Matrix out = Matrix::Zero(joint.rows(), joint.cols());
    for (const Matrix& k : ctrl.kraus()) {
        Matrix lift = tensor_product(k, id_env);
        out += lift * joint * lift.adjoint();
    }
    return out;
}

Matrix DilatedProcess::joint_after_breaks(
    const CausalBreakBasis& basis,
    const std::vector<std::pair<Eigen::Index, Eigen::Index>>& prefix) const {
    if (basis.dim() != d_sys_)
        throw DimensionError("joint_after_breaks: basis dimension mismatch");
    if (int(prefix.size()) > n_steps())
        throw DimensionError("joint_after_breaks: prefix longer than process");
    Matrix id_env = Matrix::Identity(d_env_, d_env_);
    Matrix joint = initial_;
    for (size_t i = 0; i < prefix.size(); ++i) {
        auto [k, l] = prefix[i];
        // A break leaves the product of the repreparation and the conditioned
        // (unnormalized) environment state.
        Matrix env =
            partial_trace(tensor_product(basis.povm(k), id_env) * joint,
                          d_sys_, d_env_, Keep::Second);
        joint = evolve_step(tensor_product(basis.reprep(l), env), int(i));
    }
    return joint;
}

Matrix run_dilated_process_raw(const DilatedProcess& proc,
                               const std::vector<QuantumChannel>& controls) {
    if (int(controls.size()) != proc.n_steps())
        throw DimensionError("run_dilated_process: need one control per step");
    Matrix joint = proc.initial_joint();
    for (int a = 0; a < proc.n_steps(); ++a) {
        joint = proc.apply_system_control(joint, controls[size_t(a)]);
        joint = proc.evolve_step(joint, a);
    }
    return joint;
}

DensityMatrix run_dilated_process(const DilatedProcess& proc,
                                  const std::vector<QuantumChannel>& controls) {
    Matrix joint = run_dilated_process_raw(proc, controls);
    return DensityMatrix::subnormalized(
        partial_trace(joint, proc.system_dim(), proc.env_dim(), Keep::First));
}

ConditionalMap conditional_map(
    const DilatedProcess& proc, const CausalBreakBasis& basis,
    const std::vector<std::pair<Eigen::Index, Eigen::Index>>& prefix,
    Eigen::Index outcome, double probability_floor) {
    const int step = int(prefix.size()) + 1;
    if (step > proc.n_steps())
        throw DimensionError("conditional_map: no step after this break");

    const Eigen::Index de = proc.env_dim();
    Matrix id_env = Matrix::Identity(de, de);
    Matrix joint = proc.joint_after_breaks(basis, prefix);
    Matrix env_cond =
        partial_trace(tensor_product(basis.povm(outcome), id_env) * joint,
                      proc.system_dim(), de, Keep::Second);
    double p = env_cond.trace().real();
    if (p < probability_floor)
        throw UndefinedConditional(
            "conditional_map: history has probability below the floor");
    env_cond /= p;

    // Tomography of X -> Tr_E[U (X x env) U^dag] over the repreparations.
    const Matrix& u = proc.unitary(step - 1);
    const Eigen::Index d = proc.system_dim();
    Matrix superop = Matrix::Zero(d * d, d * d);
    for (Eigen::Index l = 0; l < basis.size(); ++l) {
        Matrix evolved = u * tensor_product(basis.reprep(l), env_cond) *
                         u.adjoint();
        Matrix img = partial_trace(evolved, d, de, Keep::First);
        superop += vec(img) * vec(basis.reprep_dual(l)).adjoint();
    }
    return ConditionalMap{prefix, outcome, step, p,
                          QuantumChannel::from_superop(superop)};
}

MarkovReport markovianity_check(const DilatedProcess& proc,
                                const CausalBreakBasis& basis, double tol,
                                std::uint64_t budget,
                                double probability_floor) {
    MarkovReport rep;
    rep.tolerance = tol;
    const Eigen::Index n = basis.size();
    // (k, l) choices for each step already traversed
    const std::uint64_t per_step = std::uint64_t(n) * std::uint64_t(n);

    std::uint64_t total = 0, scale = 1;
    for (int step = 1; step <= proc.n_steps(); ++step) {
        total += scale * std::uint64_t(n);
        if (total > budget || scale > budget)
            throw BudgetExceeded("markovianity_check: history count exceeds budget");
        scale *= per_step;
    }

    for (int step = 1; step <= proc.n_steps(); ++step) {
        const size_t plen = size_t(step - 1);
        std::vector<std::pair<Eigen::Index, Eigen::Index>> prefix(
            plen, {0, 0});
        bool have_ref = false;
        Matrix ref;
        // Odometer over all (k, l) prefixes and the conditioning outcome.
        while (true) {
            for (Eigen::Index k = 0; k < n; ++k) {
                try {
                    ConditionalMap cm =
                        conditional_map(proc, basis, prefix, k,
                                        probability_floor);
                    ++rep.histories_checked;
                    if (!have_ref) {
                        ref = cm.map.superop();
                        have_ref = true;
                    } else {
                        rep.max_deviation =
                            std::max(rep.max_deviation,
                                     max_abs_diff(ref, cm.map.superop()));
                    }
                } catch (const UndefinedConditional&) {
                    ++rep.histories_skipped;
                }
            }
            // advance the prefix odometer
            size_t pos = 0;
            for (; pos < plen; ++pos) {
                auto& [pk, pl] = prefix[pos];
                if (++pl < n) break;
                pl = 0;
                if (++pk < n) break;
                pk = 0;
            }
            if (pos == plen) break;
        }
    }
    rep.markovian = rep.max_deviation < tol;
    return rep;
}

}  // namespace qtraj
