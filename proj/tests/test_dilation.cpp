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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qtraj/causal_break.hpp"
#include "qtraj/density_matrix.hpp"
#include "qtraj/dilation.hpp"
#include "qtraj/linalg.hpp"
#include "qtraj/random.hpp"
#include "qtraj/spectral.hpp"

using namespace qtraj;

namespace {

const Complex kI(0.0, 1.0);

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix random_hermitian(Rng& rng, Eigen::Index d) {
    Matrix a(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            a(i, j) = Complex(rng.gaussian(), rng.gaussian());
    return (a + a.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("spectral decomposition reassembles the operators") {
    Rng rng(31);
    Matrix s = random_hermitian(rng, 2);
    Matrix b = random_hermitian(rng, 3);
    auto spec = SpectralHamiltonian::from_operators(s, b);

    CHECK(max_abs_diff(spec.system_op(), s) < 1e-12);
    CHECK(max_abs_diff(spec.env_op(), b) < 1e-12);
    CHECK(max_abs_diff(build_product_hamiltonian(spec), tensor_product(s, b)) <
          1e-12);

    // projectors resolve the identity and are rank one
    Matrix psum = Matrix::Zero(3, 3);
    for (Eigen::Index g = 0; g < 3; ++g) {
        Matrix p = spec.b_projector(g);
        CHECK(max_abs_diff(p * p, p) < 1e-12);
        psum += p;
    }
    CHECK(max_abs_diff(psum, identity(3)) < 1e-12);

    CHECK(spec.omega(0, 1) == doctest::Approx(spec.s_values()(0) -
                                              spec.s_values()(1)));
    CHECK_THROWS_AS(SpectralHamiltonian::from_operators(s + kI * identity(2), b),
                    ValidationError);
}

TEST_CASE("dephasing factor reduces to a cosine for a symmetric bath") {
    RealVector s(2), b(2);
    s << 0.5, -0.5;
    b << 1.0, -1.0;
    auto spec = SpectralHamiltonian::diagonal(s, b);
    Matrix rho_env = Matrix::Identity(2, 2) / 2.0;

    for (double t : {0.0, 0.3, 0.7, 2.1}) {
        Complex f = dephasing_factor(spec, rho_env, t);
        CHECK(f.real() == doctest::Approx(std::cos(t)).epsilon(1e-14));
        CHECK(std::abs(f.imag()) < 1e-14);
    }

    // an energy eigenstate of the bath never dephases
    Matrix pure_env = Matrix::Zero(2, 2);
    pure_env(0, 0) = 1.0;
    CHECK(std::abs(dephasing_factor(spec, pure_env, 1.3)) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("one-step dephasing matches the closed-form fidelity") {
    Rng rng(32);
    RealVector s(2);
    s << 0.5, -0.5;
    for (int trial = 0; trial < 10; ++trial) {
        RealVector b(3);
        for (int i = 0; i < 3; ++i) b(i) = rng.gaussian();
        auto spec = SpectralHamiltonian::diagonal(s, b);
        DensityMatrix env(rng.density_matrix(3));
        Vector psi = rng.pure_state(2);
        double t = 0.2 + rng.uniform();

        auto proc = DilatedProcess::equidistant(
            spec, (psi * psi.adjoint()).eval(), env.matrix(), 2, t);
        DensityMatrix out =
            run_dilated_process(proc, {QuantumChannel::identity(2)});

        Complex f = dephasing_factor(spec, env.matrix(), t);
        double mu2 = std::norm(psi(0)), nu2 = std::norm(psi(1));
        double expect = 1.0 - 2.0 * mu2 * nu2 * (1.0 - f.real());
        CHECK(fidelity_pure(psi, out) == doctest::Approx(expect).epsilon(1e-12));

        // populations frozen, coherence scaled by the factor
        CHECK(out.matrix()(0, 0).real() == doctest::Approx(mu2).epsilon(1e-12));
        Complex coh = psi(0) * std::conj(psi(1)) * f;
        CHECK(std::abs(out.matrix()(0, 1) - coh) < 1e-12);
    }
}

TEST_CASE("a bit flip at the midpoint inverts commuting dephasing exactly") {
    Rng rng(33);
    Matrix s_op = pauli_z() / 2.0;
    for (int trial = 0; trial < 3; ++trial) {
        Matrix b_op = random_hermitian(rng, 3);
        auto spec = SpectralHamiltonian::from_operators(s_op, b_op);
        DensityMatrix env(rng.density_matrix(3));
        Vector psi = rng.pure_state(2);

        auto proc = DilatedProcess::equidistant(
            spec, (psi * psi.adjoint()).eval(), env.matrix(), 3,
            0.4 + rng.uniform());
        std::vector<QuantumChannel> controls = {
            QuantumChannel::identity(2),
            QuantumChannel::from_unitary(pauli_x())};
        DensityMatrix out = run_dilated_process(proc, controls);

        Vector flipped = pauli_x() * psi;
        CHECK(fidelity_pure(flipped, out) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("conditional map for a trivial environment is the step unitary") {
    Rng rng(34);
    auto basis = CausalBreakBasis::standard(2);
    Matrix u1 = rng.unitary(2), u2 = rng.unitary(2);
    DensityMatrix rho(rng.density_matrix(2));
    DilatedProcess proc(rho.matrix(), {u1, u2}, 2, 1);

    Matrix expect1 = tensor_product(u1, u1.conjugate());
    Matrix expect2 = tensor_product(u2, u2.conjugate());
    for (Eigen::Index k = 0; k < 4; ++k) {
        auto cm = conditional_map(proc, basis, {}, k);
        CHECK(cm.step == 1);
        CHECK(max_abs_diff(cm.map.superop(), expect1) < 1e-10);

        // second step, any history: still the bare unitary
        auto cm2 = conditional_map(proc, basis, {{k, (k + 1) % 4}}, 0);
        CHECK(cm2.step == 2);
        CHECK(max_abs_diff(cm2.map.superop(), expect2) < 1e-10);
    }
}

TEST_CASE("conditional maps of commuting dilations are unital") {
    Rng rng(35);
    auto basis = CausalBreakBasis::standard(2);
    RealVector s(2);
    s << 0.7, -0.7;
    for (int trial = 0; trial < 5; ++trial) {
        RealVector b(2);
        b << rng.gaussian(), rng.gaussian();
        auto spec = SpectralHamiltonian::diagonal(s, b);
        DensityMatrix rs(rng.density_matrix(2));
        DensityMatrix re(rng.density_matrix(2));
        auto proc = DilatedProcess::equidistant(spec, rs.matrix(), re.matrix(),
                                                3, 0.5 + rng.uniform());

        Eigen::Index k1 = Eigen::Index(rng.uniform() * 4);
        Eigen::Index l1 = Eigen::Index(rng.uniform() * 4);
        auto cm = conditional_map(proc, basis, {{k1, l1}},
                                  Eigen::Index(rng.uniform() * 4));
        CHECK(cm.map.is_unital(1e-10));
        CHECK(cm.map.is_trace_preserving(1e-10));
        Matrix img = cm.map.apply(identity(2));
        CHECK(max_abs_diff(img, identity(2)) < 1e-10);
    }
}

TEST_CASE("probability floor flags unlikely histories") {
    Rng rng(36);
    auto basis = CausalBreakBasis::standard(2);
    RealVector s(2), b(2);
    s << 0.5, -0.5;
    b << 1.0, -1.0;
    auto spec = SpectralHamiltonian::diagonal(s, b);
    DensityMatrix rs(rng.density_matrix(2));
    DensityMatrix re(rng.density_matrix(2));
    auto proc =
        DilatedProcess::equidistant(spec, rs.matrix(), re.matrix(), 2, 0.8);

    // no single outcome carries probability above 0.99
    CHECK_THROWS_AS(conditional_map(proc, basis, {}, 0, 0.99),
                    UndefinedConditional);
}

TEST_CASE("memoryless variants pass the Markov check and memory fails it") {
    Rng rng(37);
    auto basis = CausalBreakBasis::standard(2);
    RealVector s(2), b(2);
    s << 0.5, -0.5;
    b << 1.0, -0.6;
    auto spec = SpectralHamiltonian::diagonal(s, b);
    Matrix rho_env = Matrix::Zero(2, 2);
    rho_env(0, 0) = 0.35;
    rho_env(1, 1) = 0.65;
    rho_env(0, 1) = rho_env(1, 0) = 0.2;
    DensityMatrix rs(rng.density_matrix(2));

    auto proc =
        DilatedProcess::equidistant(spec, rs.matrix(), rho_env, 3, 1.1);

    SUBCASE("coupled evolution with a persistent bath carries memory") {
        auto rep = markovianity_check(proc, basis, 1e-6);
        CHECK_FALSE(rep.markovian);
        CHECK(rep.max_deviation > 1e-3);
    }

    SUBCASE("resetting the bath after every step removes the memory") {
        proc.enable_environment_reset(rho_env);
        auto rep = markovianity_check(proc, basis, 1e-6);
        CHECK(rep.markovian);
        CHECK(rep.max_deviation < 1e-10);
    }

    SUBCASE("a trivial environment is Markovian") {
        DilatedProcess unitary_proc(rs.matrix(),
                                    {rng.unitary(2), rng.unitary(2)}, 2, 1);
        auto rep = markovianity_check(unitary_proc, basis, 1e-8);
        CHECK(rep.markovian);
    }
}

TEST_CASE("joint evolution conserves trace and reset keeps the marginal") {
    Rng rng(38);
    RealVector s(2), b(3);
    s << 0.4, -0.4;
    b << 0.9, 0.1, -1.2;
    auto spec = SpectralHamiltonian::diagonal(s, b);
    DensityMatrix rs(rng.density_matrix(2));
    DensityMatrix re(rng.density_matrix(3));
    auto proc =
        DilatedProcess::equidistant(spec, rs.matrix(), re.matrix(), 4, 0.6);

    Matrix joint = proc.initial_joint();
    for (int step = 0; step < proc.n_steps(); ++step) {
        Matrix next = proc.evolve_step(joint, step);
        CHECK(std::abs(next.trace().real() - joint.trace().real()) < 1e-12);
        joint = next;
    }

    auto reset_proc = proc;
    Matrix tau = DensityMatrix::maximally_mixed(3).matrix();
    reset_proc.enable_environment_reset(tau);
    Matrix stepped = reset_proc.evolve_step(reset_proc.initial_joint(), 0);
    Matrix env = partial_trace(stepped, 2, 3, Keep::Second);
    CHECK(max_abs_diff(env, tau) < 1e-12);

    Matrix plain = proc.evolve_step(proc.initial_joint(), 0);
    CHECK(max_abs_diff(partial_trace(stepped, 2, 3, Keep::First),
                       partial_trace(plain, 2, 3, Keep::First)) < 1e-12);
}
