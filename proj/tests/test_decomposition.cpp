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

#include "qtraj/density_matrix.hpp"
#include "qtraj/gell_mann.hpp"
#include "qtraj/linalg.hpp"
#include "qtraj/random.hpp"
#include "qtraj/scaling.hpp"
#include "qtraj/spectral.hpp"

using namespace qtraj;

namespace {

const Complex kI(0.0, 1.0);

Matrix pauli(char which) {
    Matrix m(2, 2);
    switch (which) {
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << 0, -kI, kI, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

Matrix random_hermitian(Rng& rng, Eigen::Index d) {
    Matrix a(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            a(i, j) = Complex(rng.gaussian(), rng.gaussian());
    return (a + a.adjoint()) / 2.0;
}

// principal square root of a symmetric PSD matrix, for the polar oracle
RealMatrix sqrt_sym(const RealMatrix& s) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(s);
    RealVector vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * vals.asDiagonal() *
           es.eigenvectors().transpose();
}

// one-step system map of a product dilation, tomographed on matrix units
QuantumChannel simulate_step_channel(const SpectralHamiltonian& spec,
                                     const Matrix& rho_env, double t) {
    const Eigen::Index d = spec.system_dim(), de = spec.env_dim();
    Matrix u = hermitian_evolve(build_product_hamiltonian(spec), t);
    Matrix superop(d * d, d * d);
    for (Eigen::Index x = 0; x < d; ++x)
        for (Eigen::Index y = 0; y < d; ++y) {
            Matrix unit = Matrix::Zero(d, d);
            unit(x, y) = 1.0;
            Matrix out = partial_trace(
                u * tensor_product(unit, rho_env) * u.adjoint(), d, de,
                Keep::First);
            superop.col(x * d + y) = vec(out);
        }
    return QuantumChannel::from_superop(superop);
}

}  // namespace

TEST_CASE("basis elements are orthonormal and complete") {
    for (Eigen::Index d : {2, 3, 4}) {
        GellMannBasis basis(d);
        REQUIRE(basis.size() == d * d);
        for (Eigen::Index a = 0; a < basis.size(); ++a) {
            CHECK(is_hermitian(basis.element(a), 1e-14));
            for (Eigen::Index b = 0; b < basis.size(); ++b) {
                double overlap =
                    (basis.element(a) * basis.element(b)).trace().real();
                CHECK(overlap == doctest::Approx(a == b ? 1.0 : 0.0)
                                     .epsilon(1e-13));
            }
        }
        for (Eigen::Index a = 1; a < basis.size(); ++a)
            CHECK(std::abs(basis.element(a).trace()) < 1e-14);
    }
}

TEST_CASE("qubit basis reduces to the scaled Pauli matrices") {
    GellMannBasis basis(2);
    double r = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(basis.element(0), r * identity(2)) < 1e-15);
    CHECK(max_abs_diff(basis.element(basis.sym_index(0, 1)), r * pauli('x')) <
          1e-15);
    CHECK(max_abs_diff(basis.element(basis.asym_index(0, 1)), r * pauli('y')) <
          1e-15);
    CHECK(max_abs_diff(basis.element(basis.diag_index(1)), r * pauli('z')) <
          1e-15);
}

TEST_CASE("pair indices point at the matching coherence directions") {
    GellMannBasis basis(3);
    for (Eigen::Index mu = 0; mu < 3; ++mu)
        for (Eigen::Index mup = mu + 1; mup < 3; ++mup) {
            const Matrix& s = basis.element(basis.sym_index(mu, mup));
            CHECK(std::abs(s(mu, mup).real() - 1.0 / std::sqrt(2.0)) < 1e-15);
            const Matrix& a = basis.element(basis.asym_index(mu, mup));
            CHECK(std::abs(a(mu, mup).imag() + 1.0 / std::sqrt(2.0)) < 1e-15);
        }
    CHECK_THROWS_AS(basis.sym_index(1, 1), DimensionError);
    CHECK_THROWS_AS(basis.diag_index(3), DimensionError);
}

TEST_CASE("coordinates invert the expansion") {
    Rng rng(41);
    for (Eigen::Index d : {2, 3}) {
        GellMannBasis basis(d);
        Matrix h = random_hermitian(rng, d);
        RealVector x = basis.coordinates(h);
        CHECK(max_abs_diff(basis.from_coordinates(x), h) < 1e-12);

        DensityMatrix rho(rng.density_matrix(d));
        RealVector y = basis.coordinates(rho.matrix());
        CHECK(y(0) == doctest::Approx(1.0 / std::sqrt(double(d)))
                          .epsilon(1e-13));
    }
}

TEST_CASE("transfer matrix of a phase rotation is a plane rotation") {
    GellMannBasis basis(2);
    for (double theta : {0.3, 1.2, 2.8}) {
        Matrix u(2, 2);
        u << std::exp(-kI * theta / 2.0), 0, 0, std::exp(kI * theta / 2.0);
        RealMatrix m = channel_matrix(QuantumChannel::from_unitary(u), basis);

        // exp(-i theta Z / 2) sends X to cos X + sin Y and Y to cos Y - sin X
        RealMatrix expect = RealMatrix::Identity(4, 4);
        expect(1, 1) = std::cos(theta);
        expect(1, 2) = -std::sin(theta);
        expect(2, 1) = std::sin(theta);
        expect(2, 2) = std::cos(theta);
        CHECK((m - expect).cwiseAbs().maxCoeff() < 1e-12);

        auto sp = subspace_parameters(m, basis, 0, 1);
        CHECK(sp.ell == doctest::Approx(0.0).epsilon(1e-12));
        REQUIRE(sp.phi.has_value());
        CHECK(*sp.phi == doctest::Approx(-theta).epsilon(1e-12));
        CHECK(sp.leakage < 1e-12);
    }
}

TEST_CASE("identity channel has the identity transfer matrix") {
    for (Eigen::Index d : {2, 3}) {
        GellMannBasis basis(d);
        RealMatrix m = channel_matrix(QuantumChannel::identity(d), basis);
        CHECK((m - RealMatrix::Identity(d * d, d * d)).cwiseAbs().maxCoeff() <
              1e-13);
    }
}

TEST_CASE("polar factors match the symmetric square root oracle") {
    Rng rng(42);
    for (Eigen::Index d : {2, 3}) {
        GellMannBasis basis(d);
        // random-unitary mixtures are unital and trace preserving
        std::vector<QuantumChannel> parts;
        for (int i = 0; i < 3; ++i)
            parts.push_back(QuantumChannel::from_unitary(rng.unitary(d)));
        RealVector w = rng.probability_vector(3);
        auto op = QuantumChannel::mixture({w(0), w(1), w(2)}, parts);

        auto dec = scaling_unitary_decompose(op, basis);
        const Eigen::Index n = d * d - 1;
        CHECK(dec.unital_error < 1e-10);
        CHECK(dec.tp_error < 1e-10);
        CHECK((dec.m_tilde - dec.m.bottomRightCorner(n, n))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
        CHECK((dec.scaling * dec.rotation - dec.m_tilde).cwiseAbs().maxCoeff() <
              1e-11);
        CHECK((dec.rotation * dec.rotation.transpose() -
               RealMatrix::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff() < 1e-11);
        CHECK((dec.scaling - dec.scaling.transpose()).cwiseAbs().maxCoeff() <
              1e-11);
        Eigen::SelfAdjointEigenSolver<RealMatrix> es(dec.scaling);
        CHECK(es.eigenvalues().minCoeff() > -1e-11);

        RealMatrix oracle =
            sqrt_sym(dec.m_tilde * dec.m_tilde.transpose());
        CHECK((dec.scaling - oracle).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("non-unital channels are rejected") {
    GellMannBasis basis(2);
    double g = 0.4;
    Matrix k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1 - g);
    k1 << 0, std::sqrt(g), 0, 0;
    auto damping = QuantumChannel::from_kraus({k0, k1});
    CHECK_THROWS_AS(scaling_unitary_decompose(damping, basis), NonUnitalError);
}

TEST_CASE("pure dephasing splits into a diagonal scaling and no rotation") {
    GellMannBasis basis(2);
    double f = 0.55;
    Matrix k0 = std::sqrt((1 + f) / 2) * identity(2);
    Matrix k1 = std::sqrt((1 - f) / 2) * pauli('z');
    auto op = QuantumChannel::from_kraus({k0, k1});

    auto dec = scaling_unitary_decompose(op, basis);
    RealMatrix expect_d(3, 3);
    expect_d << f, 0, 0, 0, f, 0, 0, 0, 1;
    CHECK((dec.scaling - expect_d).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((dec.rotation - RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
          1e-12);

    auto sp = subspace_parameters(dec.m, basis, 0, 1);
    CHECK(sp.ell == doctest::Approx(-std::log(f)).epsilon(1e-12));
    REQUIRE(sp.phi.has_value());
    CHECK(*sp.phi == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("scaling strength and phase handle the degenerate cases") {
    CHECK(scaling_strength(Complex(1.0, 0.0)) == 0.0);
    CHECK(std::isinf(scaling_strength(Complex(0.0, 0.0))));
    CHECK_FALSE(scaling_phase(Complex(0.0, 0.0)).has_value());
    CHECK(*scaling_phase(Complex(0.0, -0.5)) ==
          doctest::Approx(-kPi / 2).epsilon(1e-13));

    // frozen value: quarter-period coherence loss of a two-level bath
    Complex c = coherence_factor((RealVector(2) << 1.0, -1.0).finished(),
                                 (RealVector(2) << 0.5, 0.5).finished(), 1.0,
                                 kPi / 4);
    CHECK(scaling_strength(c) ==
          doctest::Approx(0.34657359027997264).epsilon(1e-14));
    CHECK(std::abs(c.imag()) < 1e-16);
}

TEST_CASE("closed form, double sum, and simulated extraction agree") {
    Rng rng(43);
    for (int trial = 0; trial < 6; ++trial) {
        const Eigen::Index d = (trial % 2 == 0) ? 2 : 3;
        const Eigen::Index de = 3;
        RealVector s(d), b(de);
        for (Eigen::Index i = 0; i < d; ++i) s(i) = rng.gaussian();
        for (Eigen::Index i = 0; i < de; ++i) b(i) = rng.gaussian();
        auto spec = SpectralHamiltonian::diagonal(s, b);
        DensityMatrix env(rng.density_matrix(de));
        RealVector pops(de);
        for (Eigen::Index g = 0; g < de; ++g)
            pops(g) = spec.env_population(env.matrix(), g);
        double t = 0.3 + rng.uniform();

        auto op = simulate_step_channel(spec, env.matrix(), t);
        GellMannBasis basis(d);
        RealMatrix m = channel_matrix(op, basis);

        for (Eigen::Index mu = 0; mu < d; ++mu)
            for (Eigen::Index mup = mu + 1; mup < d; ++mup) {
                double omega = spec.omega(mu, mup);

                // brute-force double sum over bath level pairs
                double mod2 = 0.0;
                for (Eigen::Index g = 0; g < de; ++g)
                    for (Eigen::Index gp = 0; gp < de; ++gp)
                        mod2 += pops(g) * pops(gp) *
                                std::cos((b(g) - b(gp)) * omega * t);
                double ell_sum = -0.5 * std::log(std::abs(mod2));

                Complex c = coherence_factor(b, pops, omega, t);
                double ell_formula = scaling_strength(c);

                auto sp = subspace_parameters(m, basis, mu, mup);
                CHECK(sp.leakage < 1e-9);
                CHECK(ell_formula ==
                      doctest::Approx(ell_sum).epsilon(1e-10));
                CHECK(sp.ell == doctest::Approx(ell_sum).epsilon(1e-8));

                REQUIRE(sp.phi.has_value());
                double phi_expect =
                    std::atan2(c.imag(), c.real());
                CHECK(*sp.phi ==
                      doctest::Approx(phi_expect).epsilon(1e-8));
            }
    }
}

TEST_CASE("strength traces the log-cosine curve for a symmetric bath") {
    RealVector b(2), p(2);
    b << 1.0, -1.0;
    p << 0.5, 0.5;
    for (int i = 0; i < 64; ++i) {
        double t = double(i) * kPi / 63.0;
        double ell = scaling_strength(coherence_factor(b, p, 1.0, t));
        CHECK(ell == doctest::Approx(-std::log(std::abs(std::cos(t))))
                         .epsilon(1e-12));
    }
}

TEST_CASE("predicted linear entropy matches the simulated state") {
    Rng rng(44);
    for (int trial = 0; trial < 8; ++trial) {
        const Eigen::Index d = (trial % 2 == 0) ? 2 : 3;
        const Eigen::Index de = 2 + trial % 3;
        RealVector s(d), b(de);
        for (Eigen::Index i = 0; i < d; ++i) s(i) = rng.gaussian();
        for (Eigen::Index i = 0; i < de; ++i) b(i) = rng.gaussian();
        auto spec = SpectralHamiltonian::diagonal(s, b);
        DensityMatrix env(rng.density_matrix(de));
        DensityMatrix rho(rng.density_matrix(d));
        RealVector pops(de);
        for (Eigen::Index g = 0; g < de; ++g)
            pops(g) = spec.env_population(env.matrix(), g);
        double t = 0.2 + 1.5 * rng.uniform();

        Matrix u = hermitian_evolve(build_product_hamiltonian(spec), t);
        Matrix out = partial_trace(
            u * tensor_product(rho.matrix(), env.matrix()) * u.adjoint(), d,
            de, Keep::First);
        double direct = 1.0 - (out * out).trace().real();

        double predicted =
            linear_entropy_from_scaling(spec, pops, rho.matrix(), t);
        CHECK(predicted == doctest::Approx(direct).epsilon(1e-9));
    }
}
