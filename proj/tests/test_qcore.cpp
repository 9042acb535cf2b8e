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
#include <complex>
#include <vector>

#include "qtraj/channel.hpp"
#include "qtraj/density_matrix.hpp"
#include "qtraj/linalg.hpp"
#include "qtraj/random.hpp"

using namespace qtraj;

namespace {

// ---------- independent oracles ----------
// These recompute the target quantities from definitions, using plain loops
// and std containers, so they do not share code paths with the library.

Matrix kron_oracle(const Matrix& a, const Matrix& b) {
    const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
    Matrix out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ca; ++j)
            for (Eigen::Index k = 0; k < rb; ++k)
                for (Eigen::Index l = 0; l < cb; ++l)
                    out(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
    return out;
}

// Partial trace via sandwiching with product basis kets.
Matrix ptrace_oracle_first(const Matrix& m, Eigen::Index d1, Eigen::Index d2) {
    Matrix out = Matrix::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
        for (Eigen::Index j = 0; j < d1; ++j) {
            Complex s = 0.0;
            for (Eigen::Index k = 0; k < d2; ++k) {
                Vector bra = Vector::Zero(d1 * d2);
                Vector ket = Vector::Zero(d1 * d2);
                bra(i * d2 + k) = 1.0;
                ket(j * d2 + k) = 1.0;
                s += (bra.adjoint() * m * ket)(0, 0);
            }
            out(i, j) = s;
        }
    return out;
}

// Truncated series for exp(-i h t); valid when ||h t|| is around 1.
Matrix taylor_exp_oracle(const Matrix& h, double t, int terms) {
    Eigen::Index d = h.rows();
    Matrix acc = Matrix::Identity(d, d);
    Matrix pow = Matrix::Identity(d, d);
    double fact = 1.0;
    for (int n = 1; n <= terms; ++n) {
        pow = pow * (Complex(0.0, -t) * h);
        fact *= n;
        acc += pow / fact;
    }
    return acc;
}

// Channel action recovered by contracting the Choi matrix.
Matrix choi_contract_oracle(const Matrix& choi, const Matrix& x) {
    auto d = x.rows();
    Matrix out = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            for (Eigen::Index a = 0; a < d; ++a)
                for (Eigen::Index b = 0; b < d; ++b)
                    out(i, j) += choi(i * d + a, j * d + b) * x(a, b);
    return out;
}

double entropy_oracle_bits(const std::vector<double>& eigs) {
    double s = 0.0;
    for (double p : eigs)
        if (p > 0.0) s -= p * std::log2(p);
    return s;
}

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

}  // namespace

TEST_CASE("tensor product matches the index oracle") {
    Rng rng(11);
    Matrix a(2, 3), b(3, 2);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        a(i / 3, i % 3) = Complex(rng.gaussian(), rng.gaussian());
    for (Eigen::Index i = 0; i < b.size(); ++i)
        b(i / 2, i % 2) = Complex(rng.gaussian(), rng.gaussian());
    CHECK(max_abs_diff(tensor_product(a, b), kron_oracle(a, b)) == 0.0);

    // Mixed product property on square operands.
    Matrix c = rng.unitary(2), d = rng.unitary(3);
    Matrix lhs = tensor_product(c, d) * tensor_product(c.adjoint(), d.adjoint());
    CHECK(max_abs_diff(lhs, Matrix(Matrix::Identity(6, 6))) < 1e-12);
}

TEST_CASE("partial trace matches the basis-ket oracle and contracts traces") {
    Rng rng(12);
    Matrix joint = rng.density_matrix(6);  // d1=2, d2=3
    Matrix s = partial_trace(joint, 2, 3, Keep::First);
    Matrix e = partial_trace(joint, 2, 3, Keep::Second);
    CHECK(max_abs_diff(s, ptrace_oracle_first(joint, 2, 3)) < 1e-14);
    CHECK(std::abs(s.trace().real() - 1.0) < 1e-12);
    CHECK(std::abs(e.trace().real() - 1.0) < 1e-12);

    // Product inputs split exactly.
    Matrix ra = rng.density_matrix(2), rb = rng.density_matrix(3);
    Matrix prod = tensor_product(ra, rb);
    CHECK(max_abs_diff(partial_trace(prod, 2, 3, Keep::First), ra) < 1e-14);
    CHECK(max_abs_diff(partial_trace(prod, 2, 3, Keep::Second), rb) < 1e-14);

    CHECK_THROWS_AS(partial_trace(joint, 4, 2, Keep::First), DimensionError);
}

TEST_CASE("hermitian_evolve agrees with the Taylor oracle and is unitary") {
    // h = (sigma_z/2) (x) diag(1,-1), t = pi: ||h t|| = pi/2, series converges.
    Matrix b(2, 2);
    b << 1, 0, 0, -1;
    Matrix h = tensor_product(Matrix(0.5 * pauli_z()), b);
    Matrix u = hermitian_evolve(h, kPi);
    CHECK(max_abs_diff(u, taylor_exp_oracle(h, kPi, 24)) < 1e-12);
    CHECK(is_unitary(u, 1e-12));

    // Known closed form for a single qubit.
    double t = 0.37;
    Matrix uz = hermitian_evolve(Matrix(0.5 * pauli_z()), t);
    Matrix want(2, 2);
    want << std::exp(Complex(0, -t / 2)), 0, 0, std::exp(Complex(0, t / 2));
    CHECK(max_abs_diff(uz, want) < 1e-14);

    Matrix notherm(2, 2);
    notherm << 0, 1, 0, 0;
    CHECK_THROWS_AS(hermitian_evolve(notherm, 1.0), ValidationError);
}

TEST_CASE("vec/unvec round-trip uses row-major order") {
    Matrix m(2, 3);
    m << 1, 2, 3, 4, 5, 6;
    Vector v = vec(m);
    CHECK(v(0) == Complex(1));
    CHECK(v(2) == Complex(3));
    CHECK(v(3) == Complex(4));
    CHECK(max_abs_diff(unvec(v, 2, 3), m) == 0.0);
}

TEST_CASE("density matrix validation") {
    Matrix ok(2, 2);
    ok << 0.75, 0.1, 0.1, 0.25;
    CHECK_NOTHROW(DensityMatrix{ok});

    Matrix nonherm(2, 2);
    nonherm << 0.75, 0.2, 0.1, 0.25;
    CHECK_THROWS_AS(DensityMatrix{nonherm}, ValidationError);

    Matrix badtrace(2, 2);
    badtrace << 0.8, 0.0, 0.0, 0.25;
    CHECK_THROWS_AS(DensityMatrix{badtrace}, ValidationError);

    Matrix negeig(2, 2);
    negeig << 1.2, 0.0, 0.0, -0.2;
    CHECK_THROWS_AS(DensityMatrix{negeig}, ValidationError);

    // Subnormalized split keeps the weight explicit.
    DensityMatrix half = DensityMatrix::subnormalized(Matrix(0.5 * ok));
    CHECK(half.weight() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(half.matrix().trace().real() - 1.0) < 1e-12);

    DensityMatrix zero = DensityMatrix::subnormalized(Matrix(Matrix::Zero(2, 2)));
    CHECK(zero.weight() == 0.0);
}

TEST_CASE("entropies match frozen values and the eigenvalue oracle") {
    Matrix rho(2, 2);
    rho << 0.75, 0, 0, 0.25;
    // Frozen: 2 - 0.75*log2(3).
    CHECK(von_neumann_entropy(rho) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-12));
    CHECK(linear_entropy(rho) == doctest::Approx(1.0 - 0.625).epsilon(1e-12));

    Rng rng(13);
    Matrix r = rng.density_matrix(3);
    RealVector lam = hermitian_eigenvalues(r);
    std::vector<double> eigs(lam.data(), lam.data() + lam.size());
    CHECK(von_neumann_entropy(r) ==
          doctest::Approx(entropy_oracle_bits(eigs)).epsilon(1e-10));

    CHECK(von_neumann_entropy(Matrix(DensityMatrix::maximally_mixed(4).matrix())) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pure-state fidelity") {
    Vector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    // Dephased |+><+| with off-diagonal shrink factor r: F = (1+r)/2.
    double r = 0.3;
    Matrix rho(2, 2);
    rho << 0.5, 0.5 * r, 0.5 * r, 0.5;
    CHECK(fidelity_pure(plus, rho) == doctest::Approx((1 + r) / 2.0).epsilon(1e-12));

    Vector unnorm(2);
    unnorm << 1.0, 1.0;
    CHECK_THROWS_AS(fidelity_pure(unnorm, rho), ValidationError);
}

TEST_CASE("trace distance") {
    Matrix a(2, 2), b(2, 2);
    a << 1, 0, 0, 0;
    b << 0, 0, 0, 1;
    CHECK(trace_distance(a, b) == doctest::Approx(1.0).epsilon(1e-12));
    a << 0.6, 0, 0, 0.4;
    b << 0.5, 0, 0, 0.5;
    CHECK(trace_distance(a, b) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("channels: Kraus, superop, Choi contraction agree") {
    Rng rng(14);
    // Random trace-preserving qubit channel from an isometry.
    Matrix g(4, 2);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = Eigen::MatrixXcd(qr.householderQ()).leftCols(2);
    std::vector<Matrix> kraus = {Matrix(q.topRows(2)), Matrix(q.bottomRows(2))};

    QuantumChannel ch = QuantumChannel::from_kraus(kraus);
    CHECK(ch.is_trace_preserving(1e-10));
    CHECK(ch.is_completely_positive());

    Matrix x = rng.density_matrix(2);
    Matrix via_kraus = kraus[0] * x * kraus[0].adjoint() +
                       kraus[1] * x * kraus[1].adjoint();
    CHECK(max_abs_diff(ch.apply(x), via_kraus) < 1e-12);
    CHECK(max_abs_diff(ch.apply(x), choi_contract_oracle(ch.choi(), x)) < 1e-12);

    // Kraus recovery from a superop-only channel reproduces the action.
    QuantumChannel bare = QuantumChannel::from_superop(ch.superop());
    Matrix back = Matrix::Zero(2, 2);
    for (const Matrix& k : bare.kraus()) back += k * x * k.adjoint();
    CHECK(max_abs_diff(back, via_kraus) < 1e-10);
}

TEST_CASE("channel classification on known maps") {
    Matrix sx = pauli_x();
    QuantumChannel flip = QuantumChannel::from_unitary(sx);
    CHECK(flip.is_trace_preserving());
    CHECK(flip.is_unital());

    // Full dephasing: kills off-diagonals, unital and TP.
    Matrix p0(2, 2), p1(2, 2);
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    QuantumChannel deph = QuantumChannel::from_kraus({p0, p1});
    CHECK(deph.is_trace_preserving());
    CHECK(deph.is_unital());
    Matrix x(2, 2);
    x << 0.5, 0.4, 0.4, 0.5;
    Matrix y = deph.apply(x);
    CHECK(std::abs(y(0, 1)) < 1e-15);

    // Amplitude damping is TP but not unital.
    double gamma = 0.3;
    Matrix k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1 - gamma);
    k1 << 0, std::sqrt(gamma), 0, 0;
    QuantumChannel ad = QuantumChannel::from_kraus({k0, k1});
    CHECK(ad.is_trace_preserving());
    CHECK_FALSE(ad.is_unital());

    // Trace-decreasing map flagged as such.
    QuantumChannel half = QuantumChannel::from_kraus({Matrix(0.5 * p0)});
    CHECK_FALSE(half.is_trace_preserving());

    // Composition order: compose(other) applies other first.
    QuantumChannel zt = QuantumChannel::from_unitary(Matrix(pauli_z()));
    Matrix rho(2, 2);
    rho << 0.5, 0.5, 0.5, 0.5;
    Matrix lhs = flip.compose(zt).apply(rho);
    Matrix rhs = sx * (pauli_z() * rho * pauli_z().adjoint()) * sx.adjoint();
    CHECK(max_abs_diff(lhs, rhs) < 1e-14);
}

TEST_CASE("seeded rng reproducibility and validity") {
    Rng a(99), b(99);
    Matrix ua = a.unitary(3), ub = b.unitary(3);
    CHECK(max_abs_diff(ua, ub) == 0.0);
    CHECK(is_unitary(ua, 1e-12));

    Matrix rho = a.density_matrix(3);
    CHECK_NOTHROW(DensityMatrix{rho});
    Vector psi = a.pure_state(4);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
    RealVector p = a.probability_vector(5);
    CHECK(std::abs(p.sum() - 1.0) < 1e-12);
    CHECK(p.minCoeff() >= 0.0);

    CHECK(derive_seed(7, 0) != derive_seed(7, 1));
    CHECK(derive_seed(7, 0) == derive_seed(7, 0));
}
