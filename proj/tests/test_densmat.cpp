// Copyright 2026 The warmq Authors
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

#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "warmq/densmat.hpp"
#include "warmq/entanglement.hpp"
#include "warmq/esd.hpp"

using namespace warmq;

namespace {

DensityMatrix bell_minus() {
    return bell_state(BellSign::kMinus);
}

}  // namespace

TEST_CASE("tensor_product identities") {
    const Cmat i2 = Cmat::Identity(2, 2);
    CHECK(max_abs_diff(tensor_product(i2, i2), Cmat::Identity(4, 4)) == 0.0);

    Cmat e0 = Cmat::Zero(2, 2);
    e0(0, 0) = 1.0;
    Cmat expected = Cmat::Zero(4, 4);
    expected(0, 0) = 1.0;
    CHECK(max_abs_diff(tensor_product(e0, e0), expected) == 0.0);
}

TEST_CASE("tensor_product index map") {
    Rng rng(11);
    const Cmat a = test::random_integer_matrix(2, rng);
    const Cmat b = test::random_integer_matrix(3, rng);
    const Cmat ab = tensor_product(a, b);
    REQUIRE(ab.rows() == 6);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            for (Eigen::Index k = 0; k < 3; ++k)
                for (Eigen::Index l = 0; l < 3; ++l)
                    CHECK(ab(i * 3 + k, j * 3 + l) == a(i, j) * b(k, l));
}

TEST_CASE("tensor_product is associative exactly on integer matrices") {
    Rng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const Cmat a = test::random_integer_matrix(2, rng);
        const Cmat b = test::random_integer_matrix(2, rng);
        const Cmat c = test::random_integer_matrix(3, rng);
        const Cmat left = tensor_product(tensor_product(a, b), c);
        const Cmat right = tensor_product(a, tensor_product(b, c));
        CHECK(max_abs_diff(left, right) == 0.0);
    }
}

TEST_CASE("spin-flip conjugation preserves four-dimensional closure") {
    const Cmat yy = tensor_product(pauli_y(), pauli_y());
    CHECK(max_abs_diff(yy * yy, Cmat::Identity(4, 4)) == 0.0);
    const DensityMatrix rho = sample_random_density(2, 99);
    const Cmat twice = yy * (yy * rho.matrix() * yy) * yy;
    REQUIRE(twice.rows() == rho.dim());
    CHECK(max_abs_diff(twice, rho.matrix()) < 1e-14);
}

TEST_CASE("hermitian_eigenvalues on diagonal and pure states") {
    Cmat d = Cmat::Zero(4, 4);
    d.diagonal() << 0.1, 0.4, 0.2, 0.3;
    const auto vals = hermitian_eigenvalues(d);
    CHECK(vals[0] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(vals[1] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(vals[2] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(vals[3] == doctest::Approx(0.1).epsilon(1e-14));

    const auto bell_vals = hermitian_eigenvalues(bell_minus().matrix());
    CHECK(bell_vals[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(std::abs(bell_vals[static_cast<std::size_t>(i)]) < 1e-12);
}

TEST_CASE("partial transpose of the singlet has spectrum (1/2,1/2,1/2,-1/2)") {
    // Independent route: write the transposed matrix out explicitly and
    // eigensolve it, then compare against partial_transpose of the state.
    Cmat explicit_pt = Cmat::Zero(4, 4);
    explicit_pt(1, 1) = 0.5;
    explicit_pt(2, 2) = 0.5;
    explicit_pt(0, 3) = -0.5;
    explicit_pt(3, 0) = -0.5;
    const auto expected = hermitian_eigenvalues(explicit_pt);
    CHECK(expected[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(expected[3] == doctest::Approx(-0.5).epsilon(1e-14));

    const Cmat pt = partial_transpose(bell_minus(), 1);
    CHECK(max_abs_diff(pt, explicit_pt) < 1e-15);
    const auto vals = hermitian_eigenvalues(pt);
    for (int i = 0; i < 4; ++i)
        CHECK(vals[static_cast<std::size_t>(i)] ==
              doctest::Approx(expected[static_cast<std::size_t>(i)]).epsilon(1e-12));
}

TEST_CASE("partial transpose fixes diagonal states and is an involution") {
    Cmat d = Cmat::Zero(4, 4);
    d.diagonal() << 0.1, 0.2, 0.3, 0.4;
    const DensityMatrix rho(2, d);
    CHECK(max_abs_diff(partial_transpose(rho, 0), d) == 0.0);
    CHECK(max_abs_diff(partial_transpose(rho, 1), d) == 0.0);

    for (int m = 1; m <= 3; ++m) {
        const DensityMatrix random = sample_random_density(m, 17u + static_cast<unsigned>(m));
        for (int k = 0; k < m; ++k) {
            const Cmat once = partial_transpose(random, k);
            const Cmat twice = partial_transpose_mask(once, m, std::uint32_t{1} << k);
            CHECK(max_abs_diff(twice, random.matrix()) == 0.0);
        }
    }
}

TEST_CASE("partial transpose of a product state stays positive") {
    Rng rng(3);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityMatrix rho = sample_random_product_state(2, 100u + static_cast<unsigned>(rep));
        for (int k = 0; k < 2; ++k) {
            const auto vals = hermitian_eigenvalues(partial_transpose(rho, k));
            CHECK(vals.back() >= -1e-12);
        }
    }
}

TEST_CASE("partial transpose index validation") {
    const DensityMatrix rho = sample_random_density(2, 1);
    CHECK_THROWS_AS(partial_transpose(rho, -1), IndexOutOfRangeError);
    CHECK_THROWS_AS(partial_transpose(rho, 2), IndexOutOfRangeError);
}

TEST_CASE("hermitian_eigenvalues rejects asymmetric input") {
    Cmat bad = Cmat::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigenvalues(bad), NotHermitianError);
}

TEST_CASE("density sampler is deterministic and well formed") {
    for (int m = 1; m <= 3; ++m) {
        const DensityMatrix a = sample_random_density(m, 42);
        const DensityMatrix b = sample_random_density(m, 42);
        CHECK(max_abs_diff(a.matrix(), b.matrix()) == 0.0);
        const DensityMatrix c = sample_random_density(m, 43);
        CHECK(max_abs_diff(a.matrix(), c.matrix()) > 0.0);

        CHECK(std::abs(a.matrix().trace().real() - 1.0) <= 1e-12);
        CHECK(hermitian_eigenvalues(a.matrix()).back() >= -1e-12);
        CHECK_NOTHROW(a.validate());
    }
}

TEST_CASE("product sampler yields rank-1 separable states") {
    const DensityMatrix one = sample_random_product_state(1, 7);
    CHECK(std::abs((one.matrix() * one.matrix()).trace().real() - 1.0) <= 1e-12);

    for (int rep = 0; rep < 20; ++rep) {
        const DensityMatrix rho = sample_random_product_state(2, 200u + static_cast<unsigned>(rep));
        CHECK(lambda_value(rho) <= 1e-12);
        CHECK(min_pt_eigenvalue(rho, 0b10u) >= -1e-12);
    }
}

TEST_CASE("state overlap with sampled product states is a probability") {
    for (int rep = 0; rep < 25; ++rep) {
        const DensityMatrix rho = sample_random_density(2, 300u + static_cast<unsigned>(rep));
        const DensityMatrix sigma =
            sample_random_product_state(2, 400u + static_cast<unsigned>(rep));
        const double overlap = (rho.matrix() * sigma.matrix()).trace().real();
        CHECK(overlap >= -1e-12);
        CHECK(overlap <= 1.0 + 1e-12);
    }
}

TEST_CASE("density matrix eigenvalues sum to one") {
    for (int m = 1; m <= 3; ++m) {
        const auto vals =
            hermitian_eigenvalues(sample_random_density(m, 500u + static_cast<unsigned>(m)).matrix());
        double sum = 0.0;
        for (double v : vals) sum += v;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("density matrix constructor enforces the invariants") {
    Cmat not_herm = Cmat::Zero(2, 2);
    not_herm(0, 0) = 0.5;
    not_herm(1, 1) = 0.5;
    not_herm(0, 1) = Complex{0.0, 1e-6};
    CHECK_THROWS_AS(DensityMatrix(1, not_herm), NotHermitianError);

    Cmat bad_trace = 0.9 * Cmat::Identity(2, 2);
    CHECK_THROWS_AS(DensityMatrix(1, bad_trace), NumericalIntegrityError);

    Cmat not_psd = Cmat::Zero(2, 2);
    not_psd(0, 0) = 1.5;
    not_psd(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix(1, not_psd), NumericalIntegrityError);
}

TEST_CASE("product projector validates factors and lifts to a projector") {
    Cmat p = Cmat::Zero(2, 2);
    p(0, 0) = 1.0;
    const ProductProjector proj({p, p});
    const Cmat lifted = proj.to_matrix();
    CHECK(max_abs_diff(lifted * lifted, lifted) == 0.0);

    Cmat not_proj = 0.5 * Cmat::Identity(2, 2);
    CHECK_THROWS_AS(ProductProjector({not_proj}), NumericalIntegrityError);
}

TEST_CASE("single-qubit kernels agree with lifted operators") {
    Rng rng(23);
    for (int m = 1; m <= 3; ++m) {
        const DensityMatrix rho = sample_random_density(m, 600u + static_cast<unsigned>(m));
        for (int k = 0; k < m; ++k) {
            Cmat op(2, 2);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) op(r, c) = Complex{rng.normal(), rng.normal()};
            const Cmat lifted = test::lift_to_qubit(op, m, k);
            const Cmat expected = lifted * rho.matrix() * lifted.adjoint();
            const Cmat got = conjugate_on_qubit(rho.matrix(), m, k, op);
            CHECK(max_abs_diff(got, expected) < 1e-12);

            for (int level = 0; level < 2; ++level) {
                Cmat proj = Cmat::Zero(2, 2);
                proj(level, level) = 1.0;
                const Cmat lifted_proj = test::lift_to_qubit(proj, m, k);
                const Cmat anti = lifted_proj * rho.matrix() + rho.matrix() * lifted_proj;
                CHECK(max_abs_diff(anticommute_level_projector(rho.matrix(), m, k, level),
                                   anti) < 1e-13);
            }
        }
    }
}
