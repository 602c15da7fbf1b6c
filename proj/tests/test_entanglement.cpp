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
#include "warmq/entanglement.hpp"
#include "warmq/esd.hpp"

using namespace warmq;

namespace {

DensityMatrix diagonal_state(double p1, double p2, double p3, double p4) {
    Cmat m = Cmat::Zero(4, 4);
    m.diagonal() << p1, p2, p3, p4;
    return DensityMatrix(2, m);
}

}  // namespace

TEST_CASE("spin-flip spectrum") {
    SUBCASE("Bell states are maximally spin-flip symmetric") {
        for (BellSign sign : {BellSign::kPlus, BellSign::kMinus}) {
            const auto vals = spin_flip_spectrum(bell_state(sign));
            CHECK(vals[0] == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(vals[1] == 0.0);
            CHECK(vals[2] == 0.0);
            CHECK(vals[3] == 0.0);
        }
    }

    SUBCASE("diagonal states give the pairwise products") {
        const double p1 = 0.1, p2 = 0.2, p3 = 0.3, p4 = 0.4;
        const auto vals = spin_flip_spectrum(diagonal_state(p1, p2, p3, p4));
        // Multiset {p1 p4, p1 p4, p2 p3, p2 p3} sorted decreasing.
        CHECK(vals[0] == doctest::Approx(p2 * p3).epsilon(1e-12));
        CHECK(vals[1] == doctest::Approx(p2 * p3).epsilon(1e-12));
        CHECK(vals[2] == doctest::Approx(p1 * p4).epsilon(1e-12));
        CHECK(vals[3] == doctest::Approx(p1 * p4).epsilon(1e-12));
    }

    SUBCASE("a basis product state is spin-flip orthogonal") {
        const auto vals = spin_flip_spectrum(diagonal_state(1.0, 0.0, 0.0, 0.0));
        for (double v : vals) CHECK(v == 0.0);
    }

    SUBCASE("wrong dimension is rejected") {
        CHECK_THROWS_AS(spin_flip_spectrum(sample_random_density(1, 1)), WrongDimensionError);
        CHECK_THROWS_AS(spin_flip_spectrum(sample_random_density(3, 1)), WrongDimensionError);
    }
}

TEST_CASE("lambda_value") {
    SUBCASE("thermal steady state") {
        for (double nbar : {0.0, 0.5, 1.0, 2.0}) {
            const double den = (2.0 * nbar + 1.0) * (2.0 * nbar + 1.0);
            const double expected = -2.0 * nbar * (nbar + 1.0) / den;
            CHECK(lambda_value(thermal_state(2, nbar).matrix) ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
        CHECK(lambda_value(thermal_state(2, 1.0).matrix) ==
              doctest::Approx(-4.0 / 9.0).epsilon(1e-13));
        // Zero temperature sits exactly on the separability boundary.
        CHECK(lambda_value(thermal_state(2, 0.0).matrix) == 0.0);
    }

    SUBCASE("Bell states have lambda 1") {
        CHECK(lambda_value(bell_state(BellSign::kPlus)) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(lambda_value(bell_state(BellSign::kMinus)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("lambda_report classification bands") {
    const LambdaReport entangled = lambda_report(bell_state(BellSign::kPlus));
    CHECK(entangled.classification == LambdaReport::Classification::kEntangled);
    CHECK(entangled.concurrence == doctest::Approx(1.0).epsilon(1e-12));

    const LambdaReport boundary = lambda_report(thermal_state(2, 0.0).matrix);
    CHECK(boundary.classification == LambdaReport::Classification::kBoundarySeparable);
    CHECK(boundary.concurrence == 0.0);

    const LambdaReport super = lambda_report(thermal_state(2, 1.0).matrix);
    CHECK(super.classification == LambdaReport::Classification::kSuperSeparable);
    CHECK(super.concurrence == 0.0);
    CHECK(super.lambda < 0.0);
}

TEST_CASE("min_pt_eigenvalue") {
    SUBCASE("diagonal states stay positive under any cut") {
        const DensityMatrix rho = diagonal_state(0.1, 0.2, 0.3, 0.4);
        CHECK(min_pt_eigenvalue(rho, 0b01u) >= 0.0);
        CHECK(min_pt_eigenvalue(rho, 0b10u) >= 0.0);
    }

    SUBCASE("the singlet reaches -1/2") {
        CHECK(min_pt_eigenvalue(bell_state(BellSign::kMinus), 0b10u) ==
              doctest::Approx(-0.5).epsilon(1e-12));
    }

    SUBCASE("PPT holds after the entanglement has died") {
        const BathSpec bath(1.0, 1.0);
        // gamma^2 crossing is near 0.394, i.e. t ~ 0.31; probe well past it.
        const DensityMatrix late = evolve(bell_state(BellSign::kPlus), bath, 1.0);
        CHECK(min_pt_eigenvalue(late, 0b10u) >= -1e-10);
        CHECK(lambda_value(late) < 0.0);
    }

    SUBCASE("bipartition validation") {
        const DensityMatrix rho = sample_random_density(2, 2);
        CHECK_THROWS_AS(min_pt_eigenvalue(rho, 0b00u), InvalidBipartitionError);
        CHECK_THROWS_AS(min_pt_eigenvalue(rho, 0b11u), InvalidBipartitionError);
        CHECK_THROWS_AS(min_pt_eigenvalue(rho, 0b100u), InvalidBipartitionError);
    }
}

TEST_CASE("witness_from_state") {
    SUBCASE("singlet witness recovers the PT eigenvalue") {
        const Witness w = witness_from_state(bell_state(BellSign::kMinus));
        CHECK(w.target_expectation == doctest::Approx(-0.5).epsilon(1e-10));
        CHECK(hermiticity_defect(w.matrix) <= 1e-12);
    }

    SUBCASE("non-negative on sampled product states") {
        const Witness w = witness_from_state(bell_state(BellSign::kPlus));
        double lowest = 1.0;
        for (unsigned rep = 0; rep < 10000; ++rep) {
            const DensityMatrix sigma = sample_random_product_state(2, 7000u + rep);
            lowest = std::min(lowest, (w.matrix * sigma.matrix()).trace().real());
        }
        CHECK(lowest >= -1e-12);
    }

    SUBCASE("separable states are refused") {
        CHECK_THROWS_AS(witness_from_state(thermal_state(2, 1.0).matrix), NotEntangledError);
    }

    SUBCASE("witness expectation is linear in the state") {
        const Witness w = witness_from_state(bell_state(BellSign::kMinus));
        const DensityMatrix rho1 = sample_random_density(2, 81);
        const DensityMatrix rho2 = sample_random_density(2, 82);
        const double alpha = 0.3;
        const Cmat mix = alpha * rho1.matrix() + (1.0 - alpha) * rho2.matrix();
        const double mixed = (w.matrix * mix).trace().real();
        const double split = alpha * (w.matrix * rho1.matrix()).trace().real() +
                             (1.0 - alpha) * (w.matrix * rho2.matrix()).trace().real();
        CHECK(std::abs(mixed - split) <= 1e-12);
    }
}

TEST_CASE("proof_probe") {
    SUBCASE("sigma_x (x) sigma_x is found quickly") {
        const Cmat w = tensor_product(pauli_x(), pauli_x());
        const ProofProbeResult result = proof_probe(w, 10000, 19);
        CHECK(std::abs(result.trace_value) > 1e-6);
        CHECK(std::abs(result.complement_trace + result.trace_value) <= 1e-10);

        // The aligned eigenprojector gives the extremal overlap 1.
        Cvec xplus(2);
        xplus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
        const Cmat aligned = tensor_product(xplus * xplus.adjoint(), xplus * xplus.adjoint());
        CHECK((w * aligned).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("random zero-diagonal perturbations are found") {
        Rng rng(33);
        for (int rep = 0; rep < 5; ++rep) {
            Cmat w = Cmat::Zero(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = r + 1; c < 4; ++c) {
                    const Complex z{rng.normal(), rng.normal()};
                    w(r, c) = 1e-3 * z;
                    w(c, r) = 1e-3 * std::conj(z);
                }
            const ProofProbeResult result = proof_probe(w, 10000, 100u + static_cast<unsigned>(rep));
            CHECK(std::abs(result.trace_value) > 1e-6);
            CHECK(std::abs(result.complement_trace + result.trace_value) <= 1e-10);
        }
    }

    SUBCASE("exhaustion reports the best overlap") {
        const Cmat w = tensor_product(pauli_x(), pauli_x());
        CHECK_THROWS_AS(proof_probe(w, 0, 1), SearchExhaustedError);
        try {
            proof_probe(1e-9 * w, 50, 1);
            FAIL("expected SearchExhaustedError");
        } catch (const SearchExhaustedError& e) {
            CHECK(e.best_abs_trace < 1e-6);
            CHECK(e.best_abs_trace > 0.0);
        }
    }

    SUBCASE("input validation") {
        CHECK_THROWS_AS(proof_probe(Cmat::Identity(4, 4), 10, 1), Error);
        CHECK_THROWS_AS(proof_probe(Cmat::Zero(4, 4), 10, 1), Error);
        Cmat not_herm = Cmat::Zero(4, 4);
        not_herm(0, 1) = 1.0;
        CHECK_THROWS_AS(proof_probe(not_herm, 10, 1), NotHermitianError);
    }
}

TEST_CASE("Peres and Wootters agree on random states") {
    int checked = 0;
    for (unsigned rep = 0; rep < 2000; ++rep) {
        const DensityMatrix rho = sample_random_density(2, 20000u + rep);
        const double lambda = lambda_value(rho);
        if (std::abs(lambda) <= 1e-9) continue;  // boundary ties excluded
        ++checked;
        const double pt = min_pt_eigenvalue(rho, 0b10u);
        if (lambda > 1e-9)
            CHECK(pt < -1e-9);
        else
            CHECK(pt >= -1e-9);
    }
    CHECK(checked > 1900);
}

TEST_CASE("lambda is invariant under local unitaries") {
    Rng rng(55);
    for (unsigned rep = 0; rep < 20; ++rep) {
        const DensityMatrix rho = sample_random_density(2, 30000u + rep);
        const Cmat u = tensor_product(test::random_unitary_2x2(rng),
                                      test::random_unitary_2x2(rng));
        const Cmat rotated = u * rho.matrix() * u.adjoint();
        const DensityMatrix sigma = DensityMatrix::unchecked(2, rotated);
        CHECK(std::abs(lambda_value(rho) - lambda_value(sigma)) <= 1e-10);
    }
}

TEST_CASE("sampled product states have exactly zero concurrence") {
    for (unsigned rep = 0; rep < 200; ++rep) {
        const LambdaReport report =
            lambda_report(sample_random_product_state(2, 40000u + rep));
        CHECK(report.concurrence == 0.0);
    }
}
