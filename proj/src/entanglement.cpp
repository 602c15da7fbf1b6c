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

#include "warmq/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "warmq/rng.hpp"

namespace warmq {

namespace {

constexpr double kDustTol = 1e-10;
constexpr double kSpectrumDustClamp = 1e-12;
constexpr double kBoundaryBand = 1e-12;

void require_two_qubits(const DensityMatrix& rho, const char* who) {
    if (rho.qubit_count() != 2)
        throw WrongDimensionError(std::string(who) + ": requires a two-qubit state");
}

// Hermitian square root with dust clamping; input spectrum must respect the
// density-matrix floor of -1e-10.
Cmat psd_sqrt(const Cmat& a, const char* who) {
    Eigen::SelfAdjointEigenSolver<Cmat> es(a);
    Eigen::VectorXd vals = es.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) < -kDustTol)
            throw NumericalIntegrityError(std::string(who) +
                                          ": eigenvalue below the -1e-10 dust tolerance");
        vals(i) = std::sqrt(std::max(0.0, vals(i)));
    }
    return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

Cmat spin_flip_operator() {
    return tensor_product(pauli_y(), pauli_y());
}

// Haar-random single-qubit rank-1 projector.
Cmat random_qubit_projector(Rng& rng) {
    Cvec psi(2);
    psi << Complex{rng.normal(), rng.normal()}, Complex{rng.normal(), rng.normal()};
    psi.normalize();
    return psi * psi.adjoint();
}

}  // namespace

const char* LambdaReport::classification_name(Classification c) {
    switch (c) {
        case Classification::kEntangled: return "entangled";
        case Classification::kBoundarySeparable: return "boundary-separable";
        case Classification::kSuperSeparable: return "super-separable";
    }
    return "unknown";
}

std::array<double, 4> spin_flip_spectrum(const DensityMatrix& rho) {
    require_two_qubits(rho, "spin_flip_spectrum");
    const Cmat flip = spin_flip_operator();
    const Cmat flipped = flip * rho.matrix().conjugate() * flip;
    // zeta = rho * flipped has the spectrum of the Hermitian PSD matrix
    // sqrt(rho) * flipped * sqrt(rho); solving the latter keeps the
    // eigenvalues real without a general (non-symmetric) eigensolver.
    const Cmat root = psd_sqrt(rho.matrix(), "spin_flip_spectrum");
    Cmat zeta_sym = root * flipped * root;
    zeta_sym = 0.5 * (zeta_sym + zeta_sym.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Cmat> es(zeta_sym, Eigen::EigenvaluesOnly);
    std::array<double, 4> vals{};
    for (int i = 0; i < 4; ++i) {
        double v = es.eigenvalues()(i);
        if (v < -kDustTol)
            throw NumericalIntegrityError(
                "spin_flip_spectrum: eigenvalue below the -1e-10 dust tolerance");
        // Clamp dust of either sign: the square roots downstream would
        // amplify solver noise around an exact zero to the 1e-8 scale.
        vals[static_cast<std::size_t>(i)] = (v <= kSpectrumDustClamp) ? 0.0 : v;
    }
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

double lambda_value(const DensityMatrix& rho) {
    const auto vals = spin_flip_spectrum(rho);
    return std::sqrt(vals[0]) - std::sqrt(vals[1]) - std::sqrt(vals[2]) -
           std::sqrt(vals[3]);
}

LambdaReport lambda_report(const DensityMatrix& rho) {
    const double lambda = lambda_value(rho);
    LambdaReport report;
    report.lambda = lambda;
    report.concurrence = std::max(0.0, lambda);
    if (std::abs(lambda) <= kBoundaryBand)
        report.classification = LambdaReport::Classification::kBoundarySeparable;
    else if (lambda > 0.0)
        report.classification = LambdaReport::Classification::kEntangled;
    else
        report.classification = LambdaReport::Classification::kSuperSeparable;
    return report;
}

double min_pt_eigenvalue(const DensityMatrix& rho, std::uint32_t bipartition_mask) {
    const std::uint32_t all = (std::uint32_t{1} << rho.qubit_count()) - 1;
    if (bipartition_mask == 0 || (bipartition_mask & ~all) != 0 || bipartition_mask == all)
        throw InvalidBipartitionError("min_pt_eigenvalue: bipartition must be a proper "
                                      "nonempty subset of the qubits");
    const Cmat pt = partial_transpose_mask(rho.matrix(), rho.qubit_count(), bipartition_mask);
    Eigen::SelfAdjointEigenSolver<Cmat> es(pt, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

Witness witness_from_state(const DensityMatrix& rho) {
    require_two_qubits(rho, "witness_from_state");
    const Cmat pt = partial_transpose_mask(rho.matrix(), 2, 0b10u);
    Eigen::SelfAdjointEigenSolver<Cmat> es(pt);
    Eigen::Index which = 0;
    es.eigenvalues().minCoeff(&which);
    const double lambda_min = es.eigenvalues()(which);
    if (lambda_min >= -kDustTol)
        throw NotEntangledError("witness_from_state: state has no negative partial "
                                "transpose eigenvalue");
    const Cvec phi = es.eigenvectors().col(which);
    Cmat w = partial_transpose_mask(phi * phi.adjoint(), 2, 0b10u);
    w = 0.5 * (w + w.adjoint().eval());
    const double expectation = (w * rho.matrix()).trace().real();
    return Witness{std::move(w), rho, expectation};
}

ProofProbeResult proof_probe(const Cmat& w, int trials, std::uint64_t rng_seed) {
    if (w.rows() != 4 || w.cols() != 4)
        throw WrongDimensionError("proof_probe: W must be 4x4");
    if (hermiticity_defect(w) > kHermitianTol)
        throw NotHermitianError("proof_probe: W must be Hermitian");
    for (Eigen::Index i = 0; i < 4; ++i)
        if (std::abs(w(i, i)) > kHermitianTol)
            throw Error("proof_probe: W must have zero diagonal");
    if (w.norm() <= 0.0)
        throw Error("proof_probe: W must be nonzero");

    Rng rng(rng_seed);
    double best = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        Cmat p = random_qubit_projector(rng);
        Cmat q = random_qubit_projector(rng);
        const Cmat pq = tensor_product(p, q);
        const double value = (w * pq).trace().real();
        best = std::max(best, std::abs(value));
        if (std::abs(value) > 1e-6) {
            const double complement =
                (w * (Cmat::Identity(4, 4) - pq)).trace().real();
            return ProofProbeResult{ProductProjector({std::move(p), std::move(q)}),
                                    value, complement, trial + 1};
        }
    }
    throw SearchExhaustedError("proof_probe: no product projector with overlap above "
                               "1e-6 in " + std::to_string(trials) + " trials",
                               best);
}

}  // namespace warmq
