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

#include "warmq/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace warmq {

namespace {

constexpr double kPerturbPsdTol = 1e-12;
constexpr double kNptCertifyTol = 1e-10;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Proper nonempty qubit subsets with qubit 0 fixed on the untransposed
// side; the complementary cut has the same partial-transpose spectrum.
std::vector<std::uint32_t> bipartition_masks(int qubit_count) {
    std::vector<std::uint32_t> masks;
    const std::uint32_t top = std::uint32_t{1} << (qubit_count - 1);
    for (std::uint32_t mask = 1; mask < top; ++mask) masks.push_back(mask << 1);
    return masks;
}

// Most negative partial-transpose eigenvalue over all cuts.
double min_pt_over_cuts(const Cmat& state, int qubit_count) {
    double lowest = kInf;
    for (std::uint32_t mask : bipartition_masks(qubit_count)) {
        const Cmat pt = partial_transpose_mask(state, qubit_count, mask);
        Eigen::SelfAdjointEigenSolver<Cmat> es(pt, Eigen::EigenvaluesOnly);
        lowest = std::min(lowest, es.eigenvalues().minCoeff());
    }
    return lowest;
}

double min_eigenvalue(const Cmat& a) {
    Eigen::SelfAdjointEigenSolver<Cmat> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

Cmat ray_state(const DiagonalTarget& target, const Cmat& direction, double epsilon) {
    Cmat m = epsilon * direction;
    m.diagonal() += target.diagonal().cast<Complex>();
    return m;
}

bool ray_valid(const DiagonalTarget& target, const Cmat& direction, double epsilon) {
    return min_eigenvalue(ray_state(target, direction, epsilon)) >= -kPerturbPsdTol;
}

bool ray_npt(const DiagonalTarget& target, const Cmat& direction, double epsilon) {
    if (!ray_valid(target, direction, epsilon)) return false;
    return min_pt_over_cuts(ray_state(target, direction, epsilon),
                            target.qubit_count()) < -kNptCertifyTol;
}

Cmat normalize_direction(Cmat d) {
    d = 0.5 * (d + d.adjoint().eval());
    d.diagonal().array() -= d.trace() / static_cast<double>(d.rows());
    const double norm = d.norm();
    if (norm <= 0.0) return d;
    return d / norm;
}

// Mixing direction from the target toward another state.
Cmat direction_toward(const DiagonalTarget& target, const Cmat& state) {
    Cmat d = state;
    d.diagonal() -= target.diagonal().cast<Complex>();
    return normalize_direction(std::move(d));
}

Cmat random_pure_state_matrix(int dim, Rng& rng) {
    Cvec psi(dim);
    for (int i = 0; i < dim; ++i) psi(i) = Complex{rng.normal(), rng.normal()};
    psi.normalize();
    return psi * psi.adjoint();
}

// One hill-climbing run: random tangent kicks, kept when the onset radius
// shrinks; the kick size halves after repeated failures.
double climb(const DiagonalTarget& target, Cmat direction, Rng& rng, int steps) {
    double best = npt_onset_along(target, direction);
    double kick = 0.3;
    int failures = 0;
    const int dim = static_cast<int>(direction.rows());
    for (int i = 0; i < steps; ++i) {
        Cmat candidate = normalize_direction(direction + kick * sample_direction(dim, rng));
        const double onset = npt_onset_along(target, candidate);
        if (onset < best) {
            best = onset;
            direction = std::move(candidate);
            failures = 0;
        } else if (++failures >= 4) {
            kick = std::max(0.01, 0.5 * kick);
            failures = 0;
        }
    }
    return best;
}

}  // namespace

DiagonalTarget::DiagonalTarget(int qubit_count, Eigen::VectorXd diagonal)
    : qubit_count_(qubit_count), diagonal_(std::move(diagonal)) {
    if (qubit_count_ < 1)
        throw WrongDimensionError("DiagonalTarget: qubit count must be >= 1");
    const Eigen::Index dim = Eigen::Index{1} << qubit_count_;
    if (diagonal_.size() != dim)
        throw WrongDimensionError("DiagonalTarget: diagonal length must be 2^M");
    for (Eigen::Index i = 0; i < dim; ++i)
        if (!(diagonal_(i) >= 0.0) || !std::isfinite(diagonal_(i)))
            throw Error("DiagonalTarget: entries must be finite and >= 0");
    if (std::abs(diagonal_.sum() - 1.0) > 1e-9)
        throw Error("DiagonalTarget: entries must sum to 1");
    diagonal_ /= diagonal_.sum();
    positive_ = diagonal_.minCoeff() > 0.0;
}

DensityMatrix DiagonalTarget::state() const {
    Cmat m = Cmat::Zero(diagonal_.size(), diagonal_.size());
    m.diagonal() = diagonal_.cast<Complex>();
    return DensityMatrix::unchecked(qubit_count_, std::move(m));
}

std::optional<DensityMatrix> perturb(const DiagonalTarget& target, const Cmat& direction,
                                     double epsilon) {
    if (!(epsilon >= 0.0))
        throw Error("perturb: epsilon must be >= 0");
    const Eigen::Index dim = Eigen::Index{1} << target.qubit_count();
    if (direction.rows() != dim || direction.cols() != dim)
        throw WrongDimensionError("perturb: direction dimension mismatch");
    if (hermiticity_defect(direction) > kHermitianTol)
        throw NotHermitianError("perturb: direction must be Hermitian");
    if (std::abs(direction.trace()) > kHermitianTol)
        throw Error("perturb: direction must be traceless");
    if (std::abs(direction.norm() - 1.0) > kHermitianTol)
        throw Error("perturb: direction must have unit Frobenius norm");

    Cmat m = ray_state(target, direction, epsilon);
    if (min_eigenvalue(m) < -kPerturbPsdTol) return std::nullopt;
    return DensityMatrix::unchecked(target.qubit_count(), std::move(m));
}

Cmat sample_direction(int dim, Rng& rng) {
    Cmat d(dim, dim);
    for (int r = 0; r < dim; ++r) {
        d(r, r) = Complex{rng.normal(), 0.0};
        for (int c = r + 1; c < dim; ++c) {
            // Off-diagonal pairs scaled so the Frobenius-sphere density is
            // rotation invariant (GUE weighting).
            const Complex z{rng.normal() / std::sqrt(2.0), rng.normal() / std::sqrt(2.0)};
            d(r, c) = z;
            d(c, r) = std::conj(z);
        }
    }
    return normalize_direction(std::move(d));
}

double npt_onset_along(const DiagonalTarget& target, const Cmat& direction) {
    // Validity along the ray is an interval [0, eps_psd] (the smallest
    // eigenvalue is concave in epsilon), and within it the NPT set is a
    // single interval ending at eps_psd for the same reason. Doubling plus
    // bisection on each predicate is therefore exact.
    constexpr double kSeed = 1e-9;
    constexpr double kCap = 8.0;
    if (!ray_valid(target, direction, kSeed)) return kInf;
    double lo = kSeed, hi = 2.0 * kSeed;
    while (hi <= kCap && ray_valid(target, direction, hi)) {
        lo = hi;
        hi *= 2.0;
    }
    // eps_psd in [lo, hi); shrink until the valid endpoint is sharp.
    while (hi - lo > 1e-12 + 1e-9 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (ray_valid(target, direction, mid))
            lo = mid;
        else
            hi = mid;
    }
    const double eps_psd = lo;
    if (!ray_npt(target, direction, eps_psd)) return kInf;

    double npt_hi = eps_psd;
    double npt_lo = 0.0;
    while (npt_hi - npt_lo > 1e-8) {
        const double mid = 0.5 * (npt_lo + npt_hi);
        if (ray_npt(target, direction, mid))
            npt_hi = mid;
        else
            npt_lo = mid;
    }
    return npt_hi;
}

NeighborhoodReport random_scan(const DiagonalTarget& target, double epsilon,
                               long n_samples, std::uint64_t rng_seed) {
    if (n_samples < 1)
        throw Error("random_scan: n_samples must be >= 1");
    const int dim = static_cast<int>(Eigen::Index{1} << target.qubit_count());
    NeighborhoodReport report;
    report.epsilon = epsilon;
    report.samples = n_samples;
    for (long i = 0; i < n_samples; ++i) {
        Rng rng(split_seed(rng_seed, static_cast<std::uint64_t>(i)));
        const Cmat direction = sample_direction(dim, rng);
        const auto state = perturb(target, direction, epsilon);
        if (!state) continue;
        const double lowest = min_pt_over_cuts(state->matrix(), target.qubit_count());
        if (lowest < -kNptCertifyTol) {
            ++report.npt_found;
            report.max_negativity = std::max(report.max_negativity, -lowest);
        }
    }
    report.boundary_estimate =
        directed_boundary(target, 16, split_seed(rng_seed, 0xb0bdu));
    return report;
}

double directed_boundary(const DiagonalTarget& target, int restarts,
                         std::uint64_t rng_seed) {
    if (restarts < 1)
        throw Error("directed_boundary: restarts must be >= 1");
    const int m = target.qubit_count();
    const int dim = static_cast<int>(Eigen::Index{1} << m);
    constexpr int kClimbSteps = 48;
    double best = kInf;

    // Fixed probes: mix toward each two-qubit Bell projector lifted to the
    // first two qubits. These catch the rank-deficient corner targets where
    // uniform directions are almost surely rejected.
    if (m >= 2) {
        const double inv = 1.0 / std::sqrt(2.0);
        for (int which = 0; which < 4; ++which) {
            Cvec pair = Cvec::Zero(4);
            if (which < 2) {  // (|+-> +- |-+>)/sqrt(2)
                pair(1) = inv;
                pair(2) = (which == 0) ? inv : -inv;
            } else {  // (|++> +- |-->)/sqrt(2)
                pair(0) = inv;
                pair(3) = (which == 2) ? inv : -inv;
            }
            Cmat probe = pair * pair.adjoint();
            for (int k = 2; k < m; ++k)
                probe = tensor_product(probe, 0.5 * Cmat::Identity(2, 2));
            Rng rng(split_seed(rng_seed, 0x500u + static_cast<std::uint64_t>(which)));
            best = std::min(best, climb(target, direction_toward(target, probe), rng,
                                        kClimbSteps));
        }
    }

    for (int r = 0; r < restarts; ++r) {
        Rng rng(split_seed(rng_seed, 0x1000u + static_cast<std::uint64_t>(r)));
        Cmat start;
        switch (r % 3) {
            case 0: start = sample_direction(dim, rng); break;
            case 1: start = direction_toward(target, random_pure_state_matrix(dim, rng)); break;
            default: {
                Cmat g(dim, dim);
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j) g(i, j) = Complex{rng.normal(), rng.normal()};
                Cmat sigma = g * g.adjoint();
                sigma /= sigma.trace().real();
                start = direction_toward(target, sigma);
                break;
            }
        }
        best = std::min(best, climb(target, std::move(start), rng, kClimbSteps));
    }
    return best;
}

}  // namespace warmq
