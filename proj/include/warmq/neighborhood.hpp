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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "warmq/densmat.hpp"
#include "warmq/rng.hpp"

namespace warmq {

/// Diagonal state the probe explores around: thermal, partially inverted,
/// or any other incoherent population vector. Entries must be >= 0 and sum
/// to 1; strictly positive entries are the hypothesis under test, so
/// violations are admitted but flagged (see satisfies_positivity()).
class DiagonalTarget {
public:
    DiagonalTarget(int qubit_count, Eigen::VectorXd diagonal);

    int qubit_count() const { return qubit_count_; }
    const Eigen::VectorXd& diagonal() const { return diagonal_; }
    bool satisfies_positivity() const { return positive_; }

    DensityMatrix state() const;

private:
    int qubit_count_;
    Eigen::VectorXd diagonal_;
    bool positive_;
};

/// What a scan saw at radius epsilon, plus the directed boundary estimate.
/// For two qubits "NPT" is exactly "entangled"; for more qubits it is the
/// detectable-by-partial-transpose subset only.
struct NeighborhoodReport {
    double epsilon = 0.0;
    long samples = 0;
    long npt_found = 0;
    double max_negativity = 0.0;  // largest -min PT eigenvalue seen, clamped at 0
    double boundary_estimate = 0.0;
};

/// target + epsilon * direction when that is still a state (spectrum >=
/// -1e-12), std::nullopt otherwise. `direction` must be Hermitian,
/// traceless and unit Frobenius norm, all within 1e-12.
std::optional<DensityMatrix> perturb(const DiagonalTarget& target, const Cmat& direction,
                                     double epsilon);

/// Uniform random direction on the traceless Hermitian Frobenius sphere.
Cmat sample_direction(int dim, Rng& rng);

/// Scans n_samples uniform directions at fixed radius and counts perturbed
/// states with a negative partial transpose across any bipartition; the
/// boundary_estimate field is filled by a directed search seeded from the
/// same master seed. Deterministic for a fixed seed.
NeighborhoodReport random_scan(const DiagonalTarget& target, double epsilon,
                               long n_samples, std::uint64_t rng_seed);

/// Upper bound on the separable-neighborhood radius: per direction, the
/// first PSD-valid NPT radius is located by doubling plus bisection;
/// the minimum is taken over mixing directions toward the four Bell states
/// and `restarts` random directions, each refined by hill climbing.
/// Non-increasing in `restarts` for a fixed seed.
double directed_boundary(const DiagonalTarget& target, int restarts,
                         std::uint64_t rng_seed);

/// Onset radius along one ray (infinity if the ray never passes through an
/// NPT state while valid). Exposed for tests and the scan/boundary pair.
double npt_onset_along(const DiagonalTarget& target, const Cmat& direction);

}  // namespace warmq
