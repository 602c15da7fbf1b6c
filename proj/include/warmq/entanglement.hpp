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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "warmq/densmat.hpp"

namespace warmq {

/// Two-qubit entanglement summary. Lambda is kept signed: negative values
/// locate the state strictly inside the separable set ("super-separable"),
/// information the clamped concurrence discards.
struct LambdaReport {
    enum class Classification { kEntangled, kBoundarySeparable, kSuperSeparable };

    double lambda;       // in [-1, 1]
    double concurrence;  // max(0, lambda)
    Classification classification;

    static const char* classification_name(Classification c);
};

/// Hermitian operator detecting the entanglement of a specific state:
/// tr(W * target) < 0 while tr(W * sigma) >= 0 on separable sigma.
struct Witness {
    Cmat matrix;
    DensityMatrix target;
    double target_expectation;  // tr(W * target), < 0
};

/// Result of the randomized product-projector search: a projector with
/// nonzero overlap against the given traceless operator, plus the
/// complementary trace tr(W (I - P)) = -tr(W P).
struct ProofProbeResult {
    ProductProjector projector;
    double trace_value;
    double complement_trace;
    int trials_used;
};

/// Eigenvalues, sorted decreasing, of rho (sy (x) sy) rho^* (sy (x) sy)
/// with conjugation in the standard basis. Computed through the Hermitian
/// similarity sqrt(rho) * flipped * sqrt(rho) so the spectrum is real and
/// non-negative by construction. Dust in (-1e-10, 1e-12] is clamped to
/// zero (the square roots taken downstream would blow solver noise around
/// an exact zero up to ~1e-8); anything below -1e-10 raises
/// NumericalIntegrityError.
std::array<double, 4> spin_flip_spectrum(const DensityMatrix& rho);

/// sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4) over the spin-flip spectrum.
/// Positive iff the two-qubit state is entangled.
double lambda_value(const DensityMatrix& rho);

/// lambda, concurrence and the sign classification with the +-1e-12
/// boundary band.
LambdaReport lambda_report(const DensityMatrix& rho);

/// Minimum eigenvalue of the partial transpose over the given qubit subset
/// (bit k set = qubit k on the transposed side). Values below -1e-10
/// certify entanglement across the cut.
double min_pt_eigenvalue(const DensityMatrix& rho, std::uint32_t bipartition_mask);

/// Builds W = (|phi><phi|)^{T_B} from the most-negative eigenvector phi of
/// rho^{T_B}. Requires min_pt_eigenvalue(rho, {B}) < -1e-10, else throws
/// NotEntangledError.
Witness witness_from_state(const DensityMatrix& rho);

/// Searches random product projectors for one with |tr(W (P (x) Q))| > 1e-6.
/// W must be Hermitian with zero diagonal (|W_ii| <= 1e-12) and nonzero
/// norm. Throws SearchExhaustedError (carrying the best overlap found) after
/// `trials` failures.
ProofProbeResult proof_probe(const Cmat& w, int trials, std::uint64_t rng_seed);

}  // namespace warmq
