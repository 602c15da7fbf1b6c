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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "warmq/errors.hpp"

namespace warmq {

using Complex = std::complex<double>;
using Cmat = Eigen::MatrixXcd;
using Cvec = Eigen::VectorXcd;

// Qubit basis convention used throughout: index 0 is the excited level |+>,
// index 1 the ground level |->. For M qubits the basis index is read as a
// bit string with qubit 0 as the most significant bit, so the two-qubit
// order is |++>, |+->, |-+>, |-->.

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

/// sigma_x in the fixed basis.
Cmat pauli_x();
/// sigma_y in the fixed basis.
Cmat pauli_y();
/// sigma_z in the fixed basis (|+> is the +1 eigenstate).
Cmat pauli_z();
/// Lowering operator |-><+|.
Cmat sigma_minus();
/// Raising operator |+><-|.
Cmat sigma_plus();

/// Largest elementwise |a - a^dagger| entry.
double hermiticity_defect(const Cmat& a);

/// Largest elementwise |a - b| entry.
double max_abs_diff(const Cmat& a, const Cmat& b);

/// True iff every entry is finite.
bool all_finite(const Cmat& a);

/// Kronecker product; the left factor carries the slower (more significant)
/// index: (a (x) b)[i*db + k, j*db + l] = a[i,j] * b[k,l].
Cmat tensor_product(const Cmat& a, const Cmat& b);

/// Eigenvalues of a Hermitian matrix, sorted decreasing. Throws
/// NotHermitianError when the symmetry defect exceeds 1e-10.
std::vector<double> hermitian_eigenvalues(const Cmat& a);

/// Mixed state of `qubit_count` qubits. The checked constructor enforces
/// Hermiticity (1e-12), unit trace (1e-12) and spectrum >= -1e-10; the
/// unchecked factory skips the eigensolve for hot loops.
class DensityMatrix {
public:
    DensityMatrix(int qubit_count, Cmat matrix);

    static DensityMatrix unchecked(int qubit_count, Cmat matrix);

    int qubit_count() const { return qubit_count_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    const Cmat& matrix() const { return matrix_; }

    /// Re-runs the full invariant check (including the eigensolve).
    void validate() const;

private:
    DensityMatrix() = default;
    int qubit_count_ = 0;
    Cmat matrix_;
};

/// Rank-1 projector per qubit; the product projector of the witness probe.
class ProductProjector {
public:
    explicit ProductProjector(std::vector<Cmat> factors);

    const std::vector<Cmat>& factors() const { return factors_; }

    /// Full-register matrix, factors tensored left to right.
    Cmat to_matrix() const;

private:
    std::vector<Cmat> factors_;
};

/// Transposes the indices of one qubit. Diagonal states are fixed points;
/// applying twice restores the input exactly.
Cmat partial_transpose(const DensityMatrix& rho, int subsystem_index);

/// Partial transpose over a set of qubits given as a bit mask
/// (bit k set = transpose qubit k).
Cmat partial_transpose_mask(const Cmat& matrix, int qubit_count, std::uint32_t mask);

/// Hilbert-Schmidt-distributed random state: G G^dagger / tr for a square
/// complex Gaussian G. Deterministic for a fixed seed.
DensityMatrix sample_random_density(int qubit_count, std::uint64_t rng_seed);

/// Tensor product of independent Haar-random single-qubit pure states;
/// separable (in fact product) by construction.
DensityMatrix sample_random_product_state(int qubit_count, std::uint64_t rng_seed);

// --- single-qubit kernels -------------------------------------------------
// These act on one qubit of a 2^M x 2^M matrix in O(4^M) without forming
// the lifted 2^M x 2^M operator.

/// op^(k) * mat * op^(k)^dagger for a 2x2 op acting on qubit k.
Cmat conjugate_on_qubit(const Cmat& mat, int qubit_count, int qubit, const Cmat& op);

/// {P, mat} where P projects qubit k onto the given level (0 = excited).
Cmat anticommute_level_projector(const Cmat& mat, int qubit_count, int qubit, int level);

/// Accumulates sum_j op_j^(k) * mat * op_j^(k)^dagger over a list of 2x2 ops.
Cmat apply_qubit_kraus(const Cmat& mat, int qubit_count, int qubit,
                       const std::vector<Cmat>& ops);

}  // namespace warmq
