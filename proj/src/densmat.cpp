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

#include "warmq/densmat.hpp"

#include <algorithm>
#include <cmath>

#include "warmq/rng.hpp"

namespace warmq {

namespace {

const Complex kI{0.0, 1.0};

Eigen::Index check_square(const Cmat& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw WrongDimensionError(std::string(who) + ": matrix must be square and nonempty");
    return a.rows();
}

// Bit mask selecting qubit k of an M-qubit basis index (qubit 0 = MSB).
Eigen::Index qubit_bit(int qubit_count, int qubit) {
    return Eigen::Index{1} << (qubit_count - 1 - qubit);
}

void check_qubit_index(int qubit_count, int qubit, const char* who) {
    if (qubit < 0 || qubit >= qubit_count)
        throw IndexOutOfRangeError(std::string(who) + ": qubit index " +
                                   std::to_string(qubit) + " out of range for " +
                                   std::to_string(qubit_count) + " qubits");
}

}  // namespace

Cmat pauli_x() {
    Cmat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Cmat pauli_y() {
    Cmat m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

Cmat pauli_z() {
    Cmat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Cmat sigma_minus() {
    Cmat m = Cmat::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

Cmat sigma_plus() {
    Cmat m = Cmat::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

double hermiticity_defect(const Cmat& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Cmat& a, const Cmat& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

bool all_finite(const Cmat& a) {
    return a.allFinite();
}

Cmat tensor_product(const Cmat& a, const Cmat& b) {
    const Eigen::Index da = a.rows(), db = b.rows();
    check_square(a, "tensor_product");
    check_square(b, "tensor_product");
    Cmat out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a(i, j) * b;
    return out;
}

std::vector<double> hermitian_eigenvalues(const Cmat& a) {
    check_square(a, "hermitian_eigenvalues");
    if (hermiticity_defect(a) > 1e-10)
        throw NotHermitianError("hermitian_eigenvalues: symmetry defect exceeds 1e-10");
    Eigen::SelfAdjointEigenSolver<Cmat> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> vals(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + a.rows());
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

DensityMatrix::DensityMatrix(int qubit_count, Cmat matrix) {
    qubit_count_ = qubit_count;
    matrix_ = std::move(matrix);
    validate();
}

DensityMatrix DensityMatrix::unchecked(int qubit_count, Cmat matrix) {
    DensityMatrix rho;
    rho.qubit_count_ = qubit_count;
    rho.matrix_ = std::move(matrix);
    return rho;
}

void DensityMatrix::validate() const {
    if (qubit_count_ < 1)
        throw WrongDimensionError("DensityMatrix: qubit count must be >= 1");
    const Eigen::Index dim = Eigen::Index{1} << qubit_count_;
    if (matrix_.rows() != dim || matrix_.cols() != dim)
        throw WrongDimensionError("DensityMatrix: matrix dimension does not match qubit count");
    if (!all_finite(matrix_))
        throw NumericalIntegrityError("DensityMatrix: non-finite entries");
    if (hermiticity_defect(matrix_) > kHermitianTol)
        throw NotHermitianError("DensityMatrix: Hermiticity defect exceeds 1e-12");
    if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > kTraceTol)
        throw NumericalIntegrityError("DensityMatrix: trace deviates from 1 beyond 1e-12");
    Eigen::SelfAdjointEigenSolver<Cmat> solver(matrix_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kPsdTol)
        throw NumericalIntegrityError("DensityMatrix: eigenvalue below -1e-10");
}

ProductProjector::ProductProjector(std::vector<Cmat> factors) : factors_(std::move(factors)) {
    if (factors_.empty())
        throw WrongDimensionError("ProductProjector: needs at least one factor");
    for (const Cmat& p : factors_) {
        if (p.rows() != 2 || p.cols() != 2)
            throw WrongDimensionError("ProductProjector: factors must be 2x2");
        if (hermiticity_defect(p) > kHermitianTol)
            throw NotHermitianError("ProductProjector: factor not Hermitian");
        if (max_abs_diff(p * p, p) > kHermitianTol)
            throw NumericalIntegrityError("ProductProjector: factor not idempotent");
    }
}

Cmat ProductProjector::to_matrix() const {
    Cmat out = factors_.front();
    for (std::size_t k = 1; k < factors_.size(); ++k)
        out = tensor_product(out, factors_[k]);
    return out;
}

Cmat partial_transpose(const DensityMatrix& rho, int subsystem_index) {
    check_qubit_index(rho.qubit_count(), subsystem_index, "partial_transpose");
    return partial_transpose_mask(rho.matrix(), rho.qubit_count(),
                                  std::uint32_t{1} << subsystem_index);
}

Cmat partial_transpose_mask(const Cmat& matrix, int qubit_count, std::uint32_t mask) {
    const Eigen::Index dim = check_square(matrix, "partial_transpose");
    if (dim != (Eigen::Index{1} << qubit_count))
        throw WrongDimensionError("partial_transpose: dimension/qubit count mismatch");
    // Index-bit mask of the transposed qubits.
    Eigen::Index bits = 0;
    for (int k = 0; k < qubit_count; ++k)
        if (mask & (std::uint32_t{1} << k)) bits |= qubit_bit(qubit_count, k);
    Cmat out(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            // Swap the selected bits between row and column index.
            const Eigen::Index r2 = (r & ~bits) | (c & bits);
            const Eigen::Index c2 = (c & ~bits) | (r & bits);
            out(r2, c2) = matrix(r, c);
        }
    }
    return out;
}

DensityMatrix sample_random_density(int qubit_count, std::uint64_t rng_seed) {
    if (qubit_count < 1)
        throw WrongDimensionError("sample_random_density: qubit count must be >= 1");
    const Eigen::Index dim = Eigen::Index{1} << qubit_count;
    Rng rng(rng_seed);
    Cmat g(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c)
            g(r, c) = Complex{rng.normal(), rng.normal()};
    Cmat rho = g * g.adjoint();
    rho = 0.5 * (rho + rho.adjoint().eval());  // scrub roundoff asymmetry
    rho /= rho.trace().real();
    return DensityMatrix::unchecked(qubit_count, std::move(rho));
}

DensityMatrix sample_random_product_state(int qubit_count, std::uint64_t rng_seed) {
    if (qubit_count < 1)
        throw WrongDimensionError("sample_random_product_state: qubit count must be >= 1");
    Rng rng(rng_seed);
    Cmat rho(1, 1);
    rho(0, 0) = 1.0;
    for (int k = 0; k < qubit_count; ++k) {
        Cvec psi(2);
        psi << Complex{rng.normal(), rng.normal()}, Complex{rng.normal(), rng.normal()};
        psi.normalize();
        rho = tensor_product(rho, psi * psi.adjoint());
    }
    rho = 0.5 * (rho + rho.adjoint().eval());
    rho /= rho.trace().real();
    return DensityMatrix::unchecked(qubit_count, std::move(rho));
}

Cmat conjugate_on_qubit(const Cmat& mat, int qubit_count, int qubit, const Cmat& op) {
    const Eigen::Index dim = check_square(mat, "conjugate_on_qubit");
    check_qubit_index(qubit_count, qubit, "conjugate_on_qubit");
    if (op.rows() != 2 || op.cols() != 2)
        throw WrongDimensionError("conjugate_on_qubit: op must be 2x2");
    const Eigen::Index m = qubit_bit(qubit_count, qubit);
    const Complex a00 = op(0, 0), a01 = op(0, 1), a10 = op(1, 0), a11 = op(1, 1);
    const Complex b00 = std::conj(a00), b01 = std::conj(a01);
    const Complex b10 = std::conj(a10), b11 = std::conj(a11);
    Cmat out(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        if (r & m) continue;
        const Eigen::Index r1 = r | m;
        for (Eigen::Index c = 0; c < dim; ++c) {
            if (c & m) continue;
            const Eigen::Index c1 = c | m;
            const Complex g00 = mat(r, c), g01 = mat(r, c1);
            const Complex g10 = mat(r1, c), g11 = mat(r1, c1);
            // op * G on the row pair
            const Complex t00 = a00 * g00 + a01 * g10;
            const Complex t01 = a00 * g01 + a01 * g11;
            const Complex t10 = a10 * g00 + a11 * g10;
            const Complex t11 = a10 * g01 + a11 * g11;
            // (op * G) * op^dagger on the column pair
            out(r, c) = t00 * b00 + t01 * b01;
            out(r, c1) = t00 * b10 + t01 * b11;
            out(r1, c) = t10 * b00 + t11 * b01;
            out(r1, c1) = t10 * b10 + t11 * b11;
        }
    }
    return out;
}

Cmat anticommute_level_projector(const Cmat& mat, int qubit_count, int qubit, int level) {
    const Eigen::Index dim = check_square(mat, "anticommute_level_projector");
    check_qubit_index(qubit_count, qubit, "anticommute_level_projector");
    const Eigen::Index m = qubit_bit(qubit_count, qubit);
    const Eigen::Index want = (level == 0) ? 0 : m;
    Cmat out(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const double row_in = ((r & m) == want) ? 1.0 : 0.0;
        for (Eigen::Index c = 0; c < dim; ++c) {
            const double col_in = ((c & m) == want) ? 1.0 : 0.0;
            out(r, c) = (row_in + col_in) * mat(r, c);
        }
    }
    return out;
}

Cmat apply_qubit_kraus(const Cmat& mat, int qubit_count, int qubit,
                       const std::vector<Cmat>& ops) {
    Cmat out = Cmat::Zero(mat.rows(), mat.cols());
    for (const Cmat& op : ops)
        out += conjugate_on_qubit(mat, qubit_count, qubit, op);
    return out;
}

}  // namespace warmq
