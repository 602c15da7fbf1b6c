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

#include "warmq/lindblad.hpp"

#include <cmath>
#include <string>

namespace warmq {

namespace {

// One thermal dissipator step on qubit k:
//   Gamma (nbar+1) [s- rho s+ - {|+><+|, rho}/2] +
//   Gamma  nbar    [s+ rho s- - {|-><-|, rho}/2]
// written with the single-qubit kernels so no lifted operators are formed.
Cmat thermal_dissipator(const Cmat& rho, int qubit_count, int qubit,
                        const BathSpec& bath) {
    const double down = bath.gamma_rate * (bath.nbar + 1.0);
    const double up = bath.gamma_rate * bath.nbar;
    Cmat out = down * conjugate_on_qubit(rho, qubit_count, qubit, sigma_minus());
    out -= 0.5 * down * anticommute_level_projector(rho, qubit_count, qubit, 0);
    if (up > 0.0) {
        out += up * conjugate_on_qubit(rho, qubit_count, qubit, sigma_plus());
        out -= 0.5 * up * anticommute_level_projector(rho, qubit_count, qubit, 1);
    }
    return out;
}

// -i [sum_k (w_k/2) sigma_z^(k), rho]; for diagonal H the commutator only
// multiplies each entry by the row/column energy difference.
Cmat hamiltonian_commutator(const Cmat& rho, int qubit_count,
                            const std::vector<double>& freqs) {
    const Eigen::Index dim = rho.rows();
    Eigen::VectorXd energy = Eigen::VectorXd::Zero(dim);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        double e = 0.0;
        for (int k = 0; k < qubit_count; ++k) {
            const bool ground = (idx >> (qubit_count - 1 - k)) & 1;
            e += 0.5 * freqs[static_cast<std::size_t>(k)] * (ground ? -1.0 : 1.0);
        }
        energy(idx) = e;
    }
    Cmat out(dim, dim);
    const Complex minus_i{0.0, -1.0};
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c)
            out(r, c) = minus_i * (energy(r) - energy(c)) * rho(r, c);
    return out;
}

}  // namespace

LindbladSpec::LindbladSpec(BathSpec bath_, std::vector<double> freqs)
    : bath(bath_), qubit_frequencies(std::move(freqs)) {
    for (double w : qubit_frequencies)
        if (!std::isfinite(w)) throw Error("LindbladSpec: frequencies must be finite");
}

StepControl::StepControl(double dt_, long max_steps_) : dt(dt_), max_steps(max_steps_) {
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw Error("StepControl: dt must be positive and finite");
    if (max_steps < 1) throw Error("StepControl: max_steps must be >= 1");
}

Cmat liouvillian_rhs(const DensityMatrix& rho, const LindbladSpec& spec) {
    const int m = rho.qubit_count();
    if (!spec.qubit_frequencies.empty() &&
        spec.qubit_frequencies.size() != static_cast<std::size_t>(m))
        throw WrongDimensionError("liouvillian_rhs: frequency list length must be M or 0");
    Cmat out = Cmat::Zero(rho.dim(), rho.dim());
    for (int k = 0; k < m; ++k)
        out += thermal_dissipator(rho.matrix(), m, k, spec.bath);
    if (!spec.qubit_frequencies.empty())
        out += hamiltonian_commutator(rho.matrix(), m, spec.qubit_frequencies);
    return out;
}

DensityMatrix integrate(const DensityMatrix& rho0, const LindbladSpec& spec, double t,
                        const StepControl& ctl, IntegrationStats* stats) {
    if (!(t >= 0.0)) throw NegativeTimeError("integrate: t must be >= 0");
    if (ctl.dt * spec.bath.total_rate() > 0.05 + 1e-15)
        throw Error("integrate: dt * Gamma (2 nbar + 1) must be <= 0.05");
    if (t == 0.0) {
        if (stats) *stats = IntegrationStats{};
        return rho0;
    }
    const double steps_needed = std::ceil(t / ctl.dt - 1e-12);
    if (steps_needed > static_cast<double>(ctl.max_steps))
        throw StepBudgetExceededError("integrate: needs " + std::to_string(steps_needed) +
                                      " steps, budget is " + std::to_string(ctl.max_steps));
    const long n = static_cast<long>(steps_needed);
    const double dt = t / static_cast<double>(n);

    const int m = rho0.qubit_count();
    auto rhs = [&](const Cmat& r) {
        return liouvillian_rhs(DensityMatrix::unchecked(m, r), spec);
    };

    IntegrationStats local;
    Cmat rho = rho0.matrix();
    for (long step = 0; step < n; ++step) {
        const Cmat k1 = rhs(rho);
        const Cmat k2 = rhs(rho + (0.5 * dt) * k1);
        const Cmat k3 = rhs(rho + (0.5 * dt) * k2);
        const Cmat k4 = rhs(rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        const double tr = rho.trace().real();
        local.max_trace_drift = std::max(local.max_trace_drift, std::abs(tr - 1.0));
        rho /= tr;
    }
    local.steps = n;
    if (stats) *stats = local;

    rho = 0.5 * (rho + rho.adjoint().eval());
    if (!all_finite(rho))
        throw NumericalIntegrityError("integrate: non-finite state");
    // Discretization can push the spectrum slightly negative; -1e-8 is the
    // documented floor for the integrator (tighter than this is the Kraus
    // channel's job).
    Eigen::SelfAdjointEigenSolver<Cmat> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw NumericalIntegrityError("integrate: spectrum below -1e-8");
    return DensityMatrix::unchecked(m, std::move(rho));
}

DeviationReport compare_to_kraus(const DensityMatrix& rho0, const BathSpec& bath,
                                 const std::vector<double>& t_grid,
                                 const StepControl& ctl) {
    LindbladSpec spec(bath);
    DeviationReport report;
    report.times.reserve(t_grid.size());
    report.deviations.reserve(t_grid.size());
    for (double t : t_grid) {
        const DensityMatrix via_master = integrate(rho0, spec, t, ctl);
        const DensityMatrix via_kraus = evolve(rho0, bath, t);
        const double dev = max_abs_diff(via_master.matrix(), via_kraus.matrix());
        report.times.push_back(t);
        report.deviations.push_back(dev);
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    return report;
}

}  // namespace warmq
