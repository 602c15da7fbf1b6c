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

#include "warmq/thermal_channel.hpp"

#include <cmath>
#include <string>

namespace warmq {

BathSpec::BathSpec(double gamma_rate_, double nbar_)
    : gamma_rate(gamma_rate_), nbar(nbar_) {
    if (!(gamma_rate > 0.0) || !std::isfinite(gamma_rate))
        throw Error("BathSpec: gamma_rate must be positive and finite");
    if (!(nbar >= 0.0) || !std::isfinite(nbar))
        throw Error("BathSpec: nbar must be >= 0 and finite");
}

ChannelCoefficients::ChannelCoefficients(double gamma_t_, double omega_t_)
    : gamma_t(gamma_t_), omega_t(omega_t_) {
    // gamma is strictly positive and omega strictly below 1 for any finite
    // time; the closed endpoints are admitted because sqrt(1 - gamma^2)
    // rounds to 1.0 once gamma^2 drops below the double-precision ulp.
    if (!(gamma_t >= 0.0 && gamma_t <= 1.0))
        throw Error("ChannelCoefficients: gamma_t must lie in [0, 1]");
    if (!(omega_t >= 0.0 && omega_t <= 1.0))
        throw Error("ChannelCoefficients: omega_t must lie in [0, 1]");
    if (std::abs(gamma_t * gamma_t + omega_t * omega_t - 1.0) > kHermitianTol)
        throw Error("ChannelCoefficients: gamma^2 + omega^2 must equal 1");
}

double KrausQuartet::completeness_defect() const {
    Cmat sum = k1.adjoint() * k1 + k2.adjoint() * k2 + k3.adjoint() * k3 +
               k4.adjoint() * k4;
    return max_abs_diff(sum, Cmat::Identity(2, 2));
}

double nbar_from_temperature(double omega, double kT) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw InvalidFrequencyError("nbar_from_temperature: omega must be > 0");
    if (!(kT >= 0.0))
        throw Error("nbar_from_temperature: kT must be >= 0");
    if (kT == 0.0) return 0.0;
    return 1.0 / std::expm1(omega / kT);
}

ChannelCoefficients coefficients(const BathSpec& bath, double t) {
    if (!(t >= 0.0))
        throw NegativeTimeError("coefficients: t must be >= 0, got " + std::to_string(t));
    const double gamma_t = std::exp(-0.5 * bath.total_rate() * t);
    const double omega_t = std::sqrt(std::max(0.0, 1.0 - gamma_t * gamma_t));
    return ChannelCoefficients(gamma_t, omega_t);
}

KrausQuartet kraus_quartet(double nbar, const ChannelCoefficients& coeff) {
    const double emit = std::sqrt((nbar + 1.0) / (2.0 * nbar + 1.0));
    const double absorb = std::sqrt(nbar / (2.0 * nbar + 1.0));
    KrausQuartet q;
    q.k1 = Cmat::Zero(2, 2);
    q.k1(0, 0) = emit * coeff.gamma_t;
    q.k1(1, 1) = emit;
    q.k2 = Cmat::Zero(2, 2);
    q.k2(1, 0) = emit * coeff.omega_t;
    q.k3 = Cmat::Zero(2, 2);
    q.k3(0, 0) = absorb;
    q.k3(1, 1) = absorb * coeff.gamma_t;
    q.k4 = Cmat::Zero(2, 2);
    q.k4(0, 1) = absorb * coeff.omega_t;
    return q;
}

DensityMatrix apply_to_qubit(const DensityMatrix& rho, int qubit_index,
                             const KrausQuartet& q) {
    Cmat out = apply_qubit_kraus(rho.matrix(), rho.qubit_count(), qubit_index,
                                 q.as_list());
    // CPTP output: re-Hermitize roundoff and keep the cheap checks; the
    // spectrum check is left to the validating constructor in tests.
    out = 0.5 * (out + out.adjoint().eval());
    const double drift = std::abs(out.trace().real() - 1.0);
    if (drift > kTraceTol || !all_finite(out))
        throw NumericalIntegrityError("apply_to_qubit: trace drift " + std::to_string(drift));
    return DensityMatrix::unchecked(rho.qubit_count(), std::move(out));
}

DensityMatrix evolve(const DensityMatrix& rho0, const BathSpec& bath, double t) {
    if (!(t >= 0.0))
        throw NegativeTimeError("evolve: t must be >= 0");
    if (t == 0.0) return rho0;
    const KrausQuartet q = kraus_quartet(bath.nbar, coefficients(bath, t));
    DensityMatrix rho = rho0;
    for (int k = 0; k < rho0.qubit_count(); ++k) rho = apply_to_qubit(rho, k, q);
    return rho;
}

ThermalState thermal_state(int qubit_count, double nbar) {
    if (qubit_count < 1)
        throw WrongDimensionError("thermal_state: qubit count must be >= 1");
    if (!(nbar >= 0.0) || !std::isfinite(nbar))
        throw Error("thermal_state: nbar must be >= 0 and finite");
    const Eigen::Index dim = Eigen::Index{1} << qubit_count;
    // Each diagonal entry is a product of per-qubit weights (nbar for the
    // excited bit, nbar+1 for the ground bit) over a common power of
    // (2 nbar + 1). Accumulating numerator and denominator separately keeps
    // the two-qubit entries equal to the textbook expressions bit for bit.
    double denom = 1.0;
    for (int k = 0; k < qubit_count; ++k) denom *= 2.0 * nbar + 1.0;
    Cmat m = Cmat::Zero(dim, dim);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        double num = 1.0;
        for (int k = 0; k < qubit_count; ++k) {
            const bool ground = (idx >> (qubit_count - 1 - k)) & 1;
            num *= ground ? (nbar + 1.0) : nbar;
        }
        m(idx, idx) = num / denom;
    }
    return ThermalState{qubit_count, nbar, DensityMatrix::unchecked(qubit_count, std::move(m))};
}

}  // namespace warmq
