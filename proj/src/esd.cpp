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

#include "warmq/esd.hpp"

#include <cmath>

namespace warmq {

namespace {

// A crossing below this level is treated as a genuine sign change rather
// than eigensolver dust around lambda = 0.
constexpr double kCrossingTol = 1e-12;

double lambda_at(const DensityMatrix& rho0, const BathSpec& bath, double t) {
    return lambda_value(evolve(rho0, bath, t));
}

}  // namespace

DensityMatrix bell_state(BellSign sign) {
    Cvec psi = Cvec::Zero(4);
    const double s = (sign == BellSign::kPlus) ? 1.0 : -1.0;
    psi(1) = 1.0 / std::sqrt(2.0);   // |+->
    psi(2) = s / std::sqrt(2.0);     // |-+>
    return DensityMatrix(2, psi * psi.adjoint());
}

double bell_lambda_closed_form(double nbar, const ChannelCoefficients& coeff) {
    const double q = nbar / (2.0 * nbar + 1.0);
    const double g2 = coeff.gamma_t * coeff.gamma_t;
    const double w2 = coeff.omega_t * coeff.omega_t;
    const double u = w2 * q;
    const double v = g2 + w2 * q;
    return g2 - 2.0 * std::sqrt(u * v * (1.0 - u) * (1.0 - v));
}

double bell_lambda_reference_form(double nbar, const ChannelCoefficients& coeff) {
    const double den = (2.0 * nbar + 1.0) * (2.0 * nbar + 1.0);
    const double p1 = nbar * nbar / den;
    const double p2 = nbar * (nbar + 1.0) / den;
    const double p3 = p2;
    const double g2 = coeff.gamma_t * coeff.gamma_t;
    const double w2 = coeff.omega_t * coeff.omega_t;
    const double a = p2 * w2 + p3 * g2 * w2;
    const double d = p1 * w2 + p3 * g2 * w2;
    const double z = 0.5 * g2;
    return 2.0 * std::abs(z) - 2.0 * std::sqrt(a * d);
}

double bell_reference_form_bc_at_t0(double nbar) {
    const double den = (2.0 * nbar + 1.0) * (2.0 * nbar + 1.0);
    const double p1 = nbar * nbar / den;
    const double p2 = nbar * (nbar + 1.0) / den;
    const double p3 = p2;
    // b(0) = c(0) = p1 g^2 + p2 g^2 + p3 (g^4 + 1 + w^4) at g = 1, w = 0.
    return p1 + p2 + 2.0 * p3;
}

double tesd_reference_formula(double nbar, double gamma_rate) {
    if (!(gamma_rate > 0.0))
        throw Error("tesd_reference_formula: gamma_rate must be > 0");
    if (nbar <= 0.0)
        throw ZeroTemperatureError("tesd_reference_formula: diverges at nbar = 0");
    const double den = (2.0 * nbar + 1.0) * (2.0 * nbar + 1.0);
    const double p1 = nbar * nbar / den;
    const double p2 = nbar * (nbar + 1.0) / den;
    const double root = 2.0 * std::sqrt(p1 * p2);
    return std::log((1.0 + root) / root) / gamma_rate;
}

EsdResult numeric_tesd(const DensityMatrix& rho0, const BathSpec& bath, double tol) {
    if (rho0.qubit_count() != 2)
        throw WrongDimensionError("numeric_tesd: requires a two-qubit state");
    const double rate = bath.total_rate();
    if (tol <= 0.0) tol = 1e-10 / rate;
    const double lambda_inf = lambda_value(thermal_state(2, bath.nbar).matrix);

    EsdResult result;
    result.lambda_at_infinity = lambda_inf;
    result.already_separable = false;

    const double lambda0 = lambda_value(rho0);
    if (lambda0 <= 0.0) {
        result.kind = EsdResult::Kind::kFinite;
        result.t_esd = 0.0;
        result.already_separable = true;
        return result;
    }

    // Bracket by doubling until lambda is decisively negative.
    const double horizon = 100.0 / rate;
    double lo = 0.0;
    double hi = 1.0 / rate;
    bool bracketed = false;
    while (hi <= horizon) {
        const double value = lambda_at(rho0, bath, hi);
        if (value <= -kCrossingTol) {
            bracketed = true;
            break;
        }
        lo = hi;
        hi *= 2.0;
    }
    if (!bracketed) {
        if (lambda_inf >= -kCrossingTol) {
            result.kind = EsdResult::Kind::kAsymptotic;
            return result;
        }
        throw NumericalIntegrityError(
            "numeric_tesd: no crossing found within the horizon although the fixed "
            "point is super-separable");
    }

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (lambda_at(rho0, bath, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    result.kind = EsdResult::Kind::kFinite;
    result.t_esd = 0.5 * (lo + hi);
    return result;
}

std::vector<TrajectoryPoint> trajectory(const DensityMatrix& rho0, const BathSpec& bath,
                                        int n_points) {
    if (n_points < 2)
        throw Error("trajectory: need at least 2 points");
    constexpr double kOmegaEnd = 1.0 - 1e-3;
    std::vector<TrajectoryPoint> points;
    points.reserve(static_cast<std::size_t>(n_points));
    const double rate = bath.total_rate();
    for (int i = 0; i < n_points; ++i) {
        const double omega = kOmegaEnd * static_cast<double>(i) /
                             static_cast<double>(n_points - 1);
        const double t = (i == 0) ? 0.0 : -std::log1p(-omega * omega) / rate;
        const LambdaReport report = lambda_report(evolve(rho0, bath, t));
        points.push_back(TrajectoryPoint{t, omega, report.lambda, report.classification});
    }
    return points;
}

DensityMatrix mixed_state_family(double lambda0) {
    if (!(lambda0 > 0.0 && lambda0 < 1.0))
        throw Error("mixed_state_family: lambda0 must lie in (0, 1)");
    const double z = 0.5 * lambda0;
    const double a = 0.6 * (1.0 - lambda0);
    const double b = 0.5 * (1.0 - a);
    // Inner-block positivity needs b >= z, i.e. lambda0 <= (1 - a)...
    // with a = 0.6(1 - lambda0) this holds on all of (0, 1); finite-time
    // death at zero temperature additionally needs sqrt(a) > z, which
    // bounds lambda0 away from 1.
    if (std::sqrt(a) <= z)
        throw Error("mixed_state_family: lambda0 too large for zero-temperature death");
    Cmat m = Cmat::Zero(4, 4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = b;
    m(1, 2) = z;
    m(2, 1) = z;
    return DensityMatrix(2, std::move(m));
}

}  // namespace warmq
