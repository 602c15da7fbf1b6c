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

#include <optional>
#include <vector>

#include "warmq/densmat.hpp"
#include "warmq/entanglement.hpp"
#include "warmq/thermal_channel.hpp"

namespace warmq {

enum class BellSign { kPlus, kMinus };

/// One sample of a disentanglement trajectory, parametrized by omega(t) so
/// the whole of t in [0, inf) maps to omega in [0, 1).
struct TrajectoryPoint {
    double t;
    double omega_t;
    double lambda;
    LambdaReport::Classification classification;
};

/// Outcome of the numeric disentanglement-time search.
struct EsdResult {
    enum class Kind { kFinite, kAsymptotic };

    Kind kind;
    std::optional<double> t_esd;  // present iff kind == kFinite
    double lambda_at_infinity;    // lambda of the thermal fixed point
    bool already_separable;       // input had lambda <= 0; t_esd = 0 by convention
};

/// (|+-> +- |-+>)/sqrt(2) as a two-qubit density matrix.
DensityMatrix bell_state(BellSign sign);

/// Lambda of a channel-evolved Bell state in closed form. Derived from the
/// factorized channel: with q = nbar/(2 nbar + 1), u = omega^2 q and
/// v = gamma^2 + omega^2 q, the populations are (uv, b, b, (1-u)(1-v)) with
/// b = [u(1-v) + v(1-u)]/2, the central coherence gamma^2 / 2, and
/// Lambda = gamma^2 - 2 sqrt(uv(1-u)(1-v)). Verified elementwise against
/// evolve() in the test suite.
double bell_lambda_closed_form(double nbar, const ChannelCoefficients& coeff);

/// A published variant of the evolved-Bell matrix elements, retained only
/// for side-by-side reporting: its trace differs from 1 at t = 0 for
/// generic nbar, so it is NOT used for any computation here.
double bell_lambda_reference_form(double nbar, const ChannelCoefficients& coeff);

/// Diagonal entries of the reference variant at gamma = 1; exposes its
/// trace defect b(0) + c(0) = p1 + p2 + 2 p3 per element.
double bell_reference_form_bc_at_t0(double nbar);

/// Reference closed-form estimate of the disentanglement time,
/// ln[(1 + 2 sqrt(p1 p2)) / (2 sqrt(p1 p2))] / Gamma. Kept for comparison:
/// it disagrees with the numeric root (which two independent evolutions
/// confirm), so treat it as a quoted value, not ground truth. Throws
/// ZeroTemperatureError at nbar = 0 where it diverges.
double tesd_reference_formula(double nbar, double gamma_rate);

/// First zero of t -> lambda(evolve(rho0, bath, t)) by bracket doubling
/// from 1/[Gamma(2 nbar + 1)] and bisection to |dt| <= tol (default
/// 1e-10/[Gamma(2 nbar + 1)] when tol <= 0). Returns kAsymptotic when no
/// crossing exists within the 100/[Gamma(2 nbar + 1)] horizon and the
/// fixed point is not super-separable; throws NumericalIntegrityError on
/// the inconsistent combination (no crossing but a super-separable fixed
/// point).
EsdResult numeric_tesd(const DensityMatrix& rho0, const BathSpec& bath, double tol = 0.0);

/// Lambda samples uniform in omega over [0, 1 - 1e-3], mapped back through
/// t = -ln(1 - omega^2)/[Gamma(2 nbar + 1)] and evaluated via the channel.
std::vector<TrajectoryPoint> trajectory(const DensityMatrix& rho0, const BathSpec& bath,
                                        int n_points);

/// Two-qubit mixed family with tunable initial lambda0 in (0, 1) that
/// disentangles in finite time even at zero temperature: an X state with
/// central coherence lambda0/2, doubly-excited population 0.6 (1 - lambda0)
/// and empty ground-ground level.
DensityMatrix mixed_state_family(double lambda0);

}  // namespace warmq
