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

#include "warmq/densmat.hpp"

namespace warmq {

/// Thermal reservoir shared by all qubits: coupling rate and mean occupancy.
struct BathSpec {
    double gamma_rate;  // Gamma > 0, inverse time
    double nbar;        // mean reservoir quanta, >= 0 (0 = zero temperature)

    BathSpec(double gamma_rate_, double nbar_);

    /// Gamma * (2 nbar + 1), the rate that sets every channel time scale.
    double total_rate() const { return gamma_rate * (2.0 * nbar + 1.0); }
};

/// Time-dependent channel coefficients, gamma^2 + omega^2 = 1.
struct ChannelCoefficients {
    double gamma_t;  // in (0, 1]
    double omega_t;  // in [0, 1)

    ChannelCoefficients(double gamma_t_, double omega_t_);
};

/// The four elementary single-qubit operators of the finite-temperature
/// damping channel (generalized amplitude damping). k1/k2 drive emission
/// |+> -> |->, k3/k4 absorption |-> -> |+>.
struct KrausQuartet {
    Cmat k1, k2, k3, k4;

    std::vector<Cmat> as_list() const { return {k1, k2, k3, k4}; }

    /// Largest |sum_j K_j^dagger K_j - I| entry.
    double completeness_defect() const;
};

/// M-fold tensor power of the single-qubit Gibbs state
/// diag(nbar, nbar+1)/(2 nbar + 1); the channel fixed point.
struct ThermalState {
    int qubit_count;
    double nbar;
    DensityMatrix matrix;
};

/// Mean occupancy 1/(e^{omega/kT} - 1); 0 at kT = 0. hbar = k_B = 1 units.
double nbar_from_temperature(double omega, double kT);

/// gamma(t) = exp(-Gamma (2 nbar + 1) t / 2), omega(t) = sqrt(1 - gamma^2).
ChannelCoefficients coefficients(const BathSpec& bath, double t);

/// Builds the quartet for given occupancy and coefficients; the result
/// satisfies sum_j K_j^dagger K_j = I to machine precision.
KrausQuartet kraus_quartet(double nbar, const ChannelCoefficients& coeff);

/// Applies the quartet to one qubit in O(4 * 4^M).
DensityMatrix apply_to_qubit(const DensityMatrix& rho, int qubit_index,
                             const KrausQuartet& q);

/// Full M-qubit channel at time t: one quartet per qubit. The map is a
/// one-parameter semigroup: evolve(evolve(rho, t1), t2) = evolve(rho, t1+t2).
DensityMatrix evolve(const DensityMatrix& rho0, const BathSpec& bath, double t);

/// Stationary state of evolve() for any input.
ThermalState thermal_state(int qubit_count, double nbar);

}  // namespace warmq
