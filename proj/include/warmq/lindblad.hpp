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

#include <vector>

#include "warmq/densmat.hpp"
#include "warmq/thermal_channel.hpp"

namespace warmq {

// Master-equation integrator kept deliberately independent of the Kraus
// channel; the two are each other's cross-validation oracle.

/// Per-qubit thermal dissipator plus an optional sigma_z Hamiltonian.
/// Empty `qubit_frequencies` means the rotating frame (no Hamiltonian),
/// which is the frame the Kraus coefficients are written in.
struct LindbladSpec {
    BathSpec bath;
    std::vector<double> qubit_frequencies;

    explicit LindbladSpec(BathSpec bath_, std::vector<double> freqs = {});
};

/// Fixed-step control. The step must satisfy dt * Gamma (2 nbar + 1) <= 0.05,
/// checked against the bath when integration starts.
struct StepControl {
    double dt;
    long max_steps;

    StepControl(double dt_, long max_steps_);
};

/// Right-hand side -i[H, rho] + sum_i Gamma(nbar+1) D[sigma_-^(i)]
/// + Gamma nbar D[sigma_+^(i)] with D[C]rho = C rho C^dag - {C^dag C, rho}/2.
/// Traceless and Hermitian for Hermitian input.
Cmat liouvillian_rhs(const DensityMatrix& rho, const LindbladSpec& spec);

/// Counters reported by integrate(): steps taken and the largest one-step
/// trace drift absorbed by renormalization.
struct IntegrationStats {
    long steps = 0;
    double max_trace_drift = 0.0;
};

/// Classical 4th-order fixed-step integration to time t; the trace is
/// renormalized to 1 after every step and the drift recorded. Throws
/// StepBudgetExceededError when more than ctl.max_steps would be needed.
DensityMatrix integrate(const DensityMatrix& rho0, const LindbladSpec& spec, double t,
                        const StepControl& ctl, IntegrationStats* stats = nullptr);

/// Elementwise deviation between the integrator and the Kraus channel on a
/// time grid (rotating frame).
struct DeviationReport {
    std::vector<double> times;
    std::vector<double> deviations;
    double max_deviation = 0.0;
};

DeviationReport compare_to_kraus(const DensityMatrix& rho0, const BathSpec& bath,
                                 const std::vector<double>& t_grid,
                                 const StepControl& ctl);

}  // namespace warmq
