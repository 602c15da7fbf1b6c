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

#include <stdexcept>
#include <string>

namespace warmq {

/// Base class for all warmq exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Matrix fails the Hermitian symmetry tolerance.
struct NotHermitianError : Error {
    using Error::Error;
};

/// Qubit or subsystem index outside the register.
struct IndexOutOfRangeError : Error {
    using Error::Error;
};

/// Operation requires a specific Hilbert-space dimension (e.g. two qubits).
struct WrongDimensionError : Error {
    using Error::Error;
};

/// Bipartition is empty or covers the whole register.
struct InvalidBipartitionError : Error {
    using Error::Error;
};

/// Nonpositive angular frequency passed to the occupancy formula.
struct InvalidFrequencyError : Error {
    using Error::Error;
};

/// Evolution time must be >= 0.
struct NegativeTimeError : Error {
    using Error::Error;
};

/// Fixed-step integration would exceed the configured step budget.
struct StepBudgetExceededError : Error {
    using Error::Error;
};

/// Witness construction requires an NPT input state.
struct NotEntangledError : Error {
    using Error::Error;
};

/// Randomized projector search gave up; carries the best value seen.
struct SearchExhaustedError : Error {
    SearchExhaustedError(const std::string& msg, double best)
        : Error(msg), best_abs_trace(best) {}
    double best_abs_trace;
};

/// Closed-form expression diverges at nbar = 0.
struct ZeroTemperatureError : Error {
    using Error::Error;
};

/// A numerical self-check failed (negative spectrum beyond dust tolerance,
/// inconsistent root bracketing, positivity loss). Maps to CLI exit code 3.
struct NumericalIntegrityError : Error {
    using Error::Error;
};

}  // namespace warmq
