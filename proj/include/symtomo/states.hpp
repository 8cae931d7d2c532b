// Copyright 2026 The symtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symtomo/frames.hpp"
#include "symtomo/grid.hpp"

namespace symtomo {

// Closed-form single-mode states (hbar = 1, unit mass).
//
// Normalization convention for Wigner functions: integral W dq dp / (2pi) = 1,
// so the vacuum has W(0, 0) = 2. All states except DampedCoherent evolve under
// the free oscillator H = (p^2 + q^2) / 2; DampedCoherent is the amplitude-damped
// coherent state (zero-temperature bath) in the frame rotating with the
// oscillator.

struct Ground {};
struct FockOne {};
struct Coherent {
    double q0 = 0.0, p0 = 0.0;
};
/// N (|alpha> - |-alpha>) with alpha = (q0 + i p0) / sqrt(2). Requires alpha != 0.
struct OddCat {
    double q0 = 0.0, p0 = 0.0;
};
/// Displaced squeezed vacuum with var(q) = 1/(2s), var(p) = s/2 at t = 0.
struct SqueezedCoherent {
    double q0 = 0.0, p0 = 0.0, s = 1.0;
};
struct DampedCoherent {
    double q0 = 0.0, p0 = 0.0, gamma = 0.0;
};

using StateSpec = std::variant<Ground, FockOne, Coherent, OddCat, SqueezedCoherent, DampedCoherent>;

/// Throws invalid-state for out-of-domain parameters.
void validate_state(const StateSpec &state);

/// Short text key: ground, fock1, coherent, oddcat, squeezed, damped.
std::string state_key(const StateSpec &state);

/// Parses {"kind": "coherent", "q0": 1, "p0": 0} style JSON objects.
StateSpec parse_state(std::string_view json_text);
std::string state_to_json(const StateSpec &state);

/// Mean and covariance of a Gaussian Wigner function.
struct GaussianMoments {
    double mean_q = 0.0, mean_p = 0.0;
    double var_q = 0.5, var_p = 0.5, cov_qp = 0.0;

    double determinant() const noexcept { return var_q * var_p - cov_qp * cov_qp; }
    /// Mean and variance of X = mu q + nu p + delta.
    double quadrature_mean(const FrameParameters &f) const noexcept {
        return f.mu * mean_q + f.nu * mean_p + f.delta;
    }
    double quadrature_variance(const FrameParameters &f) const noexcept {
        return f.mu * f.mu * var_q + f.nu * f.nu * var_p + 2.0 * f.mu * f.nu * cov_qp;
    }
};

/// Moments at time t for Ground, Coherent, SqueezedCoherent and DampedCoherent;
/// nullopt for the non-Gaussian states.
std::optional<GaussianMoments> gaussian_moments(const StateSpec &state, double t);

double wigner_at(const StateSpec &state, double q, double p, double t);
double marginal_at(const StateSpec &state, double x, const FrameParameters &frame, double t);

/// Normalization of the odd cat state, [2 (1 - exp(-(q0^2 + p0^2)))]^{-1/2}.
double cat_norm(double q0, double p0);

/// Position wavefunction psi(q) at t = 0. Every catalog state is pure there;
/// DampedCoherent starts as the coherent state (q0, p0). Used by fidelity checks.
std::optional<Complex> wavefunction_at(const StateSpec &state, double q);

/// W sampled on the grid at time t.
ScalarField2D sample_wigner(const StateSpec &state, const PhaseSpaceGrid &grid, double t);

/// Notes on where a closed form here differs from the commonly printed one.
/// Emitted into run manifests.
std::vector<std::string> formula_corrections(const StateSpec &state);

}  // namespace symtomo
