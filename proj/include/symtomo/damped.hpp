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

#include <span>
#include <vector>

#include "symtomo/evolution.hpp"
#include "symtomo/tomography.hpp"

namespace symtomo {

// Damped oscillator (zero-temperature bath) in the rotating frame:
//
//     d_t w = (gamma / 2) [-mu d_mu w - nu d_nu w + (mu^2 + nu^2) / 2 d_x^2 w].
//
// Homogeneity of degree -1 turns the (mu, nu) dilation into an x dilation, so
// every frame evolves on its own: d_t w = (gamma / 2) [w + x w_x + r^2 / 2 w_xx].

enum class DiffusionScheme {
    Spectral,  ///< exact heat multiplier in Fourier space (default)
    Explicit,  ///< forward-Euler central differences; CFL number must be <= 0.4
};

struct DampedOptions {
    DiffusionScheme diffusion = DiffusionScheme::Spectral;
};

/// Strang splitting drift(dt/2) diffusion(dt) drift(dt/2) over `steps` steps.
/// Drift is the exact dilation w -> e^{g/2} w(x e^{g/2}) (g = gamma dt),
/// applied through a chirp-z evaluation of the spectrum at dilated wavenumbers.
FullTomogram evolve_damped(const FullTomogram &w0, const DampingSpec &damping, double t, int steps,
                           const DampedOptions &options = {});
FrameSlices evolve_damped(const FrameSlices &w0, const DampingSpec &damping, double t, int steps,
                          const DampedOptions &options = {});

/// Exact propagator applied to one sampled slice:
/// w^(k, t) = w^0(k e^{-gamma t / 2}) exp(-(r^2 k^2 / 4)(1 - e^{-gamma t})).
std::vector<double> damped_exact(std::span<const double> line, const AxisGrid &x, const FrameParameters &frame,
                                 double gamma, double t);

/// Explicit-diffusion CFL number D dt / dx^2 with D = gamma r^2 / 4 at r^2 = max_r2.
double diffusion_cfl(double max_r2, const AxisGrid &x, double gamma, double t, int steps);

}  // namespace symtomo
