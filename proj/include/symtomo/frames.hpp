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

namespace symtomo {

/// Reference frame of the quadrature X = mu*q + nu*p + delta.
struct FrameParameters {
    double mu = 1.0;
    double nu = 0.0;
    double delta = 0.0;

    double scale_squared() const noexcept { return mu * mu + nu * nu; }
};

/// Throws invalid-frame when mu = nu = 0 or a component is not finite.
void validate_frame(const FrameParameters &frame);

/// Frame plus a conjugate quadrature P = mu' q + nu' p + delta' with
/// mu*nu' - nu*mu' = 1 (the 2x2 matrix [[mu, nu], [mu', nu']] is symplectic).
struct ConjugateFramePair {
    FrameParameters frame;
    double mu_prime = 0.0;
    double nu_prime = 1.0;
    double delta_prime = 0.0;

    double determinant() const noexcept { return frame.mu * nu_prime - frame.nu * mu_prime; }
};

/// Canonical completion mu' = -nu/(mu^2+nu^2), nu' = mu/(mu^2+nu^2), delta' = 0.
/// Any P + c*X is an equally valid partner; this one is orthogonal to X.
ConjugateFramePair conjugate_frame(const FrameParameters &frame);

/// Frame realised by a squeezer (s, theta) followed by homodyne detection with
/// the local-oscillator phase locked to theta/2: mu = e^{-s} cos(theta/2),
/// nu = e^{-s} sin(theta/2), delta = 0.
FrameParameters frame_from_squeezer(double s, double theta);

/// Homodyne frame (cos phi, sin phi, 0).
FrameParameters homodyne_frame(double phi);

}  // namespace symtomo
