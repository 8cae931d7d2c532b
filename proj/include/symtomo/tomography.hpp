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

#include <vector>

#include "symtomo/frames.hpp"
#include "symtomo/grid.hpp"
#include "symtomo/spectrum.hpp"
#include "symtomo/states.hpp"

namespace symtomo {

/// Marginals w(x; frame) for an explicit list of frames on a shared x axis.
struct FrameSlices {
    std::vector<FrameParameters> frames;
    AxisGrid x;
    std::vector<std::vector<double>> values;
};

/// Marginals on a full (mu, nu, x) grid; x is the contiguous axis. Frames
/// carry delta = 0.
struct FullTomogram {
    ScalarField3D values;

    const AxisGrid &mu() const noexcept { return values.axis0(); }
    const AxisGrid &nu() const noexcept { return values.axis1(); }
    const AxisGrid &x() const noexcept { return values.axis2(); }
};

enum class RayMethod {
    Lagrange,  ///< six-point lookups in the padded spectrum (default)
    Exact,     ///< direct quadrature at every ray node
};

struct ForwardOptions {
    RayMethod method = RayMethod::Lagrange;
};

/// One marginal slice by the Fourier-slice identity
/// w(x) = integral dk exp(-i k (x - delta)) W_F(k mu, k nu).
/// Throws insufficient-bandwidth when the ray leaves the resolved part of the
/// conjugate plane before |W_F| has decayed below 1e-12 of W_F(0).
std::vector<double> forward_marginal(const WignerSpectrum &spectrum, const FrameParameters &frame,
                                     const AxisGrid &x_axis, const ForwardOptions &options = {});

FrameSlices forward_slices(const WignerSpectrum &spectrum, const std::vector<FrameParameters> &frames,
                           const AxisGrid &x_axis, const ForwardOptions &options = {});

/// Homodyne special case, frame (cos phi, sin phi, 0) with phi in [0, pi).
std::vector<double> radon_marginal(const WignerSpectrum &spectrum, double phi, const AxisGrid &x_axis);

/// Default full-grid axes: mu, nu in [-12, 12] (65 nodes), x in [-80, 80] (1281 nodes).
struct FullGridAxes {
    AxisGrid mu = AxisGrid::symmetric(12.0, 65);
    AxisGrid nu = AxisGrid::symmetric(12.0, 65);
    AxisGrid x = AxisGrid::symmetric(80.0, 1281);
};

/// Marginals over every (mu, nu) node. The (0, 0) frame holds the discrete
/// delta at x = 0. Symmetric axes are filled pairwise through
/// w(x; -mu, -nu) = w(-x; mu, nu).
FullTomogram forward_full(const WignerSpectrum &spectrum, const FullGridAxes &axes = {},
                          const ForwardOptions &options = {});

/// Analytic marginals of `state` at time t on every node (delta at the (0, 0) frame).
FullTomogram sample_full(const StateSpec &state, const FullGridAxes &axes, double t = 0.0);

/// C_z(mu, nu) = integral w(x; mu, nu) exp(-i z x) dx on every frame node.
ComplexField2D characteristic_slice(const FullTomogram &tomogram, double z);

/// W(q, p) = (z^2 / 2pi) integral dmu dnu exp(i z (mu q + nu p)) C_z(mu, nu).
/// Throws accuracy when the reconstructed normalization drifts by more than 1e-2.
ScalarField2D inverse_wigner(const FullTomogram &tomogram, const PhaseSpaceGrid &grid, double z = 1.0);

/// Spread of inversions at z = 1/2 and z = 2 around z = 1, over the part of
/// `grid` that the frame spacing resolves without aliasing at z = 2.
struct OvercompletenessReport {
    double max_diff_half = 0.0;
    double max_diff_two = 0.0;
    double window = 0.0;  ///< half-width of the compared region in q and p
};
OvercompletenessReport overcompleteness(const FullTomogram &tomogram, const PhaseSpaceGrid &grid);

/// Trapezoid integral of W dq dp / (2pi).
double wigner_norm(const ScalarField2D &w);

}  // namespace symtomo
