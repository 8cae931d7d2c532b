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
#include <string>
#include <vector>

#include "symtomo/frames.hpp"
#include "symtomo/grid.hpp"
#include "symtomo/spectrum.hpp"

namespace symtomo {

/// Trapezoid moment <x^n> of a slice; n <= 8, otherwise tail-accuracy error.
double moment(std::span<const double> slice, const AxisGrid &x_axis, int n);

struct MomentTable {
    FrameParameters frame;
    std::vector<double> moments;  ///< index n -> <x^n>

    double variance() const { return moments.at(2) - moments.at(1) * moments.at(1); }
};

MomentTable moment_table(std::span<const double> slice, const AxisGrid &x_axis, const FrameParameters &frame,
                         int n_max);

/// G(i lambda) = <exp(i lambda X)> = integral (dq dp / 2pi) W exp(i lambda (mu q + nu p + delta)).
struct GeneratingSample {
    double lambda = 0.0;
    FrameParameters frame;
    Complex value;           ///< direct quadrature (returned value)
    Complex spectral;        ///< same, from 2pi W_F(lambda mu, lambda nu) in the padded spectrum
    bool spectral_ok = true; ///< false when the spectral point is outside the conjugate grid
    std::string warning;
};

GeneratingSample generating_function(const WignerSpectrum &spectrum, double lambda, const FrameParameters &frame);

/// G(i) at lambda = 1 on every (mu, nu) node, by separable direct quadrature.
ComplexField2D generating_grid(const ScalarField2D &wigner, const AxisGrid &mu, const AxisGrid &nu);

/// W(q, p) = (1/2pi) integral dmu dnu exp(-i (mu q + nu p)) G(i; mu, nu).
/// Throws bandwidth when |G| >= 1e-10 anywhere on the boundary of the (mu, nu) grid.
ScalarField2D wigner_from_generating(const ComplexField2D &g, const PhaseSpaceGrid &grid);

/// Central finite-difference Taylor coefficients at lambda = 0 with step h:
/// d1 = G'(0) / i (approximates <x>), d2 = -G''(0) (approximates <x^2>).
struct TaylorCheck {
    double d1 = 0.0;
    double d2 = 0.0;
};
TaylorCheck generating_taylor(const WignerSpectrum &spectrum, const FrameParameters &frame, double h = 1e-3);

}  // namespace symtomo
