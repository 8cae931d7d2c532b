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

#include "symtomo/grid.hpp"

namespace symtomo {

// Continuous Fourier transforms sampled on uniform grids.
//
// For every dimension d the transform is
//
//     F(a) = (1 / 2pi) * integral f(x) exp(sign * i * x * a) dx
//
// evaluated by the rectangle rule on the input grid (spectrally accurate for
// functions that decay inside the grid). Output samples lie on a conjugate
// axis with spacing 2pi / (n * h); any output origin is allowed, phases are
// corrected exactly. Applying sign = +1 then sign = -1 (back onto the
// original axes) returns f / (2pi)^d.

/// Conjugate axis for `axis`: same n, spacing 2pi/(n h), node 0 at index n/2.
AxisGrid conjugate_axis(const AxisGrid &axis);

/// True when `out` has the conjugate spacing of `in` and the same sample count.
bool is_conjugate_pair(const AxisGrid &in, const AxisGrid &out, double tol = 1e-9);

std::vector<Complex> fourier_1d(std::span<const Complex> f, const AxisGrid &in, int sign, const AxisGrid &out);

ComplexField2D fourier_2d(const ComplexField2D &field, int sign);
ComplexField2D fourier_2d(const ComplexField2D &field, int sign, const AxisGrid &out0, const AxisGrid &out1);

ComplexField3D fourier_3d(const ScalarField3D &field, int sign);
ComplexField3D fourier_3d(const ComplexField3D &field, int sign);
ComplexField3D fourier_3d(const ComplexField3D &field, int sign, const AxisGrid &out0, const AxisGrid &out1,
                          const AxisGrid &out2);

/// Plain in-place periodic DFT, unnormalized: X_m = sum_k x_k exp(sign 2pi i k m / n).
void periodic_dft(std::span<Complex> data, int sign);

}  // namespace symtomo
