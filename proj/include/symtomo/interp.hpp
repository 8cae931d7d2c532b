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

#include "symtomo/grid.hpp"

namespace symtomo {

/// Trilinear interpolation. Throws BoundaryError when the point is outside the grid.
double interp_trilinear(const ScalarField3D &field, double a0, double a1, double a2);

/// Same as interp_trilinear, but returns nullopt outside the grid.
std::optional<double> try_interp_trilinear(const ScalarField3D &field, double a0, double a1, double a2) noexcept;

/// Separable Lagrange interpolation with a 6x6 stencil (error O(h^6)).
/// Returns nullopt when the stencil does not fit inside the grid.
std::optional<Complex> interp_lagrange6(const ComplexField2D &field, double a0, double a1) noexcept;

}  // namespace symtomo
