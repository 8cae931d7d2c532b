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

/// Fourier components of a sampled Wigner function,
///
///     W_F(a, b) = (1 / 2pi)^2 * integral W(q, p) exp(i (q a + p b)) dq dp,
///
/// held on a zero-padded conjugate grid for fast lookups away from the nodes.
class WignerSpectrum {
  public:
    /// `pad_factor` >= 1 oversamples the conjugate plane by roughly that factor.
    explicit WignerSpectrum(const ScalarField2D &wigner, int pad_factor = 4);

    const ScalarField2D &wigner() const noexcept { return wigner_; }
    const ComplexField2D &field() const noexcept { return spectrum_; }

    /// Six-point Lagrange lookup; nullopt outside the stencil-safe region.
    std::optional<Complex> lookup(double a, double b) const noexcept;

    /// Direct quadrature of the defining integral (O(n^2) per point).
    Complex direct(double a, double b) const;

    /// Largest |a| and |b| that the sampled Wigner grid resolves (Nyquist).
    double nyquist_a() const noexcept;
    double nyquist_b() const noexcept;

  private:
    ScalarField2D wigner_;
    ComplexField2D spectrum_;
};

}  // namespace symtomo
