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

#include "symtomo/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "symtomo/error.hpp"
#include "symtomo/fourier.hpp"
#include "symtomo/interp.hpp"

namespace symtomo {

namespace {

// Extends a symmetric axis by `extra` nodes on both sides, keeping the spacing.
AxisGrid padded(const AxisGrid &axis, std::size_t extra) {
    const double grow = static_cast<double>(extra) * axis.spacing();
    return AxisGrid(axis.min() - grow, axis.max() + grow, axis.n() + 2 * extra);
}

ComplexField2D padded_spectrum(const ScalarField2D &w, int pad_factor) {
    if (pad_factor < 1) throw_validation("invalid-argument", "pad_factor must be >= 1");
    const std::size_t e0 = w.axis0().n() * static_cast<std::size_t>(pad_factor - 1) / 2;
    const std::size_t e1 = w.axis1().n() * static_cast<std::size_t>(pad_factor - 1) / 2;
    ComplexField2D big(padded(w.axis0(), e0), padded(w.axis1(), e1));
    for (std::size_t i = 0; i < w.axis0().n(); ++i)
        for (std::size_t j = 0; j < w.axis1().n(); ++j) big(i + e0, j + e1) = w(i, j);
    return fourier_2d(big, +1);
}

}  // namespace

WignerSpectrum::WignerSpectrum(const ScalarField2D &wigner, int pad_factor)
    : wigner_(wigner), spectrum_(padded_spectrum(wigner, pad_factor)) {}

std::optional<Complex> WignerSpectrum::lookup(double a, double b) const noexcept {
    return interp_lagrange6(spectrum_, a, b);
}

Complex WignerSpectrum::direct(double a, double b) const {
    const auto &qa = wigner_.axis0();
    const auto &pa = wigner_.axis1();
    std::vector<Complex> ep(pa.n());
    for (std::size_t j = 0; j < pa.n(); ++j) ep[j] = std::polar(1.0, b * pa[j]);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < qa.n(); ++i) {
        Complex row = 0.0;
        for (std::size_t j = 0; j < pa.n(); ++j) row += wigner_(i, j) * ep[j];
        acc += row * std::polar(1.0, a * qa[i]);
    }
    constexpr double k4Pi2 = 4.0 * std::numbers::pi * std::numbers::pi;
    return acc * (wigner_.cell_area() / k4Pi2);
}

double WignerSpectrum::nyquist_a() const noexcept { return std::numbers::pi / wigner_.axis0().spacing(); }
double WignerSpectrum::nyquist_b() const noexcept { return std::numbers::pi / wigner_.axis1().spacing(); }

}  // namespace symtomo
