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

#include "symtomo/interp.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "symtomo/error.hpp"

namespace symtomo {

namespace {

// Cell index and fractional offset along one axis. Offsets within 1e-12 of a
// node snap to it so that node queries return stored values exactly.
bool locate(const AxisGrid &axis, double v, std::size_t &cell, double &frac) noexcept {
    if (!axis.contains(v, 1e-12)) return false;
    double u = (v - axis.min()) / axis.spacing();
    double r = std::round(u);
    if (std::abs(u - r) < 1e-12) u = r;
    const double last = static_cast<double>(axis.n() - 1);
    u = std::clamp(u, 0.0, last);
    double c = std::floor(u);
    if (c >= last) c = last - 1;
    cell = static_cast<std::size_t>(c);
    frac = u - c;
    return true;
}

}  // namespace

std::optional<double> try_interp_trilinear(const ScalarField3D &f, double a0, double a1, double a2) noexcept {
    std::size_t i, j, k;
    double fi, fj, fk;
    if (!locate(f.axis0(), a0, i, fi) || !locate(f.axis1(), a1, j, fj) || !locate(f.axis2(), a2, k, fk))
        return std::nullopt;
    double acc = 0.0;
    for (int di = 0; di < 2; ++di) {
        double wi = di ? fi : 1.0 - fi;
        if (wi == 0.0) continue;
        for (int dj = 0; dj < 2; ++dj) {
            double wj = dj ? fj : 1.0 - fj;
            if (wj == 0.0) continue;
            for (int dk = 0; dk < 2; ++dk) {
                double wk = dk ? fk : 1.0 - fk;
                if (wk == 0.0) continue;
                acc += wi * wj * wk * f(i + di, j + dj, k + dk);
            }
        }
    }
    return acc;
}

double interp_trilinear(const ScalarField3D &field, double a0, double a1, double a2) {
    auto v = try_interp_trilinear(field, a0, a1, a2);
    if (!v) throw BoundaryError({a0, a1, a2}, "interp_trilinear: point outside grid");
    return *v;
}

namespace {

// Stencil start and the six Lagrange weights for offset u (in grid units).
bool lagrange_weights(const AxisGrid &axis, double v, long &start, std::array<double, 6> &w) noexcept {
    double u = (v - axis.min()) / axis.spacing();
    long base = static_cast<long>(std::floor(u));
    start = base - 2;
    if (start < 0 || start + 5 > static_cast<long>(axis.n()) - 1) return false;
    double t = u - static_cast<double>(start);
    for (int a = 0; a < 6; ++a) {
        double num = 1.0, den = 1.0;
        for (int b = 0; b < 6; ++b) {
            if (b == a) continue;
            num *= t - b;
            den *= a - b;
        }
        w[a] = num / den;
    }
    return true;
}

}  // namespace

std::optional<Complex> interp_lagrange6(const ComplexField2D &field, double a0, double a1) noexcept {
    long s0, s1;
    std::array<double, 6> w0, w1;
    if (!lagrange_weights(field.axis0(), a0, s0, w0) || !lagrange_weights(field.axis1(), a1, s1, w1))
        return std::nullopt;
    Complex acc = 0.0;
    for (int a = 0; a < 6; ++a) {
        Complex row = 0.0;
        for (int b = 0; b < 6; ++b) row += w1[b] * field(static_cast<std::size_t>(s0 + a), static_cast<std::size_t>(s1 + b));
        acc += w0[a] * row;
    }
    return acc;
}

}  // namespace symtomo
