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

#include <gtest/gtest.h>

#include "symtomo/fourier.hpp"
#include "test_util.hpp"

namespace symtomo {
namespace {

using testing::kPi;

// (1/2pi) integral exp(-x^2/2 + i x a) dx = exp(-a^2/2) / sqrt(2 pi)
double gaussian_ft(double a) { return std::exp(-0.5 * a * a) / std::sqrt(2.0 * kPi); }

TEST(Fourier, ConjugateAxis) {
    auto a = AxisGrid::symmetric(8.0, 64);
    auto c = conjugate_axis(a);
    EXPECT_EQ(c.n(), 64u);
    EXPECT_NEAR(c.spacing(), 2.0 * kPi / (64 * a.spacing()), 1e-12);
    EXPECT_NEAR(c[32], 0.0, 1e-12);
    EXPECT_TRUE(is_conjugate_pair(a, c));
}

TEST(Fourier, OneDimensionalGaussian) {
    auto x = AxisGrid::symmetric(10.0, 128);
    std::vector<Complex> f(x.n());
    for (std::size_t k = 0; k < x.n(); ++k) f[k] = std::exp(-0.5 * x[k] * x[k]);
    auto k = conjugate_axis(x);
    auto g = fourier_1d(f, x, +1, k);
    for (std::size_t m = 0; m < k.n(); ++m) {
        EXPECT_NEAR(g[m].real(), gaussian_ft(k[m]), 1e-12);
        EXPECT_NEAR(g[m].imag(), 0.0, 1e-12);
    }
}

TEST(Fourier, ShiftedOutputOrigin) {
    // Any output origin is allowed; a shifted Gaussian picks up the linear phase.
    auto x = AxisGrid::symmetric(10.0, 128);
    std::vector<Complex> f(x.n());
    for (std::size_t k = 0; k < x.n(); ++k) f[k] = std::exp(-0.5 * (x[k] - 1.0) * (x[k] - 1.0));
    auto c = conjugate_axis(x);
    AxisGrid out(c.min() + 0.3 * c.spacing(), c.max() + 0.3 * c.spacing(), c.n());
    auto g = fourier_1d(f, x, -1, out);
    for (std::size_t m = 0; m < out.n(); ++m) {
        Complex expect = gaussian_ft(out[m]) * std::polar(1.0, -out[m]);
        EXPECT_NEAR(std::abs(g[m] - expect), 0.0, 1e-12);
    }
}

TEST(Fourier, TwoDimensionalRoundtrip) {
    auto q = AxisGrid::symmetric(8.0, 64), p = AxisGrid::symmetric(8.0, 48);
    ComplexField2D f(q, p);
    for (std::size_t i = 0; i < q.n(); ++i)
        for (std::size_t j = 0; j < p.n(); ++j)
            f(i, j) = std::exp(-0.5 * (q[i] - 0.5) * (q[i] - 0.5) - 0.3 * p[j] * p[j]) * Complex(1.0, 0.2 * q[i]);
    auto g = fourier_2d(f, +1);
    auto back = fourier_2d(g, -1, q, p);
    const double s = 4.0 * kPi * kPi;
    for (std::size_t i = 0; i < q.n(); ++i)
        for (std::size_t j = 0; j < p.n(); ++j) EXPECT_NEAR(std::abs(back(i, j) * s - f(i, j)), 0.0, 1e-12);
}

TEST(Fourier, ThreeDimensionalSeparable) {
    auto a = AxisGrid::symmetric(9.0, 32);
    ScalarField3D f(a, a, a);
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            for (std::size_t k = 0; k < a.n(); ++k)
                f(i, j, k) = std::exp(-0.5 * (a[i] * a[i] + a[j] * a[j] + a[k] * a[k]));
    auto g = fourier_3d(f, +1);
    const auto &c = g.axis0();
    // Index 0 is the Nyquist row, where the discrete sum is alias dominated.
    for (std::size_t i : {7ul, 10ul, 16ul, 20ul})
        EXPECT_NEAR(g(i, 16, 16).real(), gaussian_ft(c[i]) * gaussian_ft(0.0) * gaussian_ft(0.0), 1e-12);
}

TEST(Fourier, RejectsNonConjugateOutput) {
    auto x = AxisGrid::symmetric(4.0, 32);
    std::vector<Complex> f(x.n(), 1.0);
    testing::expect_error([&] { fourier_1d(f, x, +1, x); }, ErrorCode::Validation, "unsupported-grid");
}

TEST(Fourier, PeriodicDftMatchesDefinition) {
    std::vector<Complex> d{1.0, Complex(0, 1), -2.0, 0.5, 3.0};
    auto ref = d;
    periodic_dft(d, -1);
    for (std::size_t m = 0; m < d.size(); ++m) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < ref.size(); ++k) s += ref[k] * std::polar(1.0, -2.0 * kPi * k * m / 5.0);
        EXPECT_NEAR(std::abs(d[m] - s), 0.0, 1e-12);
    }
}

}  // namespace
}  // namespace symtomo
