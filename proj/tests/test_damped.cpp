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

#include "symtomo/damped.hpp"
#include "symtomo/moments.hpp"
#include "symtomo/states.hpp"
#include "test_util.hpp"

namespace symtomo {
namespace {

using testing::expect_error;
using testing::max_abs_diff;

const std::vector<FrameParameters> kFrames{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {2.0, 1.0, 0.0}, {3.0, -2.0, 0.5}};

FrameSlices coherent_slices(const AxisGrid &x) {
    FrameSlices s{kFrames, x, {}};
    for (const auto &f : kFrames) {
        std::vector<double> v(x.n());
        for (std::size_t k = 0; k < x.n(); ++k) v[k] = marginal_at(Coherent{1.0, 0.0}, x[k], f, 0.0);
        s.values.push_back(std::move(v));
    }
    return s;
}

std::vector<double> damped_analytic(const FrameParameters &f, const AxisGrid &x, double gamma, double t) {
    std::vector<double> v(x.n());
    for (std::size_t k = 0; k < x.n(); ++k) v[k] = marginal_at(DampedCoherent{1.0, 0.0, gamma}, x[k], f, t);
    return v;
}

const AxisGrid kX = AxisGrid::symmetric(40.0, 641);

TEST(Damped, ZeroGammaIsIdentity) {
    const auto w0 = coherent_slices(kX);
    for (auto scheme : {DiffusionScheme::Spectral, DiffusionScheme::Explicit}) {
        const auto w = evolve_damped(w0, {0.0, 0.0}, 3.0, 10, {scheme});
        for (std::size_t k = 0; k < kFrames.size(); ++k) EXPECT_LT(max_abs_diff(w.values[k], w0.values[k]), 1e-10);
    }
}

TEST(Damped, MatchesAnalyticSolution) {
    const auto w0 = coherent_slices(kX);
    const double t = 2.0 * std::log(2.0);
    const auto w = evolve_damped(w0, {1.0, 0.0}, t, 64);
    for (std::size_t k = 0; k < kFrames.size(); ++k) {
        EXPECT_LT(max_abs_diff(w.values[k], damped_analytic(kFrames[k], kX, 1.0, t)), 1e-4) << k;
        EXPECT_NEAR(integrate_1d(w.values[k], kX), 1.0, 1e-4);
    }
    EXPECT_NEAR(moment(w.values[0], kX, 1), 0.5, 1e-6);
}

TEST(Damped, ExactPropagatorMatchesAnalytic) {
    const auto w0 = coherent_slices(kX);
    for (std::size_t k = 0; k < kFrames.size(); ++k)
        EXPECT_LT(max_abs_diff(damped_exact(w0.values[k], kX, kFrames[k], 0.8, 1.7), damped_analytic(kFrames[k], kX, 0.8, 1.7)),
                  1e-10);
}

TEST(Damped, StrangSplittingIsSecondOrder) {
    const auto w0 = coherent_slices(kX);
    std::vector<double> err;
    for (int n : {4, 8, 16}) {
        const auto w = evolve_damped(w0, {1.0, 0.0}, 1.0, n);
        double e = 0.0;
        for (std::size_t k = 0; k < kFrames.size(); ++k)
            e = std::max(e, max_abs_diff(w.values[k], damped_exact(w0.values[k], kX, kFrames[k], 1.0, 1.0)));
        err.push_back(e);
    }
    EXPECT_NEAR(err[0] / err[1], 4.0, 0.5);
    EXPECT_NEAR(err[1] / err[2], 4.0, 0.5);
}

TEST(Damped, ExplicitSchemeConverges) {
    const auto w0 = coherent_slices(kX);
    const auto w = evolve_damped(w0, {1.0, 0.0}, 1.0, 800, {DiffusionScheme::Explicit});
    for (std::size_t k = 0; k < kFrames.size(); ++k)
        EXPECT_LT(max_abs_diff(w.values[k], damped_analytic(kFrames[k], kX, 1.0, 1.0)), 1e-3);
}

TEST(Damped, ExplicitCflViolation) {
    const auto w0 = coherent_slices(kX);
    // r^2 = 13, dx = 0.125: one step of dt = 1 gives CFL = 208.
    EXPECT_NEAR(diffusion_cfl(13.0, kX, 1.0, 1.0, 1), 0.25 * 13.0 / (0.125 * 0.125), 1e-9);
    expect_error([&] { evolve_damped(w0, {1.0, 0.0}, 1.0, 1, {DiffusionScheme::Explicit}); },
                 ErrorCode::NumericAccuracy, "stability");
    EXPECT_NO_THROW(evolve_damped(w0, {1.0, 0.0}, 1.0, 1));
}

TEST(Damped, ThermalBathUnsupported) {
    const auto w0 = coherent_slices(kX);
    expect_error([&] { evolve_damped(w0, {1.0, 0.5}, 1.0, 4); }, ErrorCode::Validation, "unsupported");
    expect_error([&] { evolve_damped(w0, {-1.0, 0.0}, 1.0, 4); }, ErrorCode::Validation, "invalid-damping");
}

TEST(Damped, LongTimeLimitIsVacuum) {
    const auto w0 = coherent_slices(kX);
    const auto w = evolve_damped(w0, {1.0, 0.0}, 10.0, 64);
    for (std::size_t k = 0; k < kFrames.size(); ++k) {
        std::vector<double> vac(kX.n());
        for (std::size_t m = 0; m < kX.n(); ++m) vac[m] = marginal_at(Ground{}, kX[m], kFrames[k], 0.0);
        EXPECT_LT(max_abs_diff(w.values[k], vac), 1e-2);
    }
}

TEST(Damped, FullGridAndResidual) {
    const FullGridAxes axes{AxisGrid(0.5, 1.5, 21), AxisGrid(-0.5, 0.5, 21), AxisGrid::symmetric(8.0, 321)};
    const auto w0 = sample_full(Coherent{1.0, 0.0}, axes, 0.0);
    const auto w = evolve_damped(w0, {1.0, 0.0}, 0.5, 32);
    double err = 0.0;
    for (std::size_t i = 0; i < axes.mu.n(); i += 5)
        for (std::size_t j = 0; j < axes.nu.n(); j += 5) {
            const auto line = w.values.line(i, j);
            for (std::size_t k = 0; k < axes.x.n(); ++k)
                err = std::max(err, std::abs(line[k] - marginal_at(DampedCoherent{1.0, 0.0, 1.0}, axes.x[k],
                                                                   {axes.mu[i], axes.nu[j], 0.0}, 0.5)));
        }
    EXPECT_LT(err, 1e-4);

    std::vector<FullTomogram> s;
    for (double t : {0.49, 0.5, 0.51}) s.push_back(sample_full(DampedCoherent{1.0, 0.0, 1.0}, axes, t));
    EXPECT_LT(pde_residual(s, 0.01, DampingSpec{1.0, 0.0}), 1e-3);
    EXPECT_GT(pde_residual(s, 0.01, DampingSpec{2.0, 0.0}), 1e-2);
}

}  // namespace
}  // namespace symtomo
