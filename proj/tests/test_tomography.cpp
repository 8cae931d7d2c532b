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

#include <map>
#include <memory>

#include "symtomo/spectrum.hpp"
#include "symtomo/states.hpp"
#include "symtomo/tomography.hpp"
#include "test_util.hpp"

namespace symtomo {
namespace {

using testing::expect_error;
using testing::kPi;
using testing::max_abs_diff;

std::vector<double> analytic(const StateSpec &s, const FrameParameters &f, const AxisGrid &x, double t = 0.0) {
    std::vector<double> v(x.n());
    for (std::size_t k = 0; k < x.n(); ++k) v[k] = marginal_at(s, x[k], f, t);
    return v;
}

const WignerSpectrum &spectrum_of(const StateSpec &s) {
    static std::map<std::string, std::unique_ptr<WignerSpectrum>> cache;
    auto &slot = cache[state_to_json(s)];
    if (!slot) slot = std::make_unique<WignerSpectrum>(sample_wigner(s, PhaseSpaceGrid::square(8.0, 256), 0.0));
    return *slot;
}

TEST(Spectrum, LookupMatchesDirectQuadrature) {
    const auto &sp = spectrum_of(OddCat{2.0, 0.0});
    for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{1.3, -0.7}, std::pair{-3.1, 2.2}}) {
        auto v = sp.lookup(a, b);
        ASSERT_TRUE(v.has_value());
        // Six-point Lagrange on the 4x padded grid: error ~ (k h)^6 / 720 for fringe frequency k = 2.
        EXPECT_NEAR(std::abs(*v - sp.direct(a, b)), 0.0, 1e-7);
    }
    // Ground: W_F(a, b) = exp(-(a^2 + b^2) / 4) / (2 pi)
    const auto &g = spectrum_of(Ground{});
    EXPECT_NEAR(std::abs(g.direct(1.0, 1.0) - std::exp(-0.5) / (2.0 * kPi)), 0.0, 1e-14);
    EXPECT_NEAR(g.nyquist_a(), kPi / g.wigner().axis0().spacing(), 1e-12);
}

TEST(Forward, MatchesAnalyticMarginals) {
    const auto x = AxisGrid::symmetric(12.0, 481);
    for (const StateSpec &s : {StateSpec{Ground{}}, StateSpec{FockOne{}}, StateSpec{Coherent{1.0, 0.5}},
                               StateSpec{OddCat{2.0, 0.0}}}) {
        for (const auto &f : {FrameParameters{1.0, 0.0, 0.0}, homodyne_frame(0.9), frame_from_squeezer(0.4, 1.0),
                              FrameParameters{-1.2, 0.8, 0.3}})
            EXPECT_LT(max_abs_diff(forward_marginal(spectrum_of(s), f, x), analytic(s, f, x)), 1e-6) << state_key(s);
    }
}

TEST(Forward, ExactRayMethodAgrees) {
    const auto x = AxisGrid::symmetric(8.0, 161);
    const FrameParameters f{0.8, 0.6, 0.0};
    const auto &sp = spectrum_of(FockOne{});
    auto a = forward_marginal(sp, f, x, {RayMethod::Exact});
    EXPECT_LT(max_abs_diff(a, analytic(FockOne{}, f, x)), 1e-12);
    EXPECT_LT(max_abs_diff(a, forward_marginal(sp, f, x)), 1e-6);
}

TEST(Forward, VacuumIsRotationallySymmetric) {
    const auto x = AxisGrid::symmetric(8.0, 161);
    const auto &sp = spectrum_of(Ground{});
    const auto w0 = forward_marginal(sp, homodyne_frame(0.0), x, {RayMethod::Exact});
    for (double phi : {kPi / 4.0, kPi / 2.0}) {
        const auto exact = forward_marginal(sp, homodyne_frame(phi), x, {RayMethod::Exact});
        EXPECT_LT(max_abs_diff(exact, w0), 1e-9);
        EXPECT_LT(max_abs_diff(radon_marginal(sp, phi, x), exact), 1e-8);
    }
    expect_error([&] { radon_marginal(sp, kPi, x); }, ErrorCode::Validation, "invalid-argument");
}

TEST(Forward, DeltaShiftIsExactOnNodes) {
    const auto x = AxisGrid::symmetric(8.0, 161);
    const auto &sp = spectrum_of(Coherent{1.0, 0.5});
    auto a = forward_marginal(sp, {0.5, 1.0, 0.0}, x);
    auto b = forward_marginal(sp, {0.5, 1.0, 5 * x.spacing()}, x);
    for (std::size_t k = 5; k < x.n(); ++k) EXPECT_NEAR(b[k], a[k - 5], 1e-13);
}

TEST(Forward, RejectsDegenerateFrame) {
    const auto x = AxisGrid::symmetric(8.0, 33);
    expect_error([&] { forward_marginal(spectrum_of(Ground{}), {0.0, 0.0, 1.0}, x); }, ErrorCode::Validation,
                 "invalid-frame");
}

TEST(Forward, CoarseGridFailsLoudly) {
    // A cat with lobes at q = +-4 is cut off by a [-3, 3] grid.
    const WignerSpectrum sp(sample_wigner(OddCat{4.0, 0.0}, PhaseSpaceGrid::square(3.0, 16), 0.0));
    expect_error([&] { forward_marginal(sp, {1.0, 0.0, 0.0}, AxisGrid::symmetric(8.0, 65)); }, ErrorCode::NumericAccuracy,
                 "insufficient-bandwidth");
}

FullGridAxes small_axes() {
    return {AxisGrid::symmetric(12.0, 65), AxisGrid::symmetric(12.0, 65), AxisGrid::symmetric(80.0, 1281)};
}

TEST(FullGrid, MirrorSymmetryAndDelta) {
    const auto t = forward_full(spectrum_of(Coherent{1.0, 0.5}), small_axes());
    const auto &x = t.x();
    const std::size_t c = t.mu().n() / 2;
    auto zero = t.values.line(c, c);
    EXPECT_NEAR(integrate_1d(zero, x), 1.0, 1e-12);
    EXPECT_NEAR(zero[x.n() / 2], 1.0 / x.spacing(), 1e-12);
    // w(x; -mu, -nu) = w(-x; mu, nu)
    auto a = t.values.line(40, 21), b = t.values.line(24, 43);
    for (std::size_t k = 0; k < x.n(); ++k) EXPECT_NEAR(a[k], b[x.n() - 1 - k], 1e-15);
    // Every frame is normalized.
    for (std::size_t i = 0; i < t.mu().n(); i += 8)
        for (std::size_t j = 0; j < t.nu().n(); j += 8) EXPECT_NEAR(integrate_1d(t.values.line(i, j), x), 1.0, 1e-5);
}

TEST(FullGrid, AnalyticSamplingMatchesForward) {
    const auto axes = small_axes();
    const auto a = sample_full(FockOne{}, axes, 0.0);
    const auto b = forward_full(spectrum_of(FockOne{}), axes);
    double err = 0.0;
    for (std::size_t k = 0; k < a.values.values().size(); ++k)
        err = std::max(err, std::abs(a.values.values()[k] - b.values.values()[k]));
    EXPECT_LT(err, 1e-5);
}

TEST(Inverse, RoundtripReproducesWigner) {
    const auto grid = PhaseSpaceGrid::square(6.0, 49);
    for (const StateSpec &s : {StateSpec{FockOne{}}, StateSpec{OddCat{2.0, 0.0}}}) {
        const auto t = forward_full(spectrum_of(s), small_axes());
        const auto w = inverse_wigner(t, grid);
        double err = 0.0;
        for (std::size_t i = 0; i < grid.q.n(); ++i)
            for (std::size_t j = 0; j < grid.p.n(); ++j)
                err = std::max(err, std::abs(w(i, j) - wigner_at(s, grid.q[i], grid.p[j], 0.0)));
        EXPECT_LT(err, 1e-3) << state_key(s);
        EXPECT_NEAR(w(24, 24), -2.0, 0.02);
        EXPECT_NEAR(wigner_norm(w), 1.0, 1e-3);
    }
}

TEST(Inverse, OtherScalesAgreeWhereResolved) {
    const auto t = forward_full(spectrum_of(Coherent{1.0, 0.5}), small_axes());
    const auto r = overcompleteness(t, PhaseSpaceGrid::square(6.0, 49));
    EXPECT_GT(r.window, 1.0);
    EXPECT_LT(r.max_diff_half, 1e-3);
    EXPECT_LT(r.max_diff_two, 1e-3);
}

TEST(Inverse, TruncatedFrameGridIsDetected) {
    // z = 1 characteristic e^{-r^2/4} at r = 1 is far from negligible.
    const FullGridAxes axes{AxisGrid::symmetric(1.0, 17), AxisGrid::symmetric(1.0, 17), AxisGrid::symmetric(20.0, 321)};
    const auto t = forward_full(spectrum_of(Ground{}), axes);
    expect_error([&] { inverse_wigner(t, PhaseSpaceGrid::square(6.0, 49)); }, ErrorCode::NumericAccuracy, "accuracy");
}

}  // namespace
}  // namespace symtomo
