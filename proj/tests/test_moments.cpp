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

#include "symtomo/moments.hpp"
#include "symtomo/spectrum.hpp"
#include "symtomo/states.hpp"
#include "symtomo/tomography.hpp"
#include "test_util.hpp"

namespace symtomo {
namespace {

using testing::expect_error;
using testing::kPi;

const WignerSpectrum &spectrum_of(const StateSpec &s) {
    static std::map<std::string, std::unique_ptr<WignerSpectrum>> cache;
    auto &slot = cache[state_to_json(s)];
    if (!slot) slot = std::make_unique<WignerSpectrum>(sample_wigner(s, PhaseSpaceGrid::square(8.0, 256), 0.0));
    return *slot;
}

TEST(Moments, GaussianSlice) {
    const auto x = AxisGrid::symmetric(12.0, 481);
    std::vector<double> w(x.n());
    for (std::size_t k = 0; k < x.n(); ++k) w[k] = testing::gauss(x[k], 0.5, 2.0);
    const auto t = moment_table(w, x, {1.0, 0.0, 0.0}, 4);
    EXPECT_NEAR(t.moments[0], 1.0, 1e-12);
    EXPECT_NEAR(t.moments[1], 0.5, 1e-12);
    EXPECT_NEAR(t.variance(), 2.0, 1e-12);
    // <x^4> = mu^4 + 6 mu^2 s2 + 3 s2^2
    EXPECT_NEAR(t.moments[4], 0.0625 + 6 * 0.25 * 2.0 + 12.0, 1e-10);
    expect_error([&] { moment(w, x, 9); }, ErrorCode::NumericAccuracy, "tail-accuracy");
}

TEST(Generating, NormalizationAndVacuum) {
    for (const StateSpec &s : {StateSpec{Ground{}}, StateSpec{FockOne{}}, StateSpec{OddCat{2.0, 0.0}}})
        EXPECT_NEAR(std::abs(generating_function(spectrum_of(s), 0.0, {0.3, 0.8, 0.0}).value - 1.0), 0.0, 1e-12);
    const auto g = generating_function(spectrum_of(Ground{}), 1.0, {1.0, 0.0, 0.0});
    EXPECT_NEAR(g.value.real(), std::exp(-0.25), 1e-12);
    EXPECT_NEAR(g.value.imag(), 0.0, 1e-14);
    EXPECT_TRUE(g.spectral_ok);
    EXPECT_NEAR(std::abs(g.spectral - g.value), 0.0, 1e-8);
}

TEST(Generating, CoherentClosedForm) {
    // G = exp(i lambda (mu q0 + nu p0) - lambda^2 (mu^2 + nu^2) / 4)
    const auto &sp = spectrum_of(Coherent{1.0, -0.5});
    for (double lambda : {0.5, 1.0, 2.0}) {
        const FrameParameters f{0.6, 0.9, 0.4};
        const Complex expect =
            std::exp(Complex(-0.25 * lambda * lambda * f.scale_squared(), lambda * (f.mu - 0.5 * f.nu + f.delta)));
        EXPECT_NEAR(std::abs(generating_function(sp, lambda, f).value - expect), 0.0, 1e-12);
    }
    const auto far = generating_function(sp, 200.0, {1.0, 0.0, 0.0});
    EXPECT_FALSE(far.spectral_ok);
    EXPECT_FALSE(far.warning.empty());
}

TEST(Generating, TaylorCoefficientsAreMoments) {
    const auto x = AxisGrid::symmetric(12.0, 481);
    for (const StateSpec &s : {StateSpec{FockOne{}}, StateSpec{Coherent{1.0, 0.5}}})
        for (const auto &f : {FrameParameters{1.0, 0.0, 0.0}, frame_from_squeezer(0.2, 1.0), FrameParameters{0.5, 1.0, -0.7}}) {
            const auto slice = forward_marginal(spectrum_of(s), f, x);
            const auto t = generating_taylor(spectrum_of(s), f);
            EXPECT_NEAR(t.d1, moment(slice, x, 1), 1e-3);
            EXPECT_NEAR(t.d2, moment(slice, x, 2), 1e-3);
        }
}

TEST(Generating, WignerFromGeneratingGrid) {
    const auto axis = AxisGrid::symmetric(16.0, 129);
    const auto grid = PhaseSpaceGrid::square(6.0, 49);
    const auto &sp = spectrum_of(FockOne{});
    const auto w = wigner_from_generating(generating_grid(sp.wigner(), axis, axis), grid);
    double err = 0.0;
    for (std::size_t i = 0; i < grid.q.n(); ++i)
        for (std::size_t j = 0; j < grid.p.n(); ++j)
            err = std::max(err, std::abs(w(i, j) - wigner_at(FockOne{}, grid.q[i], grid.p[j], 0.0)));
    EXPECT_LT(err, 1e-6);
}

TEST(Generating, TruncatedGridFailsBandwidth) {
    const auto axis = AxisGrid::symmetric(3.0, 25);
    const auto &sp = spectrum_of(Ground{});
    expect_error([&] { wigner_from_generating(generating_grid(sp.wigner(), axis, axis), PhaseSpaceGrid::square(4.0, 33)); },
                 ErrorCode::NumericAccuracy, "bandwidth");
}

}  // namespace
}  // namespace symtomo
