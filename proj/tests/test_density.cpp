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

#include "symtomo/density.hpp"
#include "symtomo/spectrum.hpp"
#include "symtomo/states.hpp"
#include "symtomo/tomography.hpp"
#include "test_util.hpp"

namespace symtomo {
namespace {

using testing::expect_error;
using testing::kPi;

const FullTomogram &tomogram_of(const StateSpec &s) {
    static std::map<std::string, std::unique_ptr<FullTomogram>> cache;
    auto &slot = cache[state_to_json(s)];
    if (!slot) {
        const WignerSpectrum sp(sample_wigner(s, PhaseSpaceGrid::square(8.0, 256), 0.0));
        slot = std::make_unique<FullTomogram>(forward_full(sp, FullGridAxes{}));
    }
    return *slot;
}

// W(q, p) = integral dy rho(q + y/2, q - y/2) exp(-i p y), evaluated at q nodes
// with y = 2 m dq so that both arguments stay on nodes.
double wigner_from_density(const DensityMatrix &rho, std::size_t i, double p) {
    const auto &q = rho.q();
    const double dy = 2.0 * q.spacing();
    Complex acc = 0.0;
    for (long m = -static_cast<long>(q.n()); m <= static_cast<long>(q.n()); ++m) {
        const long a = static_cast<long>(i) + m, b = static_cast<long>(i) - m;
        if (a < 0 || b < 0 || a >= static_cast<long>(q.n()) || b >= static_cast<long>(q.n())) continue;
        acc += rho(a, b) * std::polar(1.0, -p * m * dy);
    }
    return acc.real() * dy;
}

TEST(Density, DefaultAxis) {
    const auto q = density_axis(tomogram_of(Ground{}));
    EXPECT_EQ(q.n(), 33u);
    EXPECT_NEAR(q.max(), 6.0, 1e-12);
    EXPECT_NEAR(q.spacing(), 0.375, 1e-12);
}

TEST(Density, PureStateInvariants) {
    for (const StateSpec &s : {StateSpec{Ground{}}, StateSpec{FockOne{}}, StateSpec{Coherent{1.0, 0.5}},
                               StateSpec{OddCat{2.0, 0.0}}}) {
        const auto rho = reconstruct_density(tomogram_of(s));
        EXPECT_NEAR(rho.trace(), 1.0, 1e-4) << state_key(s);
        EXPECT_LT(rho.hermiticity_error(), 1e-8);
        EXPECT_NEAR(rho.purity(), 1.0, 1e-2);
        const auto ev = rho.eigenvalues();
        EXPECT_NEAR(ev.back(), 1.0, 1e-3);
        EXPECT_GT(ev.front(), -1e-3);
    }
}

TEST(Density, MatchesWavefunctionProduct) {
    for (const StateSpec &s : {StateSpec{FockOne{}}, StateSpec{Coherent{1.0, 0.5}}}) {
        const auto rho = reconstruct_density(tomogram_of(s));
        double err = 0.0;
        for (std::size_t i = 0; i < rho.n(); ++i)
            for (std::size_t j = 0; j < rho.n(); ++j)
                err = std::max(err, std::abs(rho(i, j) - *wavefunction_at(s, rho.q()[i]) *
                                                             std::conj(*wavefunction_at(s, rho.q()[j]))));
        EXPECT_LT(err, 1e-4) << state_key(s);
    }
}

TEST(Density, WignerTransformOfDensityReproducesWigner) {
    for (const StateSpec &s : {StateSpec{FockOne{}}, StateSpec{Coherent{1.0, 0.5}}}) {
        const auto rho = reconstruct_density(tomogram_of(s));
        double err = 0.0;
        for (std::size_t i = 8; i + 8 < rho.n(); i += 2)
            for (double p : {-1.5, -0.4, 0.0, 0.7, 1.6})
                err = std::max(err, std::abs(wigner_from_density(rho, i, p) - wigner_at(s, rho.q()[i], p, 0.0)));
        EXPECT_LT(err, 1e-3) << state_key(s);
    }
}

TEST(Density, ExplicitAxisAndCoverage) {
    const auto &t = tomogram_of(Ground{});
    const auto rho = reconstruct_density(t, AxisGrid::symmetric(3.0, 17));
    EXPECT_NEAR(rho.position_moment(2), 0.5, 1e-3);
    expect_error([&] { reconstruct_density(t, AxisGrid::symmetric(9.0, 49)); }, ErrorCode::Validation, "coverage");
    expect_error([&] { reconstruct_density(t, AxisGrid::symmetric(3.0, 20)); }, ErrorCode::Validation, "coverage");
}

TEST(Density, ExpectationOfVacuum) {
    const auto rho = reconstruct_density(tomogram_of(Ground{}));
    std::vector<Complex> psi(rho.n());
    for (std::size_t k = 0; k < rho.n(); ++k) psi[k] = *wavefunction_at(Ground{}, rho.q()[k]);
    EXPECT_NEAR(rho.expectation(psi), 1.0, 1e-4);
    psi.pop_back();
    expect_error([&] { rho.expectation(psi); }, ErrorCode::Validation, "dimension");
}

}  // namespace
}  // namespace symtomo
