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

#include "symtomo/evolution.hpp"
#include "symtomo/spectrum.hpp"
#include "symtomo/states.hpp"
#include "test_util.hpp"

namespace symtomo {
namespace {

using testing::expect_error;
using testing::gauss;
using testing::kPi;
using testing::max_abs_diff;

TEST(Operator, Coefficients) {
    EXPECT_EQ(marginal_evolution_operator({0.0, 0.0, {}}).describe(), "mu d_nu");
    EXPECT_EQ(marginal_evolution_operator({1.0, 0.0, {}}).describe(), "mu d_nu - nu d_mu");
    EXPECT_EQ(marginal_evolution_operator({1.0, 2.0, {}}).describe(), "mu d_nu - nu d_mu - 2 nu d_x");
    const auto op = marginal_evolution_operator({0.5, 3.0, {}});
    EXPECT_DOUBLE_EQ(op.nu_mu, 1.0);
    EXPECT_DOUBLE_EQ(op.mu_nu, -0.25);
    EXPECT_DOUBLE_EQ(op.x_nu, -3.0);
}

TEST(Operator, PotentialValidation) {
    const auto h = HamiltonianSpec::from_potential({0.3, -2.0, 0.5});
    EXPECT_DOUBLE_EQ(h.omega, 1.0);
    EXPECT_DOUBLE_EQ(h.f, 2.0);
    EXPECT_NO_THROW(validate_hamiltonian(h));
    expect_error([] { HamiltonianSpec::from_potential({0.0, 0.0, 0.5, 0.1}); }, ErrorCode::Validation,
                 "nonlocal-potential");
    expect_error([] { validate_hamiltonian({1.0, 0.0, {0.0, 0.0, 2.0}}); }, ErrorCode::Validation,
                 "invalid-hamiltonian");
    expect_error([] { validate_hamiltonian({-1.0, 0.0, {}}); }, ErrorCode::Validation, "invalid-hamiltonian");
}

TEST(Flow, QuarterPeriodMapsPositionToMomentum) {
    const FlowMap f({1.0, 0.0, {}}, kPi / 2.0);
    const auto r = f(0.7, 1.0, 0.0);
    EXPECT_NEAR(r[0], 0.7, 1e-15);
    EXPECT_NEAR(r[1], 0.0, 1e-15);
    EXPECT_NEAR(r[2], 1.0, 1e-15);
}

TEST(Flow, IdentityAtZeroTime) {
    for (const HamiltonianSpec &h : {HamiltonianSpec{1.0, 0.0, {}}, HamiltonianSpec{0.0, 2.0, {}}}) {
        const auto r = FlowMap(h, 0.0)(0.3, -1.2, 2.5);
        EXPECT_EQ(r[0], 0.3);
        EXPECT_EQ(r[1], -1.2);
        EXPECT_EQ(r[2], 2.5);
    }
}

TEST(Flow, MatchesClosedForm) {
    for (double w : {0.5, 1.0, 2.0})
        for (double tau : {0.3, 1.7}) {
            const double f = 1.5, mu = 0.8, nu = -0.6, x = 0.25;
            const auto r = FlowMap({w, f, {}}, tau)(x, mu, nu);
            const double c = std::cos(w * tau), s = std::sin(w * tau);
            EXPECT_NEAR(r[1], mu * c - w * nu * s, 1e-14);
            EXPECT_NEAR(r[2], nu * c + mu / w * s, 1e-14);
            EXPECT_NEAR(r[0], x - mu * f / (w * w) * (1.0 - c) - nu * f / w * s, 1e-14);
        }
}

TEST(Flow, FreeLimitIsContinuous) {
    const auto a = FlowMap({0.0, 2.0, {}}, 1.3)(0.4, 0.9, -0.2);
    const auto b = FlowMap({1e-7, 2.0, {}}, 1.3)(0.4, 0.9, -0.2);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(a[k], b[k], 1e-10);
    EXPECT_NEAR(a[2], -0.2 + 0.9 * 1.3, 1e-15);
    EXPECT_NEAR(a[0], 0.4 - 0.9 * 2.0 * 1.3 * 1.3 / 2.0 + 0.2 * 2.0 * 1.3, 1e-14);
}

TEST(Flow, AreaPreserving) {
    for (double w : {0.0, 0.5, 3.0}) EXPECT_NEAR(FlowMap({w, 1.0, {}}, 2.1).jacobian(), 1.0, 1e-12);
    expect_error([] { FlowMap({1.0, 0.0, {}}, -0.1); }, ErrorCode::Validation, "invalid-argument");
}

TEST(Flow, ComposesAsSemigroup) {
    const HamiltonianSpec h{0.7, -1.1, {}};
    const FlowMap a(h, 0.4), b(h, 1.9), ab(h, 2.3);
    const auto p = a(0.5, 1.2, -0.8);
    const auto r = b(p[0], p[1], p[2]);
    const auto s = ab(0.5, 1.2, -0.8);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(r[k], s[k], 1e-13);
}

// Free-motion ground state: variance (mu^2 (1 + t^2) + nu^2 + 2 mu nu t) / 2.
double free_ground(double x, double mu, double nu, double t) {
    return gauss(x, 0.0, 0.5 * (mu * mu * (1.0 + t * t) + nu * nu + 2.0 * mu * nu * t));
}

TEST(Slices, FreeDispersionFromSampledWigner) {
    const WignerSpectrum sp(sample_wigner(Ground{}, PhaseSpaceGrid::square(8.0, 256), 0.0));
    const SliceSource src = [&](const FrameParameters &f, const AxisGrid &x) { return forward_marginal(sp, f, x); };
    const auto x = AxisGrid::symmetric(15.0, 601);
    const std::vector<FrameParameters> frames{{1.0, 0.0, 0.0}, {0.5, -1.0, 0.0}};
    const auto ev = evolve_slices(src, frames, x, {0.0, 0.0, {}}, 1.0);
    for (std::size_t k = 0; k < frames.size(); ++k) {
        std::vector<double> expect(x.n());
        for (std::size_t m = 0; m < x.n(); ++m) expect[m] = free_ground(x[m], frames[k].mu, frames[k].nu, 1.0);
        EXPECT_LT(max_abs_diff(ev.values[k], expect), 1e-6);
    }
}

TEST(Slices, FrameOrderAndDeltaArePreserved) {
    const SliceSource src = [](const FrameParameters &f, const AxisGrid &x) {
        std::vector<double> v(x.n());
        for (std::size_t k = 0; k < x.n(); ++k) v[k] = marginal_at(Coherent{1.0, 0.0}, x[k], f, 0.0);
        return v;
    };
    const auto x = AxisGrid::symmetric(10.0, 201);
    const std::vector<FrameParameters> frames{{1.0, 0.0, 0.5}};
    const auto ev = evolve_slices(src, frames, x, {1.0, 0.0, {}}, 0.9);
    EXPECT_EQ(ev.frames[0].delta, 0.5);
    double m1 = 0.0;
    for (std::size_t k = 0; k < x.n(); ++k) m1 += x[k] * ev.values[0][k] * x.spacing();
    EXPECT_NEAR(m1, std::cos(0.9) + 0.5, 1e-10);
}

FullTomogram sampled(const StateSpec &s, const FullGridAxes &axes) { return sample_full(s, axes, 0.0); }

FullGridAxes coarse() {
    return {AxisGrid::symmetric(4.0, 65), AxisGrid::symmetric(4.0, 65), AxisGrid::symmetric(16.0, 257)};
}

TEST(Characteristics, GroundStationaryAtGridSymmetries) {
    const auto w0 = sampled(Ground{}, coarse());
    for (double t : {kPi / 2.0, kPi, 2.0 * kPi}) {
        const auto w = evolve_characteristics(w0, {1.0, 0.0, {}}, t);
        double err = 0.0;
        for (std::size_t k = 0; k < w.values.values().size(); ++k)
            err = std::max(err, std::abs(w.values.values()[k] - w0.values.values()[k]));
        EXPECT_LT(err, 1e-6) << t;
    }
}

TEST(Characteristics, InterpolationErrorOffSymmetry) {
    const auto w0 = sampled(Ground{}, coarse());
    CharacteristicsReport rep;
    const auto w = evolve_characteristics(w0, {1.0, 0.0, {}}, 0.3, &rep);
    EXPECT_GT(rep.out_of_bounds_fraction, 0.0);
    const auto line = w.values.line(48, 40);  // (2, 1)
    std::vector<double> expect(w.x().n());
    for (std::size_t k = 0; k < expect.size(); ++k) expect[k] = marginal_at(Ground{}, w.x()[k], {2.0, 1.0, 0.0}, 0.0);
    EXPECT_LT(max_abs_diff(std::vector<double>(line.begin(), line.end()), expect), 5e-3);
    EXPECT_NEAR(integrate_1d(line, w.x()), 1.0, 1e-4);
}

TEST(Characteristics, CoverageError) {
    const auto w0 = sampled(Ground{}, coarse());
    expect_error([&] { evolve_characteristics(w0, {0.0, 0.0, {}}, 3.0); }, ErrorCode::NumericAccuracy, "coverage");
}

TEST(ChapmanKolmogorov, TrivialSplits) {
    const auto w0 = sampled(Coherent{1.0, 0.0}, coarse());
    const HamiltonianSpec h{1.0, 0.0, {}};
    EXPECT_EQ(chapman_kolmogorov_check(w0, h, 1.0, 0.0), 0.0);
    EXPECT_LT(chapman_kolmogorov_check(w0, h, 1.0, 1.0), 1e-6);
    EXPECT_LT(chapman_kolmogorov_check(w0, h, kPi, kPi / 2.0), 1e-3);
    expect_error([&] { chapman_kolmogorov_check(w0, h, 1.0, 2.0); }, ErrorCode::Validation, "invalid-argument");
}

TEST(Residual, FreeSolutionSatisfiesFreeEquation) {
    const AxisGrid mu(0.5, 1.5, 21), nu(-0.5, 0.5, 21), x(-8.0, 8.0, 321);
    const double dt = 0.01;
    std::vector<FullTomogram> s;
    for (double t : {0.99, 1.0, 1.01}) {
        FullTomogram f{ScalarField3D(mu, nu, x)};
        for (std::size_t i = 0; i < mu.n(); ++i)
            for (std::size_t j = 0; j < nu.n(); ++j)
                for (std::size_t k = 0; k < x.n(); ++k) f.values(i, j, k) = free_ground(x[k], mu[i], nu[j], t);
        s.push_back(std::move(f));
    }
    EXPECT_LT(pde_residual(s, dt, HamiltonianSpec{0.0, 0.0, {}}), 1e-3);
    // The same samples violate the oscillator equation.
    EXPECT_GT(pde_residual(s, dt, HamiltonianSpec{1.0, 0.0, {}}), 1e-2);
    expect_error([&] { pde_residual(std::span(s).first(2), dt, HamiltonianSpec{}); }, ErrorCode::Validation, "input");
}

TEST(Residual, NuIndependentFieldIsStationaryUnderFreeMotion) {
    // Free motion only acts through mu d_nu, which vanishes when w does not depend on nu.
    const AxisGrid mu(0.5, 1.5, 11), nu(-1.0, 1.0, 11), x(-6.0, 6.0, 121);
    FullTomogram f{ScalarField3D(mu, nu, x)};
    for (std::size_t i = 0; i < mu.n(); ++i)
        for (std::size_t j = 0; j < nu.n(); ++j)
            for (std::size_t k = 0; k < x.n(); ++k) f.values(i, j, k) = gauss(x[k], 0.0, 0.5 * mu[i] * mu[i]);
    std::vector<FullTomogram> s{f, f, f};
    EXPECT_LT(pde_residual(s, 0.1, HamiltonianSpec{0.0, 0.0, {}}), 1e-12);
}

}  // namespace
}  // namespace symtomo
