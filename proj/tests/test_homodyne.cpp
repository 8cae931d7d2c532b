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

#include "symtomo/homodyne.hpp"
#include "symtomo/random.hpp"
#include "symtomo/states.hpp"
#include "test_util.hpp"

namespace symtomo {
namespace {

using testing::expect_error;
using testing::kPi;

TEST(Random, CounterRngIsReproducible) {
    CounterRng a(42), b(42), c(43);
    EXPECT_EQ(a.bits(7), b.bits(7));
    EXPECT_NE(a.bits(7), c.bits(7));
    EXPECT_NE(a.bits(7), a.bits(8));
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const double u = a.uniform(k);
        EXPECT_GT(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(Random, UniformMoments) {
    CounterRng r(1);
    double s = 0.0, s2 = 0.0;
    const int n = 200000;
    for (int k = 0; k < n; ++k) {
        const double u = r.uniform(k);
        s += u;
        s2 += u * u;
    }
    EXPECT_NEAR(s / n, 0.5, 5.0 * std::sqrt(1.0 / 12.0 / n));
    EXPECT_NEAR(s2 / n, 1.0 / 3.0, 5e-3);
}

TEST(Random, NormalQuantile) {
    EXPECT_NEAR(normal_quantile(0.5), 0.0, 1e-14);
    EXPECT_NEAR(normal_quantile(0.975), 1.959963984540054, 1e-12);
    EXPECT_NEAR(normal_quantile(1e-10), -6.361340902404056, 1e-9);
    for (double u : {1e-6, 0.01, 0.3, 0.77, 0.999})
        EXPECT_NEAR(0.5 * std::erfc(-normal_quantile(u) / std::sqrt(2.0)), u, 1e-13 + 1e-12 * u);
}

TEST(Homodyne, SamplesFollowTheMarginal) {
    const auto s = sample_homodyne(Coherent{1.0, 0.0}, 50000, 9);
    ASSERT_EQ(s.size(), 50000u);
    // <x_phi> = cos(phi), var = 1/2: check the mean of x - cos(phi) and its spread.
    double m = 0.0, v = 0.0;
    for (const auto &e : s) {
        EXPECT_GE(e.phi, 0.0);
        EXPECT_LT(e.phi, kPi);
        const double d = e.x - std::cos(e.phi);
        m += d;
        v += d * d;
    }
    m /= s.size();
    v /= s.size();
    EXPECT_NEAR(m, 0.0, 5.0 * std::sqrt(0.5 / s.size()));
    EXPECT_NEAR(v, 0.5, 0.02);
}

TEST(Homodyne, TabulatedSamplerForFockState) {
    // <x^2> = 3/2 in every direction for n = 1.
    const auto s = sample_homodyne(FockOne{}, 40000, 5);
    double x2 = 0.0;
    for (const auto &e : s) x2 += e.x * e.x;
    EXPECT_NEAR(x2 / s.size(), 1.5, 0.05);
}

TEST(Homodyne, SameSeedSameSamples) {
    const auto a = sample_homodyne(OddCat{1.0, 0.5}, 100, 77);
    const auto b = sample_homodyne(OddCat{1.0, 0.5}, 100, 77);
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].x, b[k].x);
        EXPECT_EQ(a[k].phi, b[k].phi);
    }
}

TEST(Homodyne, ReconstructsVacuum) {
    const auto q = AxisGrid::symmetric(5.0, 41);
    const auto r = homodyne_reconstruct(sample_homodyne(Ground{}, 30000, 3), q);
    std::vector<Complex> psi(q.n());
    for (std::size_t k = 0; k < q.n(); ++k) psi[k] = *wavefunction_at(Ground{}, q[k]);
    EXPECT_GT(r.rho.expectation(psi), 0.95);
    EXPECT_NEAR(r.rho.trace(), 1.0, 0.05);
    EXPECT_LT(r.rho.hermiticity_error(), 1e-12);
    EXPECT_TRUE(r.warnings.empty());
}

TEST(Homodyne, LowCutoffWarns) {
    const auto q = AxisGrid::symmetric(5.0, 41);
    const auto r = homodyne_reconstruct(sample_homodyne(Ground{}, 2000, 3), q, 1.5);
    EXPECT_NEAR(r.cutoff_fidelity, 1.0 - std::exp(-1.125), 1e-12);
    EXPECT_FALSE(r.warnings.empty());
}

TEST(Homodyne, EmptyInput) {
    std::vector<HomodyneSample> none;
    expect_error([&] { homodyne_reconstruct(none, AxisGrid::symmetric(5.0, 41)); }, ErrorCode::Validation, "input");
}

}  // namespace
}  // namespace symtomo
