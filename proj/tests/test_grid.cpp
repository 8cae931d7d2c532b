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

#include "symtomo/grid.hpp"
#include "test_util.hpp"

namespace symtomo {
namespace {

using testing::expect_error;

TEST(AxisGrid, SpacingAndNodes) {
    AxisGrid a(-2.0, 2.0, 9);
    EXPECT_DOUBLE_EQ(a.spacing(), 0.5);
    EXPECT_DOUBLE_EQ(a[0], -2.0);
    EXPECT_DOUBLE_EQ(a[8], 2.0);
    EXPECT_TRUE(a.is_symmetric());
    EXPECT_EQ(a.node_index(0.5), 5);
    EXPECT_EQ(a.node_index(0.25), -1);
    EXPECT_TRUE(a.contains(2.0));
    EXPECT_FALSE(a.contains(2.01));
}

TEST(AxisGrid, RejectsBadAxes) {
    expect_error([] { AxisGrid(1.0, 1.0, 16); }, ErrorCode::Validation, "invalid-grid");
    expect_error([] { AxisGrid(0.0, 1.0, 4); }, ErrorCode::Validation, "invalid-grid");
    expect_error([] { AxisGrid(0.0, std::nan(""), 16); }, ErrorCode::Validation, "invalid-grid");
}

TEST(AxisGrid, SymmetricFactory) {
    auto a = AxisGrid::symmetric(3.0, 13);
    EXPECT_DOUBLE_EQ(a.min(), -3.0);
    EXPECT_DOUBLE_EQ(a.spacing(), 0.5);
    EXPECT_EQ(a.samples().size(), 13u);
}

TEST(PhaseSpaceGrid, RequiresSymmetricAxes) {
    EXPECT_NO_THROW(PhaseSpaceGrid::square(4.0, 33));
    expect_error([] { PhaseSpaceGrid(AxisGrid(0.0, 4.0, 33), AxisGrid::symmetric(4.0, 33)); },
                 ErrorCode::Validation, "invalid-grid");
}

TEST(Integrate, TrapezoidIsExactForLines) {
    AxisGrid a(0.0, 3.0, 31);
    std::vector<double> f(a.n());
    for (std::size_t k = 0; k < a.n(); ++k) f[k] = 2.0 * a[k] + 1.0;
    EXPECT_NEAR(integrate_1d(f, a), 12.0, 1e-12);
}

TEST(Integrate, GaussianIsSpectrallyAccurate) {
    auto a = AxisGrid::symmetric(10.0, 81);
    std::vector<double> f(a.n());
    for (std::size_t k = 0; k < a.n(); ++k) f[k] = testing::gauss(a[k], 0.0, 1.0);
    EXPECT_NEAR(integrate_1d(f, a), 1.0, 1e-13);
}

TEST(Integrate, LengthMismatch) {
    auto a = AxisGrid::symmetric(1.0, 9);
    std::vector<double> f(8, 1.0);
    expect_error([&] { integrate_1d(f, a); }, ErrorCode::Validation, "dimension");
}

TEST(Field, RowMajorLayout) {
    Field3D<double> f(AxisGrid(0, 1, 8), AxisGrid(0, 1, 9), AxisGrid(0, 1, 10));
    f(2, 3, 4) = 7.0;
    EXPECT_EQ(f.index(2, 3, 4), (2u * 9 + 3) * 10 + 4);
    EXPECT_EQ(f.line(2, 3)[4], 7.0);
}

}  // namespace
}  // namespace symtomo
