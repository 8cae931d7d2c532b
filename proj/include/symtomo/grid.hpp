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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace symtomo {

using Complex = std::complex<double>;

/// Uniform sampling of one continuous variable: min + k*spacing, k = 0..n-1.
class AxisGrid {
  public:
    static constexpr std::size_t kMinSamples = 8;

    AxisGrid(double min, double max, std::size_t n);

    /// Symmetric axis [-half_width, half_width].
    static AxisGrid symmetric(double half_width, std::size_t n);

    double min() const noexcept { return min_; }
    double max() const noexcept { return max_; }
    std::size_t n() const noexcept { return n_; }
    double spacing() const noexcept { return spacing_; }
    double operator[](std::size_t k) const noexcept { return min_ + static_cast<double>(k) * spacing_; }

    bool is_symmetric(double tol = 1e-12) const noexcept;
    bool contains(double v, double tol = 1e-12) const noexcept;
    /// Index of the node equal to `v` (within tol*spacing), or -1.
    long node_index(double v, double tol = 1e-9) const noexcept;

    std::vector<double> samples() const;

    bool operator==(const AxisGrid &o) const noexcept;

  private:
    double min_, max_;
    std::size_t n_;
    double spacing_;
};

/// Phase-space (q, p) grid. Both axes are symmetric about zero.
struct PhaseSpaceGrid {
    AxisGrid q;
    AxisGrid p;

    PhaseSpaceGrid(AxisGrid q_axis, AxisGrid p_axis);
    static PhaseSpaceGrid square(double half_width, std::size_t n);
};

/// Dense 2D field in row-major order: index (i, j) -> i * axis1.n() + j.
template <class T>
class Field2D {
  public:
    Field2D(AxisGrid a0, AxisGrid a1) : a0_(a0), a1_(a1), v_(a0.n() * a1.n()) {}
    Field2D(AxisGrid a0, AxisGrid a1, std::vector<T> values);

    const AxisGrid &axis0() const noexcept { return a0_; }
    const AxisGrid &axis1() const noexcept { return a1_; }
    T &operator()(std::size_t i, std::size_t j) noexcept { return v_[i * a1_.n() + j]; }
    const T &operator()(std::size_t i, std::size_t j) const noexcept { return v_[i * a1_.n() + j]; }
    std::span<T> values() noexcept { return v_; }
    std::span<const T> values() const noexcept { return v_; }
    double cell_area() const noexcept { return a0_.spacing() * a1_.spacing(); }

  private:
    AxisGrid a0_, a1_;
    std::vector<T> v_;
};

using ScalarField2D = Field2D<double>;
using ComplexField2D = Field2D<Complex>;

/// Dense 3D field, row-major: (i, j, k) -> (i * n1 + j) * n2 + k.
template <class T>
class Field3D {
  public:
    Field3D(AxisGrid a0, AxisGrid a1, AxisGrid a2)
        : a0_(a0), a1_(a1), a2_(a2), v_(a0.n() * a1.n() * a2.n()) {}
    Field3D(AxisGrid a0, AxisGrid a1, AxisGrid a2, std::vector<T> values);

    const AxisGrid &axis0() const noexcept { return a0_; }
    const AxisGrid &axis1() const noexcept { return a1_; }
    const AxisGrid &axis2() const noexcept { return a2_; }
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return (i * a1_.n() + j) * a2_.n() + k;
    }
    T &operator()(std::size_t i, std::size_t j, std::size_t k) noexcept { return v_[index(i, j, k)]; }
    const T &operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return v_[index(i, j, k)];
    }
    /// Contiguous run along the last axis at (i, j).
    std::span<T> line(std::size_t i, std::size_t j) noexcept {
        return std::span<T>(v_).subspan(index(i, j, 0), a2_.n());
    }
    std::span<const T> line(std::size_t i, std::size_t j) const noexcept {
        return std::span<const T>(v_).subspan(index(i, j, 0), a2_.n());
    }
    std::span<T> values() noexcept { return v_; }
    std::span<const T> values() const noexcept { return v_; }

  private:
    AxisGrid a0_, a1_, a2_;
    std::vector<T> v_;
};

using ScalarField3D = Field3D<double>;
using ComplexField3D = Field3D<Complex>;

/// Trapezoidal rule over the axis. Throws a dimension error on length mismatch.
double integrate_1d(std::span<const double> field, const AxisGrid &axis);

/// Trapezoidal weights (spacing, with halved end points).
std::vector<double> trapezoid_weights(const AxisGrid &axis);

}  // namespace symtomo
