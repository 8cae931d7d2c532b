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

#include "symtomo/grid.hpp"

#include <cmath>
#include <sstream>

#include "symtomo/error.hpp"

namespace symtomo {

AxisGrid::AxisGrid(double min, double max, std::size_t n) : min_(min), max_(max), n_(n), spacing_(0) {
    if (!std::isfinite(min) || !std::isfinite(max) || !(max > min)) {
        std::ostringstream os;
        os << "axis requires finite max > min, got [" << min << ", " << max << "]";
        throw_validation("invalid-grid", os.str());
    }
    if (n < kMinSamples) {
        std::ostringstream os;
        os << "axis requires at least " << kMinSamples << " samples, got " << n;
        throw_validation("invalid-grid", os.str());
    }
    spacing_ = (max - min) / static_cast<double>(n - 1);
}

AxisGrid AxisGrid::symmetric(double half_width, std::size_t n) { return AxisGrid(-half_width, half_width, n); }

bool AxisGrid::is_symmetric(double tol) const noexcept {
    return std::abs(min_ + max_) <= tol * std::max(1.0, std::abs(max_));
}

bool AxisGrid::contains(double v, double tol) const noexcept {
    double slack = tol * spacing_;
    return v >= min_ - slack && v <= max_ + slack;
}

long AxisGrid::node_index(double v, double tol) const noexcept {
    double u = (v - min_) / spacing_;
    double r = std::round(u);
    if (std::abs(u - r) > tol || r < 0 || r > static_cast<double>(n_ - 1)) return -1;
    return static_cast<long>(r);
}

std::vector<double> AxisGrid::samples() const {
    std::vector<double> out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = (*this)[k];
    return out;
}

bool AxisGrid::operator==(const AxisGrid &o) const noexcept {
    return n_ == o.n_ && min_ == o.min_ && max_ == o.max_;
}

PhaseSpaceGrid::PhaseSpaceGrid(AxisGrid q_axis, AxisGrid p_axis) : q(q_axis), p(p_axis) {
    if (!q.is_symmetric() || !p.is_symmetric())
        throw_validation("invalid-grid", "phase-space axes must be symmetric about 0");
}

PhaseSpaceGrid PhaseSpaceGrid::square(double half_width, std::size_t n) {
    return PhaseSpaceGrid(AxisGrid::symmetric(half_width, n), AxisGrid::symmetric(half_width, n));
}

template <class T>
Field2D<T>::Field2D(AxisGrid a0, AxisGrid a1, std::vector<T> values) : a0_(a0), a1_(a1), v_(std::move(values)) {
    if (v_.size() != a0_.n() * a1_.n()) throw_validation("dimension", "2D field value count does not match axes");
}

template <class T>
Field3D<T>::Field3D(AxisGrid a0, AxisGrid a1, AxisGrid a2, std::vector<T> values)
    : a0_(a0), a1_(a1), a2_(a2), v_(std::move(values)) {
    if (v_.size() != a0_.n() * a1_.n() * a2_.n())
        throw_validation("dimension", "3D field value count does not match axes");
}

template class Field2D<double>;
template class Field2D<Complex>;
template class Field3D<double>;
template class Field3D<Complex>;

std::vector<double> trapezoid_weights(const AxisGrid &axis) {
    std::vector<double> w(axis.n(), axis.spacing());
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

double integrate_1d(std::span<const double> field, const AxisGrid &axis) {
    if (field.size() != axis.n()) {
        std::ostringstream os;
        os << "integrate_1d: field has " << field.size() << " samples, axis has " << axis.n();
        throw_validation("dimension", os.str());
    }
    double interior = 0.0;
    for (std::size_t k = 1; k + 1 < field.size(); ++k) interior += field[k];
    return axis.spacing() * (interior + 0.5 * (field.front() + field.back()));
}

}  // namespace symtomo
