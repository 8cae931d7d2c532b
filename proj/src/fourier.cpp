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

#include "symtomo/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>

#include "symtomo/error.hpp"

namespace symtomo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class FftwPlan {
  public:
    FftwPlan(const std::vector<int> &dims, Complex *data, int sign) {
        auto *p = reinterpret_cast<fftw_complex *>(data);
        plan_ = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), p, p,
                              sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!plan_) throw_numeric("fft", "FFTW failed to create a plan");
    }
    FftwPlan(const FftwPlan &) = delete;
    FftwPlan &operator=(const FftwPlan &) = delete;
    ~FftwPlan() { fftw_destroy_plan(plan_); }
    void execute() const { fftw_execute(plan_); }

  private:
    fftw_plan plan_;
};

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw_validation("invalid-argument", "Fourier sign must be +1 or -1");
}

void check_pair(const AxisGrid &in, const AxisGrid &out) {
    if (!is_conjugate_pair(in, out))
        throw_validation("unsupported-grid", "output axis is not the conjugate of the input axis");
}

// Phase factors for one axis: pre[k] multiplies input sample k, post[m] the
// output sample m (and carries the h / 2pi prefactor).
struct AxisPhases {
    std::vector<Complex> pre, post;
};

AxisPhases axis_phases(const AxisGrid &in, const AxisGrid &out, int sign) {
    const std::size_t n = in.n();
    AxisPhases ph{std::vector<Complex>(n), std::vector<Complex>(n)};
    const double s = static_cast<double>(sign);
    for (std::size_t k = 0; k < n; ++k) {
        ph.pre[k] = std::polar(1.0, s * static_cast<double>(k) * in.spacing() * out.min());
        ph.post[k] = std::polar(in.spacing() / kTwoPi, s * in.min() * out[k]);
    }
    return ph;
}

// Transform of a row-major array with the given axes.
std::vector<Complex> transform_nd(std::vector<Complex> data, const std::vector<AxisGrid> &in,
                                  const std::vector<AxisGrid> &out, int sign) {
    check_sign(sign);
    const std::size_t rank = in.size();
    std::vector<AxisPhases> phases;
    std::vector<int> dims;
    for (std::size_t d = 0; d < rank; ++d) {
        check_pair(in[d], out[d]);
        phases.push_back(axis_phases(in[d], out[d], sign));
        dims.push_back(static_cast<int>(in[d].n()));
    }
    auto apply = [&](bool pre) {
        std::vector<std::size_t> idx(rank, 0);
        for (std::size_t flat = 0; flat < data.size(); ++flat) {
            Complex f = 1.0;
            for (std::size_t d = 0; d < rank; ++d) f *= pre ? phases[d].pre[idx[d]] : phases[d].post[idx[d]];
            data[flat] *= f;
            for (std::size_t d = rank; d-- > 0;) {
                if (++idx[d] < in[d].n()) break;
                idx[d] = 0;
            }
        }
    };
    apply(true);
    FftwPlan plan(dims, data.data(), sign);
    plan.execute();
    apply(false);
    return data;
}

}  // namespace

AxisGrid conjugate_axis(const AxisGrid &axis) {
    const std::size_t n = axis.n();
    const double da = kTwoPi / (static_cast<double>(n) * axis.spacing());
    const double lo = -static_cast<double>(n / 2) * da;
    return AxisGrid(lo, lo + static_cast<double>(n - 1) * da, n);
}

bool is_conjugate_pair(const AxisGrid &in, const AxisGrid &out, double tol) {
    if (in.n() != out.n()) return false;
    double product = in.spacing() * out.spacing() * static_cast<double>(in.n());
    return std::abs(product - kTwoPi) <= tol * kTwoPi;
}

std::vector<Complex> fourier_1d(std::span<const Complex> f, const AxisGrid &in, int sign, const AxisGrid &out) {
    if (f.size() != in.n()) throw_validation("dimension", "fourier_1d: sample count does not match axis");
    return transform_nd(std::vector<Complex>(f.begin(), f.end()), {in}, {out}, sign);
}

ComplexField2D fourier_2d(const ComplexField2D &field, int sign) {
    return fourier_2d(field, sign, conjugate_axis(field.axis0()), conjugate_axis(field.axis1()));
}

ComplexField2D fourier_2d(const ComplexField2D &field, int sign, const AxisGrid &out0, const AxisGrid &out1) {
    auto v = field.values();
    auto r = transform_nd(std::vector<Complex>(v.begin(), v.end()), {field.axis0(), field.axis1()}, {out0, out1},
                          sign);
    return ComplexField2D(out0, out1, std::move(r));
}

ComplexField3D fourier_3d(const ScalarField3D &field, int sign) {
    auto v = field.values();
    ComplexField3D c(field.axis0(), field.axis1(), field.axis2(), std::vector<Complex>(v.begin(), v.end()));
    return fourier_3d(c, sign);
}

ComplexField3D fourier_3d(const ComplexField3D &field, int sign) {
    return fourier_3d(field, sign, conjugate_axis(field.axis0()), conjugate_axis(field.axis1()),
                      conjugate_axis(field.axis2()));
}

ComplexField3D fourier_3d(const ComplexField3D &field, int sign, const AxisGrid &out0, const AxisGrid &out1,
                          const AxisGrid &out2) {
    auto v = field.values();
    auto r = transform_nd(std::vector<Complex>(v.begin(), v.end()), {field.axis0(), field.axis1(), field.axis2()},
                          {out0, out1, out2}, sign);
    return ComplexField3D(out0, out1, out2, std::move(r));
}

void periodic_dft(std::span<Complex> data, int sign) {
    check_sign(sign);
    FftwPlan plan({static_cast<int>(data.size())}, data.data(), sign);
    plan.execute();
}

}  // namespace symtomo
