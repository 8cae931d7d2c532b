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

#include "symtomo/tomography.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "symtomo/error.hpp"

namespace symtomo {

namespace {

constexpr double kPi = std::numbers::pi;

// Samples of W_F(k mu, k nu) at k = j * dk, j >= 0, in the direction of the frame.
struct Ray {
    double dk = 0.0;
    double support = 0.0;  // |x - delta| beyond which the marginal vanishes
    std::vector<Complex> g;
};

Ray sample_ray(const WignerSpectrum &spectrum, const FrameParameters &frame, const ForwardOptions &opt) {
    const auto &w = spectrum.wigner();
    Ray ray;
    ray.support = std::abs(frame.mu) * w.axis0().max() + std::abs(frame.nu) * w.axis1().max();
    ray.dk = 2.0 * kPi / (3.0 * ray.support);

    auto value = [&](double k) -> std::optional<Complex> {
        const double a = k * frame.mu, b = k * frame.nu;
        if (std::abs(a) > spectrum.nyquist_a() || std::abs(b) > spectrum.nyquist_b()) return std::nullopt;
        if (opt.method == RayMethod::Exact) return spectrum.direct(a, b);
        return spectrum.lookup(a, b);
    };

    auto g0 = value(0.0);
    if (!g0) throw_numeric("insufficient-bandwidth", "spectrum origin is not resolvable");
    ray.g.push_back(*g0);
    const double scale = std::abs(*g0);
    const double floor = 1e-15 * scale, bandwidth = 1e-12 * scale;
    int quiet = 0;
    for (std::size_t j = 1;; ++j) {
        auto v = value(static_cast<double>(j) * ray.dk);
        if (!v) {
            double tail = 0.0;
            for (std::size_t b = ray.g.size() >= 3 ? ray.g.size() - 3 : 0; b < ray.g.size(); ++b)
                tail = std::max(tail, std::abs(ray.g[b]));
            if (tail > bandwidth) {
                std::ostringstream os;
                os << "ray of frame (" << frame.mu << ", " << frame.nu << ") leaves the conjugate grid at |W_F| = "
                   << tail / scale << " of W_F(0); refine or enlarge the phase-space grid";
                throw_numeric("insufficient-bandwidth", os.str());
            }
            break;
        }
        ray.g.push_back(*v);
        quiet = std::abs(*v) < floor ? quiet + 1 : 0;
        if (quiet >= 3) break;
    }
    return ray;
}

void evaluate_ray(const Ray &ray, double delta, const AxisGrid &x, std::span<double> out) {
    const double reach = 1.5 * ray.support;
    for (std::size_t m = 0; m < x.n(); ++m) {
        const double u = x[m] - delta;
        if (std::abs(u) > reach) {
            out[m] = 0.0;
            continue;
        }
        const Complex step = std::polar(1.0, -ray.dk * u);
        Complex phase = step;
        double acc = 0.0;
        for (std::size_t j = 1; j < ray.g.size(); ++j) {
            acc += (phase * ray.g[j]).real();
            phase *= step;
        }
        out[m] = ray.dk * (ray.g[0].real() + 2.0 * acc);
    }
}

// Frame (0, 0): X = 0 identically. Stored as a hat of unit trapezoid mass.
void discrete_delta(const AxisGrid &x, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    if (!x.contains(0.0)) throw_validation("coverage", "x axis must contain 0 for the (0, 0) frame");
    double u = std::clamp(-x.min() / x.spacing(), 0.0, static_cast<double>(x.n() - 1));
    auto k = static_cast<std::size_t>(std::floor(u));
    double t = u - static_cast<double>(k);
    if (k + 1 >= x.n()) k = x.n() - 2, t = 1.0;
    // End nodes carry half trapezoid weight.
    auto weight = [&](std::size_t i) { return (i == 0 || i + 1 == x.n()) ? 0.5 : 1.0; };
    out[k] = (1.0 - t) / (x.spacing() * weight(k));
    out[k + 1] += t / (x.spacing() * weight(k + 1));
}

Eigen::MatrixXcd phase_matrix(const AxisGrid &out, const AxisGrid &frames, double z) {
    auto w = trapezoid_weights(frames);
    Eigen::MatrixXcd m(out.n(), frames.n());
    for (std::size_t a = 0; a < out.n(); ++a)
        for (std::size_t i = 0; i < frames.n(); ++i) m(a, i) = std::polar(w[i], z * frames[i] * out[a]);
    return m;
}

ScalarField2D reconstruct(const FullTomogram &t, const PhaseSpaceGrid &grid, double z) {
    if (!(z > 0.0) || !std::isfinite(z)) throw_validation("invalid-argument", "z must be positive");
    auto c = characteristic_slice(t, z);
    Eigen::MatrixXcd cm(t.mu().n(), t.nu().n());
    for (std::size_t i = 0; i < t.mu().n(); ++i)
        for (std::size_t j = 0; j < t.nu().n(); ++j) cm(i, j) = c(i, j);
    Eigen::MatrixXcd r = phase_matrix(grid.q, t.mu(), z) * cm * phase_matrix(grid.p, t.nu(), z).transpose();
    ScalarField2D w(grid.q, grid.p);
    const double pref = z * z / (2.0 * kPi);
    for (std::size_t a = 0; a < grid.q.n(); ++a)
        for (std::size_t b = 0; b < grid.p.n(); ++b) w(a, b) = pref * r(a, b).real();
    return w;
}

}  // namespace

std::vector<double> forward_marginal(const WignerSpectrum &spectrum, const FrameParameters &frame,
                                     const AxisGrid &x_axis, const ForwardOptions &options) {
    validate_frame(frame);
    std::vector<double> out(x_axis.n());
    evaluate_ray(sample_ray(spectrum, frame, options), frame.delta, x_axis, out);
    return out;
}

FrameSlices forward_slices(const WignerSpectrum &spectrum, const std::vector<FrameParameters> &frames,
                           const AxisGrid &x_axis, const ForwardOptions &options) {
    FrameSlices s{frames, x_axis, {}};
    s.values.reserve(frames.size());
    for (const auto &f : frames) s.values.push_back(forward_marginal(spectrum, f, x_axis, options));
    return s;
}

std::vector<double> radon_marginal(const WignerSpectrum &spectrum, double phi, const AxisGrid &x_axis) {
    if (!(phi >= 0.0 && phi < kPi)) throw_validation("invalid-argument", "phi must lie in [0, pi)");
    return forward_marginal(spectrum, homodyne_frame(phi), x_axis);
}

FullTomogram forward_full(const WignerSpectrum &spectrum, const FullGridAxes &axes, const ForwardOptions &options) {
    FullTomogram t{ScalarField3D(axes.mu, axes.nu, axes.x)};
    const std::size_t nm = axes.mu.n(), nn = axes.nu.n(), nx = axes.x.n();
    const bool mirror = axes.mu.is_symmetric() && axes.nu.is_symmetric() && axes.x.is_symmetric();
    for (std::size_t i = 0; i < nm; ++i) {
        for (std::size_t j = 0; j < nn; ++j) {
            const std::size_t mi = nm - 1 - i, mj = nn - 1 - j;
            if (mirror && mi * nn + mj < i * nn + j) {
                auto src = t.values.line(mi, mj);
                auto dst = t.values.line(i, j);
                for (std::size_t k = 0; k < nx; ++k) dst[k] = src[nx - 1 - k];
                continue;
            }
            FrameParameters f{axes.mu[i], axes.nu[j], 0.0};
            const bool origin = std::abs(f.mu) < 1e-12 * axes.mu.spacing() && std::abs(f.nu) < 1e-12 * axes.nu.spacing();
            if (origin)
                discrete_delta(axes.x, t.values.line(i, j));
            else
                evaluate_ray(sample_ray(spectrum, f, options), 0.0, axes.x, t.values.line(i, j));
        }
    }
    return t;
}

FullTomogram sample_full(const StateSpec &state, const FullGridAxes &axes, double t) {
    FullTomogram out{ScalarField3D(axes.mu, axes.nu, axes.x)};
    for (std::size_t i = 0; i < axes.mu.n(); ++i)
        for (std::size_t j = 0; j < axes.nu.n(); ++j) {
            auto line = out.values.line(i, j);
            const FrameParameters f{axes.mu[i], axes.nu[j], 0.0};
            if (std::abs(f.mu) < 1e-12 * axes.mu.spacing() && std::abs(f.nu) < 1e-12 * axes.nu.spacing()) {
                discrete_delta(axes.x, line);
                continue;
            }
            for (std::size_t k = 0; k < axes.x.n(); ++k) line[k] = marginal_at(state, axes.x[k], f, t);
        }
    return out;
}

ComplexField2D characteristic_slice(const FullTomogram &t, double z) {
    const auto &x = t.x();
    auto wx = trapezoid_weights(x);
    std::vector<Complex> phase(x.n());
    for (std::size_t k = 0; k < x.n(); ++k) phase[k] = std::polar(wx[k], -z * x[k]);
    ComplexField2D c(t.mu(), t.nu());
    for (std::size_t i = 0; i < t.mu().n(); ++i)
        for (std::size_t j = 0; j < t.nu().n(); ++j) {
            auto line = t.values.line(i, j);
            Complex acc = 0.0;
            for (std::size_t k = 0; k < x.n(); ++k) acc += line[k] * phase[k];
            c(i, j) = acc;
        }
    return c;
}

double wigner_norm(const ScalarField2D &w) {
    auto wq = trapezoid_weights(w.axis0());
    auto wp = trapezoid_weights(w.axis1());
    double acc = 0.0;
    for (std::size_t i = 0; i < w.axis0().n(); ++i)
        for (std::size_t j = 0; j < w.axis1().n(); ++j) acc += wq[i] * wp[j] * w(i, j);
    return acc / (2.0 * kPi);
}

ScalarField2D inverse_wigner(const FullTomogram &tomogram, const PhaseSpaceGrid &grid, double z) {
    auto w = reconstruct(tomogram, grid, z);
    const double norm = wigner_norm(w);
    if (std::abs(norm - 1.0) > 1e-2) {
        std::ostringstream os;
        os << "reconstructed Wigner normalization is " << norm << "; the tomogram grid does not cover the state";
        throw_numeric("accuracy", os.str());
    }
    return w;
}

OvercompletenessReport overcompleteness(const FullTomogram &tomogram, const PhaseSpaceGrid &grid) {
    OvercompletenessReport rep;
    const double dmax = std::max(tomogram.mu().spacing(), tomogram.nu().spacing());
    rep.window = std::min({kPi / (2.0 * dmax), grid.q.max(), grid.p.max()});
    auto w1 = reconstruct(tomogram, grid, 1.0);
    auto wh = reconstruct(tomogram, grid, 0.5);
    auto w2 = reconstruct(tomogram, grid, 2.0);
    for (std::size_t a = 0; a < grid.q.n(); ++a)
        for (std::size_t b = 0; b < grid.p.n(); ++b) {
            if (std::abs(grid.q[a]) > rep.window || std::abs(grid.p[b]) > rep.window) continue;
            rep.max_diff_half = std::max(rep.max_diff_half, std::abs(wh(a, b) - w1(a, b)));
            rep.max_diff_two = std::max(rep.max_diff_two, std::abs(w2(a, b) - w1(a, b)));
        }
    return rep;
}

}  // namespace symtomo
