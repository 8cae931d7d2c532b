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

#include "symtomo/damped.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "symtomo/error.hpp"
#include "symtomo/fourier.hpp"

namespace symtomo {

namespace {

// Spectrum of one line at dilated wavenumbers,
// X_m = dx sum_j w_j exp(-i alpha k_m x_j), k_m on the conjugate axis of x,
// by Bluestein's chirp-z algorithm. The dilation is centred on x = delta.
std::vector<Complex> dilated_spectrum(std::span<const double> w, const AxisGrid &x, const AxisGrid &k,
                                      double alpha, double delta) {
    const std::size_t n = x.n();
    std::size_t len = 1;
    while (len < 2 * n - 1) len <<= 1;
    const double beta = alpha * k.spacing() * x.spacing();
    auto chirp = [&](double m) { return std::polar(1.0, 0.5 * beta * m * m); };
    std::vector<Complex> y(len, 0.0), c(len, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double dj = static_cast<double>(j);
        y[j] = w[j] * std::polar(1.0, -alpha * k.min() * dj * x.spacing()) * std::conj(chirp(dj));
        c[j] = chirp(dj);
        if (j > 0) c[len - j] = c[j];
    }
    periodic_dft(y, -1);
    periodic_dft(c, -1);
    for (std::size_t i = 0; i < len; ++i) y[i] *= c[i];
    periodic_dft(y, +1);
    std::vector<Complex> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double dm = static_cast<double>(m);
        const Complex pre = std::polar(x.spacing(), -alpha * k[m] * x.min());
        const Complex shift = std::polar(1.0, delta * k[m] * (alpha - 1.0));
        out[m] = pre * shift * std::conj(chirp(dm)) * y[m] / static_cast<double>(len);
    }
    return out;
}

// Inverse of the spectrum X_m back onto x: w(x) = (1/2pi) sum_m X_m e^{i k_m x} dk.
void to_line(const std::vector<Complex> &spec, const AxisGrid &k, const AxisGrid &x, std::span<double> out) {
    auto back = fourier_1d(spec, k, +1, x);
    for (std::size_t l = 0; l < x.n(); ++l) out[l] = back[l].real();
}

void drift(std::span<double> line, const AxisGrid &x, const AxisGrid &k, double alpha, double delta) {
    to_line(dilated_spectrum(line, x, k, alpha, delta), k, x, line);
}

void explicit_diffusion(std::span<double> line, double kappa) {
    std::vector<double> old(line.begin(), line.end());
    const std::size_t n = line.size();
    for (std::size_t l = 0; l < n; ++l) {
        const double left = l > 0 ? old[l - 1] : 0.0;
        const double right = l + 1 < n ? old[l + 1] : 0.0;
        line[l] = old[l] + kappa * (left - 2.0 * old[l] + right);
    }
}

void evolve_line(std::span<double> line, const AxisGrid &x, const AxisGrid &k, const FrameParameters &frame,
                 double gamma, double t, int steps, const DampedOptions &opt) {
    const double r2 = frame.scale_squared();
    const double tau = t / steps;
    const double diff = 0.25 * gamma * r2;  // D
    if (opt.diffusion == DiffusionScheme::Spectral) {
        // Drift substeps compose exactly; each diffusion substep j sees the
        // wavenumber dilated by the drift still to come, exp(-gamma (t - t_j) / 2).
        double acc = 0.0;
        for (int j = 0; j < steps; ++j) acc += std::exp(-gamma * (t - (j + 0.5) * tau));
        auto spec = dilated_spectrum(line, x, k, std::exp(-0.5 * gamma * t), frame.delta);
        for (std::size_t m = 0; m < k.n(); ++m) spec[m] *= std::exp(-diff * tau * acc * k[m] * k[m]);
        to_line(spec, k, x, line);
        return;
    }
    const double kappa = diff * tau / (x.spacing() * x.spacing());
    const double half = std::exp(-0.25 * gamma * tau);
    for (int j = 0; j < steps; ++j) {
        drift(line, x, k, half, frame.delta);
        explicit_diffusion(line, kappa);
        drift(line, x, k, half, frame.delta);
    }
}

void check_inputs(const DampingSpec &damping, double t, int steps) {
    validate_damping(damping);
    if (!(t >= 0.0) || !std::isfinite(t)) throw_validation("invalid-argument", "evolve_damped: t must be >= 0");
    if (steps < 1) throw_validation("invalid-argument", "evolve_damped: steps must be >= 1");
}

void check_cfl(double max_r2, const AxisGrid &x, const DampingSpec &d, double t, int steps,
               const DampedOptions &opt) {
    if (opt.diffusion != DiffusionScheme::Explicit) return;
    const double cfl = diffusion_cfl(max_r2, x, d.gamma, t, steps);
    if (cfl > 0.4) {
        std::ostringstream os;
        os << "explicit diffusion CFL number " << cfl << " exceeds 0.4; use at least "
           << static_cast<long>(std::ceil(steps * cfl / 0.4)) << " steps";
        throw_numeric("stability", os.str());
    }
}

}  // namespace

double diffusion_cfl(double max_r2, const AxisGrid &x, double gamma, double t, int steps) {
    return 0.25 * gamma * max_r2 * (t / steps) / (x.spacing() * x.spacing());
}

FullTomogram evolve_damped(const FullTomogram &w0, const DampingSpec &damping, double t, int steps,
                           const DampedOptions &options) {
    check_inputs(damping, t, steps);
    const auto &mu = w0.mu();
    const auto &nu = w0.nu();
    const double max_r2 = std::max(mu.min() * mu.min(), mu.max() * mu.max()) +
                          std::max(nu.min() * nu.min(), nu.max() * nu.max());
    check_cfl(max_r2, w0.x(), damping, t, steps, options);
    FullTomogram out = w0;
    const AxisGrid k = conjugate_axis(w0.x());
    for (std::size_t i = 0; i < mu.n(); ++i)
        for (std::size_t j = 0; j < nu.n(); ++j)
            evolve_line(out.values.line(i, j), w0.x(), k, FrameParameters{mu[i], nu[j], 0.0}, damping.gamma, t,
                        steps, options);
    return out;
}

FrameSlices evolve_damped(const FrameSlices &w0, const DampingSpec &damping, double t, int steps,
                          const DampedOptions &options) {
    check_inputs(damping, t, steps);
    double max_r2 = 0.0;
    for (const auto &f : w0.frames) max_r2 = std::max(max_r2, f.scale_squared());
    check_cfl(max_r2, w0.x, damping, t, steps, options);
    FrameSlices out = w0;
    const AxisGrid k = conjugate_axis(w0.x);
    for (std::size_t s = 0; s < out.frames.size(); ++s)
        evolve_line(out.values[s], w0.x, k, out.frames[s], damping.gamma, t, steps, options);
    return out;
}

std::vector<double> damped_exact(std::span<const double> line, const AxisGrid &x, const FrameParameters &frame,
                                 double gamma, double t) {
    if (line.size() != x.n()) throw_validation("dimension", "damped_exact: line length does not match axis");
    const AxisGrid k = conjugate_axis(x);
    auto spec = dilated_spectrum(line, x, k, std::exp(-0.5 * gamma * t), frame.delta);
    const double c = 0.25 * frame.scale_squared() * -std::expm1(-gamma * t);
    for (std::size_t m = 0; m < k.n(); ++m) spec[m] *= std::exp(-c * k[m] * k[m]);
    std::vector<double> out(x.n());
    to_line(spec, k, x, out);
    return out;
}

}  // namespace symtomo
