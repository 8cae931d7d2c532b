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

#include "symtomo/homodyne.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "symtomo/error.hpp"
#include "symtomo/random.hpp"

namespace symtomo {

namespace {

constexpr double kPi = std::numbers::pi;

// Inverse-CDF draw from a tabulated marginal.
double tabulated_draw(const StateSpec &state, const FrameParameters &frame, double t, double u) {
    constexpr std::size_t n = 801;
    double reach = 10.0;
    std::visit(
        [&](const auto &s) {
            if constexpr (requires { s.q0; }) reach += std::abs(s.q0) + std::abs(s.p0);
        },
        state);
    const AxisGrid x = AxisGrid::symmetric(reach, n);
    std::vector<double> cdf(n, 0.0);
    double prev = marginal_at(state, x[0], frame, t);
    for (std::size_t k = 1; k < n; ++k) {
        double cur = marginal_at(state, x[k], frame, t);
        cdf[k] = cdf[k - 1] + 0.5 * (prev + cur) * x.spacing();
        prev = cur;
    }
    const double target = u * cdf.back();
    auto it = std::lower_bound(cdf.begin(), cdf.end(), target);
    std::size_t k = std::clamp<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), 1, n - 1);
    const double span = cdf[k] - cdf[k - 1];
    const double frac = span > 0.0 ? (target - cdf[k - 1]) / span : 0.5;
    return x[k - 1] + frac * x.spacing();
}

// F(u) = integral_0^u t exp(i t a) dt, given eiua = exp(i u a).
inline Complex ramp_integral(double u, double a, Complex eiua) {
    const double z = a * u;
    if (std::abs(z) < 0.05) {
        // u^2 sum_n (i z)^n / (n! (n + 2)); eight terms reach double precision here.
        Complex term = 1.0, acc = 0.0;
        for (int k = 0; k < 8; ++k) {
            acc += term / static_cast<double>(k + 2);
            term *= Complex(0.0, z / static_cast<double>(k + 1));
        }
        return u * u * acc;
    }
    const double inv = 1.0 / a;
    return eiua * Complex(inv * inv, -u * inv) - inv * inv;
}

// integral_0^u |t| exp(i t a) dt
inline Complex abs_ramp_integral(double u, double a, Complex eiua) {
    Complex f = ramp_integral(u, a, eiua);
    return u < 0.0 ? -f : f;
}

}  // namespace

std::vector<HomodyneSample> sample_homodyne(const StateSpec &state, std::size_t count, std::uint64_t seed, double t) {
    validate_state(state);
    if (t < 0.0) throw_validation("invalid-argument", "sample_homodyne: t must be >= 0");
    CounterRng rng(seed);
    std::vector<HomodyneSample> out(count);
    const auto g = gaussian_moments(state, t);
    for (std::size_t i = 0; i < count; ++i) {
        const double phi = kPi * rng.uniform(2 * i);
        const double u = rng.uniform(2 * i + 1);
        const FrameParameters f = homodyne_frame(phi);
        double x;
        if (g)
            x = g->quadrature_mean(f) + std::sqrt(g->quadrature_variance(f)) * normal_quantile(u);
        else
            x = tabulated_draw(state, f, t, u);
        out[i] = {x, phi < kPi ? phi : 0.0};
    }
    return out;
}

double cutoff_vacuum_fidelity(double r_cutoff) { return -std::expm1(-0.5 * r_cutoff * r_cutoff); }

HomodyneReconstruction homodyne_reconstruct(std::span<const HomodyneSample> samples, const AxisGrid &q_axis,
                                            double r_cutoff) {
    if (samples.empty()) throw_validation("input", "homodyne_reconstruct: no samples");
    if (!(r_cutoff > 0.0) || !std::isfinite(r_cutoff)) throw_validation("invalid-argument", "r_cutoff must be positive");
    HomodyneReconstruction out{DensityMatrix(q_axis), cutoff_vacuum_fidelity(r_cutoff), {}};
    if (out.cutoff_fidelity < 0.9) {
        std::ostringstream os;
        os << "r_cutoff = " << r_cutoff << " limits vacuum fidelity to " << out.cutoff_fidelity << " (< 0.9)";
        out.warnings.push_back(os.str());
    }
    const std::size_t n = q_axis.n();
    const double h = q_axis.spacing();
    const double R = r_cutoff;
    const double weight = kPi / static_cast<double>(samples.size()) / (2.0 * kPi * h);
    auto &rho = out.rho;
    for (const auto &smp : samples) {
        if (!(smp.phi >= 0.0 && smp.phi < kPi) || !std::isfinite(smp.x))
            throw_validation("input", "homodyne sample needs finite x and phi in [0, pi)");
        const double c = std::cos(smp.phi), s = std::sin(smp.phi);
        for (std::size_t d = 0; d < n; ++d) {
            // Row k = l + d, so q_k - q_l = d h; the cell is [d h - h/2, d h + h/2].
            const double lo_cell = (static_cast<double>(d) - 0.5) * h;
            const double hi_cell = (static_cast<double>(d) + 0.5) * h;
            double u1, u2;
            if (s > 0.0) {
                u1 = std::max(lo_cell / s, -R);
                u2 = std::min(hi_cell / s, R);
            } else if (d == 0) {
                u1 = -R, u2 = R;
            } else {
                break;
            }
            if (u1 >= u2) {
                if (u1 > 0.0) break;  // larger d only moves the window further out
                continue;
            }
            // a = x - c (q_k + q_l) / 2 for l = 0, 1, ...; decreases by c h per step.
            double a = smp.x - c * (q_axis[d] + q_axis[0]) * 0.5;
            Complex e1 = std::polar(1.0, u1 * a), e2 = std::polar(1.0, u2 * a);
            const Complex s1 = std::polar(1.0, -u1 * c * h), s2 = std::polar(1.0, -u2 * c * h);
            for (std::size_t l = 0; l + d < n; ++l) {
                Complex kval = weight * (abs_ramp_integral(u2, a, e2) - abs_ramp_integral(u1, a, e1));
                rho(l + d, l) += kval;
                if (d > 0) rho(l, l + d) += std::conj(kval);
                a -= c * h;
                e1 *= s1;
                e2 *= s2;
            }
        }
    }
    return out;
}

}  // namespace symtomo
