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

#include "symtomo/moments.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "symtomo/error.hpp"

namespace symtomo {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double moment(std::span<const double> slice, const AxisGrid &x_axis, int n) {
    if (n < 0) throw_validation("invalid-argument", "moment order must be >= 0");
    if (n > 8) throw_numeric("tail-accuracy", "moments above order 8 are dominated by tail truncation");
    if (slice.size() != x_axis.n()) throw_validation("dimension", "moment: slice length does not match axis");
    std::vector<double> f(slice.size());
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = std::pow(x_axis[k], n) * slice[k];
    return integrate_1d(f, x_axis);
}

MomentTable moment_table(std::span<const double> slice, const AxisGrid &x_axis, const FrameParameters &frame,
                         int n_max) {
    MomentTable t{frame, {}};
    for (int n = 0; n <= n_max; ++n) t.moments.push_back(moment(slice, x_axis, n));
    return t;
}

GeneratingSample generating_function(const WignerSpectrum &spectrum, double lambda, const FrameParameters &frame) {
    validate_frame(frame);
    GeneratingSample s{lambda, frame, {}, {}, true, {}};
    const double a = lambda * frame.mu, b = lambda * frame.nu;
    const Complex shift = std::polar(kTwoPi, lambda * frame.delta);
    s.value = shift * spectrum.direct(a, b);
    if (auto v = spectrum.lookup(a, b)) {
        s.spectral = shift * *v;
    } else {
        s.spectral_ok = false;
        std::ostringstream os;
        os << "(" << a << ", " << b << ") lies outside the conjugate grid; spectral cross-check skipped";
        s.warning = os.str();
    }
    return s;
}

ComplexField2D generating_grid(const ScalarField2D &wigner, const AxisGrid &mu, const AxisGrid &nu) {
    const auto &qa = wigner.axis0();
    const auto &pa = wigner.axis1();
    Eigen::MatrixXcd eq(mu.n(), qa.n()), ep(pa.n(), nu.n());
    for (std::size_t i = 0; i < mu.n(); ++i)
        for (std::size_t a = 0; a < qa.n(); ++a) eq(i, a) = std::polar(1.0, mu[i] * qa[a]);
    for (std::size_t b = 0; b < pa.n(); ++b)
        for (std::size_t j = 0; j < nu.n(); ++j) ep(b, j) = std::polar(1.0, nu[j] * pa[b]);
    Eigen::MatrixXd w(qa.n(), pa.n());
    for (std::size_t a = 0; a < qa.n(); ++a)
        for (std::size_t b = 0; b < pa.n(); ++b) w(a, b) = wigner(a, b);
    Eigen::MatrixXcd g = eq * w.cast<Complex>() * ep;
    ComplexField2D out(mu, nu);
    const double scale = wigner.cell_area() / kTwoPi;
    for (std::size_t i = 0; i < mu.n(); ++i)
        for (std::size_t j = 0; j < nu.n(); ++j) out(i, j) = scale * g(i, j);
    return out;
}

ScalarField2D wigner_from_generating(const ComplexField2D &g, const PhaseSpaceGrid &grid) {
    const auto &mu = g.axis0();
    const auto &nu = g.axis1();
    double edge = 0.0;
    for (std::size_t i = 0; i < mu.n(); ++i) {
        edge = std::max({edge, std::abs(g(i, 0)), std::abs(g(i, nu.n() - 1))});
    }
    for (std::size_t j = 0; j < nu.n(); ++j) {
        edge = std::max({edge, std::abs(g(0, j)), std::abs(g(mu.n() - 1, j))});
    }
    if (edge >= 1e-10) {
        std::ostringstream os;
        os << "|G| reaches " << edge << " on the (mu, nu) boundary (need < 1e-10); widen the grid";
        throw_numeric("bandwidth", os.str());
    }
    auto wm = trapezoid_weights(mu);
    auto wn = trapezoid_weights(nu);
    Eigen::MatrixXcd a(grid.q.n(), mu.n()), b(nu.n(), grid.p.n()), gm(mu.n(), nu.n());
    for (std::size_t r = 0; r < grid.q.n(); ++r)
        for (std::size_t i = 0; i < mu.n(); ++i) a(r, i) = std::polar(wm[i], -mu[i] * grid.q[r]);
    for (std::size_t j = 0; j < nu.n(); ++j)
        for (std::size_t c = 0; c < grid.p.n(); ++c) b(j, c) = std::polar(wn[j], -nu[j] * grid.p[c]);
    for (std::size_t i = 0; i < mu.n(); ++i)
        for (std::size_t j = 0; j < nu.n(); ++j) gm(i, j) = g(i, j);
    Eigen::MatrixXcd w = a * gm * b;
    ScalarField2D out(grid.q, grid.p);
    for (std::size_t r = 0; r < grid.q.n(); ++r)
        for (std::size_t c = 0; c < grid.p.n(); ++c) out(r, c) = w(r, c).real() / kTwoPi;
    return out;
}

TaylorCheck generating_taylor(const WignerSpectrum &spectrum, const FrameParameters &frame, double h) {
    const Complex gp = generating_function(spectrum, h, frame).value;
    const Complex gm = generating_function(spectrum, -h, frame).value;
    const Complex g0 = generating_function(spectrum, 0.0, frame).value;
    const Complex d1 = (gp - gm) / (2.0 * h);
    const Complex d2 = (gp - 2.0 * g0 + gm) / (h * h);
    return {d1.imag(), -d2.real()};
}

}  // namespace symtomo
